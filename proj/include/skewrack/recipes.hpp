#pragma once

#include <memory>
#include <string>

#include "skewrack/constructions.hpp"

namespace skewrack {

// Objects built from command-line recipe strings.  A rack recipe owns
// everything its rack refers to; a cocycle recipe additionally owns the
// cocycle, whose rack pointer targets the bundled rack.
struct RackRecipe {
    SkewRack rack;
    std::string text;
    // populated for normal_pair/product families (criterion support)
    std::shared_ptr<NormalPairRack> pair;
};

struct CocycleRecipe {
    std::shared_ptr<ModPCocycle> mod_p;
    std::shared_ptr<Z2Cocycle> z2;
    std::shared_ptr<RackRecipe> file_rack;  // rack a file cocycle binds to
    BirackCocycle phi;
    std::string text;

    const SkewRack& rack() const { return *phi.rack; }
};

// Grammar:
//   group   := cyclic:<m> | sym:<k> | sl2p:<p> | alt:<k> | s<k> | a<k>
//   rack    := product:K=<group>,f=id
//            | normal_pair:K=<group>,N=<group>,f=id
//            | conj:G=<group>,kappa=id|neg
//            | file:<path>
//   cocycle := prop28:p=<p>,eps=<+1|-1> | z2:<k1>,<k2>,<k3> | file:<path>
// A file cocycle needs the rack recipe it applies to.
std::shared_ptr<RackRecipe> parse_rack_recipe(const std::string& text);
std::shared_ptr<CocycleRecipe> parse_cocycle_recipe(const std::string& text,
                                                    std::shared_ptr<RackRecipe> rack);

// Group spec used inside rack recipes ("cyclic:5", "sym:3", "sl2p:7", "s3").
FiniteGroup parse_group_spec(const std::string& text);

} // namespace skewrack
