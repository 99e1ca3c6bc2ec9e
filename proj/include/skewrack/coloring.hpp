#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "skewrack/braid.hpp"
#include "skewrack/rational.hpp"
#include "skewrack/report.hpp"
#include "skewrack/skew_rack.hpp"

namespace skewrack {

// A coloring of the closure of a braid: colors of the top semi-arcs plus
// the four semi-arc colors around every crossing.
struct Coloring {
    struct Arc {
        int in_l, in_r, out_l, out_r;
    };
    std::vector<int> top;
    std::vector<Arc> crossings;
};

// Compiled enumeration plan for one braid, independent of the rack.
//
// Semi-arcs are unified along strands and around the closure; each crossing
// contributes two relations (the kappa rule and the operation rule).  The
// compiler replays constraint propagation symbolically, computes a branch
// set of top colors that reaches every semi-arc, and minimizes it by
// dropping any variable the others derive.  Stabilization-added strands
// therefore never enter the branch set; for builder outputs it stays at
// the core strands (plus the encircling component of a Fenn-Rourke pair)
// or below, when closure equations recover further tops.
struct EnumerationPlan {
    enum Opcode : uint8_t {
        kKappa,     // dst = kappa(s1)
        kKappaInv,  // dst = kappa^-1(s1)
        kOp,        // dst = s1 <| s2
        kOpInv,     // dst = s1 <|^-1 s2
    };
    struct Step {
        Opcode op;
        uint8_t is_check;  // compare against dst instead of assigning
        int32_t dst, s1, s2;
    };
    struct Crossing {
        int32_t in_l, in_r, out_l, out_r;
        int32_t sign;
    };

    int n_vars = 0;
    std::vector<int> top_vars;              // canonical var of each top position
    std::vector<Crossing> crossings;        // canonical vars per letter
    std::vector<int> branch_vars;
    std::vector<std::vector<Step>> steps;   // steps[d] runs after branch d is set
    long long steps_per_leaf = 0;
};

EnumerationPlan compile_plan(const FramedBraid& b);

struct ScanOptions {
    long long budget = 10'000'000'000LL;  // propagation steps
    int threads = 0;                      // 0 = OpenMP default
    bool parallel = true;
};

class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(long long done, long long total, long long budget)
        : std::runtime_error("coloring budget exceeded after " + std::to_string(done) +
                             " of " + std::to_string(total) + " outer branches (budget " +
                             std::to_string(budget) + " steps)") {}
};

// Number of closure colorings.  The parallel kernel partitions the
// outermost branch; counts are integer sums, so the result is independent
// of scheduling and thread count.
long long count_colorings(const SkewRack& X, const FramedBraid& b, const ScanOptions& opt = {});
// Reference kernel: same plan executed on one thread.
long long count_colorings_serial(const SkewRack& X, const FramedBraid& b,
                                 const ScanOptions& opt = {});

// |Col| / |Ann(X)|^{#components}; errors when Ann(X) is empty.
Rational normalized_count(const SkewRack& X, const FramedBraid& b, const ScanOptions& opt = {});

// Materializes all colorings (serial, deterministic lexicographic order in
// the branch values).
std::vector<Coloring> enumerate_colorings(const SkewRack& X, const FramedBraid& b,
                                          const ScanOptions& opt = {});

// Streaming form used by the weight accumulators.
void for_each_coloring(const SkewRack& X, const FramedBraid& b,
                       const std::function<void(const Coloring&)>& fn,
                       const ScanOptions& opt = {});

// Histogram of phi-weights over all colorings: hist[a] = #{ colorings with
// total weight a }, phi given as a dense n*n table of coefficient indices
// with |A| = coeff_order.  add/neg are the coefficient tables.
std::vector<long long> weight_histogram(const SkewRack& X, const FramedBraid& b,
                                        const std::vector<int>& phi_table, int coeff_order,
                                        const std::vector<int>& coeff_add,
                                        const std::vector<int>& coeff_neg,
                                        const ScanOptions& opt = {});

// Re-checks one coloring against the crossing rules and closure condition
// directly from the rack tables, independent of the plan machinery.
CheckReport validate_coloring(const SkewRack& X, const FramedBraid& b, const Coloring& c);

// One crossing applied to the pair of colors entering it from above:
// positive (u,v) -> (kappa(v), u <| v); negative is the stacked inverse.
std::pair<int, int> slice_apply(const SkewRack& X, int sign, int left, int right);

// Forward propagation of a full top tuple; true iff it closes up.  This is
// the brute-force oracle the solver is tested against.
bool colors_close(const SkewRack& X, const FramedBraid& b, const std::vector<int>& top,
                  std::vector<Coloring::Arc>* trace = nullptr);

} // namespace skewrack
