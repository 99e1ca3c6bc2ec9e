#pragma once

#include <random>
#include <string>
#include <utility>
#include <vector>

namespace skewrack {

// Framed closed braid: s strands, word of signed generators.  Positions are
// 0-based internally (letter at position i couples strands i and i+1); the
// text format is 1-based: "s: w1 w2 ..." with sign(wj) the crossing sign
// and |wj| the generator index.
struct BraidLetter {
    int pos;   // 0 .. strands-2
    int sign;  // +1 or -1
};

struct FramedBraid {
    int strands = 1;
    std::vector<BraidLetter> letters;
};

FramedBraid parse_braid(const std::string& text);
std::string serialize_braid(const FramedBraid& b);

// Closure data: components are cycles of the word permutation, ordered by
// least strand position.  Framing of a component is its self-writhe; the
// linking matrix carries framings on the diagonal and half the sum of
// inter-component crossing signs off it.
struct DiagramStats {
    int components = 0;
    std::vector<std::vector<int>> component_positions;
    std::vector<int> comp_of_strand;
    std::vector<long long> framings;
    std::vector<std::vector<long long>> linking;
    int crossings = 0;
};

DiagramStats closure_stats(const FramedBraid& b);

// Markov stabilization: one strand and one kink crossing appended; the
// component through the last strand position picks up +-1 framing.
FramedBraid stabilize(const FramedBraid& b, int sign);

// Adds `count` kinks of the given sign to one component (0-based index in
// closure_stats order).  The first kink transports the component's strand
// to the boundary with a cancelling pair of crossing runs, so all other
// stats are untouched and coloring propagation stays forced.
FramedBraid add_framing_kinks(const FramedBraid& b, int component, int count, int sign);

FramedBraid build_unknot(int framing);
FramedBraid build_hopf(int n, int m);                 // Hopf link, framings (n, m)
FramedBraid build_torus2(int n, int framing);         // (2,n) torus knot, n odd
FramedBraid build_lens_chain(long long p, long long q);  // 0 < q < p coprime

// Negative continued fraction p/q = a1 - 1/(a2 - ...), all ai >= 2.
std::vector<long long> negative_continued_fraction(long long p, long long q);

// Fenn-Rourke pair: D adds a +-1-framed circle around strands 0..n-1 of b;
// D' applies the opposite full twist to those strands, with one opposite
// kink per strand passage so the blackboard framings match the move.
std::pair<FramedBraid, FramedBraid> build_fr_pair(const FramedBraid& b, int n, int sign);

// --- word rewrites (isotopies of the closure) -----------------------------

// Insert a cancelling pair sigma_i^e sigma_i^-e at slot `at`.
FramedBraid rewrite_rii_insert(const FramedBraid& b, size_t at, int pos, int sign);
// Delete letters at/at+1 when they are a cancelling pair.
bool rii_deletable(const FramedBraid& b, size_t at);
FramedBraid rewrite_rii_delete(const FramedBraid& b, size_t at);
// Swap adjacent letters with |pos difference| >= 2.
bool far_commutable(const FramedBraid& b, size_t at);
FramedBraid rewrite_far_commute(const FramedBraid& b, size_t at);
// sigma_i sigma_{i+1} sigma_i <-> sigma_{i+1} sigma_i sigma_{i+1}, uniform sign.
bool riii_applicable(const FramedBraid& b, size_t at);
FramedBraid rewrite_riii(const FramedBraid& b, size_t at);

// Seeded random word and a seeded random rewrite step (returns b unchanged
// when the drawn rewrite has no applicable site).
FramedBraid random_word(std::mt19937& rng, int max_strands, int max_letters);
FramedBraid random_rewrite(std::mt19937& rng, const FramedBraid& b);

} // namespace skewrack
