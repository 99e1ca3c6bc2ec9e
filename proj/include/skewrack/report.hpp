#pragma once

#include <string>
#include <vector>

namespace skewrack {

// Outcome of an exhaustive verification pass.  Deterministic: loops scan
// indices in order (or reduce to the lowest failing index), so the witness
// is the lexicographically first counterexample.
struct CheckReport {
    bool passed = true;
    std::string axiom;               // label of the violated law, empty when passed
    std::vector<long long> witness;  // element indices pinning the violation

    static CheckReport ok() { return CheckReport{}; }
    static CheckReport fail(std::string ax, std::vector<long long> w) {
        CheckReport r;
        r.passed = false;
        r.axiom = std::move(ax);
        r.witness = std::move(w);
        return r;
    }

    std::string describe() const {
        if (passed) return "ok";
        std::string s = axiom + " fails at (";
        for (size_t i = 0; i < witness.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(witness[i]);
        }
        return s + ")";
    }
};

} // namespace skewrack
