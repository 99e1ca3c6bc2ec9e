#include "skewrack/braid.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace skewrack {

FramedBraid parse_braid(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("braid: missing ':'");
    FramedBraid b;
    try {
        size_t used = 0;
        b.strands = std::stoi(text.substr(0, colon), &used);
        while (used < colon)
            if (!isspace((unsigned char)text[used++])) throw std::invalid_argument("strand count");
    } catch (const std::exception&) {
        throw std::invalid_argument("braid: bad strand count");
    }
    if (b.strands < 1) throw std::invalid_argument("braid: strands must be >= 1");
    std::istringstream in(text.substr(colon + 1));
    std::string tok;
    while (in >> tok) {
        int w;
        try {
            size_t used = 0;
            w = std::stoi(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw std::invalid_argument("braid: bad letter '" + tok + "'");
        }
        if (w == 0) throw std::invalid_argument("braid: zero letter");
        int pos = (w > 0 ? w : -w) - 1;
        if (pos >= b.strands - 1) throw std::invalid_argument("braid: position out of range");
        b.letters.push_back({pos, w > 0 ? 1 : -1});
    }
    return b;
}

std::string serialize_braid(const FramedBraid& b) {
    std::string s = std::to_string(b.strands) + ":";
    for (const auto& l : b.letters) s += " " + std::to_string(l.sign * (l.pos + 1));
    return s;
}

DiagramStats closure_stats(const FramedBraid& b) {
    const int s = b.strands;
    // strand permutation: where does the strand at top position p exit
    std::vector<int> perm(s);
    std::iota(perm.begin(), perm.end(), 0);
    // strand_at[j]: index of the strand currently at position j
    std::vector<int> strand_at(s);
    std::iota(strand_at.begin(), strand_at.end(), 0);

    DiagramStats st;
    st.comp_of_strand.assign(s, -1);

    // components = cycles of the closure permutation
    std::vector<int> exit_pos(s);
    {
        std::vector<int> at(s);
        std::iota(at.begin(), at.end(), 0);
        for (const auto& l : b.letters) std::swap(at[l.pos], at[l.pos + 1]);
        // at[j] = strand ending at bottom position j; closure joins bottom j to top j
        for (int j = 0; j < s; ++j) exit_pos[at[j]] = j;
    }
    int nc = 0;
    for (int p = 0; p < s; ++p) {
        if (st.comp_of_strand[p] >= 0) continue;
        std::vector<int> cyc;
        int q = p;
        do {
            st.comp_of_strand[q] = nc;
            cyc.push_back(q);
            q = exit_pos[q];  // strand q ends at bottom exit_pos[q] = top of next strand
        } while (q != p);
        std::sort(cyc.begin(), cyc.end());
        st.component_positions.push_back(std::move(cyc));
        ++nc;
    }
    st.components = nc;
    st.crossings = (int)b.letters.size();

    std::vector<std::vector<long long>> cross(nc, std::vector<long long>(nc, 0));
    for (const auto& l : b.letters) {
        int a = strand_at[l.pos], c = strand_at[l.pos + 1];
        cross[st.comp_of_strand[a]][st.comp_of_strand[c]] += l.sign;
        if (st.comp_of_strand[a] != st.comp_of_strand[c])
            cross[st.comp_of_strand[c]][st.comp_of_strand[a]] += l.sign;
        std::swap(strand_at[l.pos], strand_at[l.pos + 1]);
    }

    st.framings.assign(nc, 0);
    st.linking.assign(nc, std::vector<long long>(nc, 0));
    for (int i = 0; i < nc; ++i) {
        st.framings[i] = cross[i][i];
        st.linking[i][i] = cross[i][i];
        for (int j = 0; j < nc; ++j)
            if (i != j) {
                if (cross[i][j] % 2 != 0) throw std::runtime_error("odd inter-component crossing sum");
                st.linking[i][j] = cross[i][j] / 2;
            }
    }
    return st;
}

FramedBraid stabilize(const FramedBraid& b, int sign) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("stabilization sign must be +-1");
    FramedBraid out = b;
    out.strands += 1;
    out.letters.push_back({b.strands - 1, sign});
    return out;
}

FramedBraid add_framing_kinks(const FramedBraid& b, int component, int count, int sign) {
    DiagramStats st = closure_stats(b);
    if (component < 0 || component >= st.components)
        throw std::invalid_argument("unknown component");
    if (count == 0) return b;
    if (count < 0) throw std::invalid_argument("kink count must be >= 0");
    if (sign != 1 && sign != -1) throw std::invalid_argument("kink sign must be +-1");

    FramedBraid out = b;
    // bottom position owned by the target component (cycle positions are
    // both top and bottom labels of the closure)
    int j = st.component_positions[component][0];
    const int s = out.strands;
    // transport the strand ending at bottom j out to the boundary, kink it,
    // and bring the new strand back; the paired runs cancel in all stats
    for (int i = j; i <= s - 2; ++i) out.letters.push_back({i, +1});
    out.letters.push_back({s - 1, sign});
    out.strands += 1;
    for (int i = s - 2; i >= j; --i) out.letters.push_back({i, -1});
    // the kinked component now owns the last bottom position
    for (int c = 1; c < count; ++c) {
        out.letters.push_back({out.strands - 1, sign});
        out.strands += 1;
    }
    return out;
}

FramedBraid build_unknot(int framing) {
    FramedBraid b;
    b.strands = 1;
    if (framing == 0) return b;
    return add_framing_kinks(b, 0, framing > 0 ? framing : -framing, framing > 0 ? 1 : -1);
}

FramedBraid build_hopf(int n, int m) {
    FramedBraid b;
    b.strands = 2;
    b.letters = {{0, 1}, {0, 1}};
    // kinks keep their component's least position, so the indices (0,1)
    // stay stable across both rounds
    if (n != 0) b = add_framing_kinks(b, 0, n > 0 ? n : -n, n > 0 ? 1 : -1);
    if (m != 0) b = add_framing_kinks(b, 1, m > 0 ? m : -m, m > 0 ? 1 : -1);
    return b;
}

FramedBraid build_torus2(int n, int framing) {
    if (n < 1 || n % 2 == 0) throw std::invalid_argument("(2,n) torus knot needs odd n >= 1");
    FramedBraid b;
    b.strands = 2;
    for (int i = 0; i < n; ++i) b.letters.push_back({0, 1});
    int d = framing - n;
    if (d != 0) b = add_framing_kinks(b, 0, d > 0 ? d : -d, d > 0 ? 1 : -1);
    return b;
}

std::vector<long long> negative_continued_fraction(long long p, long long q) {
    if (p <= 0 || q <= 0 || q >= p || std::gcd(p, q) != 1)
        throw std::invalid_argument("need 0 < q < p coprime");
    std::vector<long long> terms;
    while (q > 0) {
        long long a = (p + q - 1) / q;  // ceil(p/q)
        terms.push_back(a);
        long long np = q, nq = a * q - p;
        p = np;
        q = nq;
    }
    return terms;
}

FramedBraid build_lens_chain(long long p, long long q) {
    std::vector<long long> a = negative_continued_fraction(p, q);
    const int k = (int)a.size();
    FramedBraid b;
    b.strands = k;
    for (int i = 0; i + 1 < k; ++i) {
        b.letters.push_back({i, 1});
        b.letters.push_back({i, 1});
    }
    // chain of k unknots, consecutive ones linked once; now set framings,
    // processing whichever component is still unframed (all continued
    // fraction terms are >= 2, so framing 0 marks the unprocessed ones)
    for (int i = 0; i < k; ++i) {
        DiagramStats st = closure_stats(b);
        int target = -1;
        for (int ci = 0; ci < st.components; ++ci)
            if (st.framings[ci] == 0) { target = ci; break; }
        if (target < 0) throw std::runtime_error("lens chain framing bookkeeping failed");
        b = add_framing_kinks(b, target, (int)a[i], +1);
    }
    return b;
}

std::pair<FramedBraid, FramedBraid> build_fr_pair(const FramedBraid& b, int n, int sign) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +-1");
    if (n < 0 || n > b.strands) throw std::invalid_argument("n out of range");
    const int s = b.strands;

    // D: circle strand added at position s, threaded around strands 0..n-1,
    // then stabilized once to pick up the +-1 framing.
    FramedBraid D = b;
    D.strands = s + 1;
    if (n == 0) {
        // disjoint unknot with framing `sign`
        D = stabilize(D, sign);
    } else {
        for (int i = s - 1; i >= n; --i) D.letters.push_back({i, +1});  // transport in
        for (int i = n - 1; i >= 0; --i) D.letters.push_back({i, +1});  // sweep left
        for (int i = 0; i <= n - 1; ++i) D.letters.push_back({i, +1});  // sweep right
        for (int i = n; i <= s - 1; ++i) D.letters.push_back({i, -1});  // transport out
        D = stabilize(D, sign);
    }

    // D': opposite full twist on strands 0..n-1, plus one -sign kink per
    // strand passage (blackboard framing of the twist region).
    FramedBraid Dp = b;
    if (n >= 2) {
        for (int rep = 0; rep < n; ++rep) {
            if (sign > 0)
                for (int i = n - 2; i >= 0; --i) Dp.letters.push_back({i, -1});
            else
                for (int i = 0; i <= n - 2; ++i) Dp.letters.push_back({i, +1});
        }
    }
    if (n >= 1) {
        DiagramStats st = closure_stats(b);
        std::vector<int> passes(st.components, 0);
        for (int p = 0; p < n; ++p) ++passes[st.comp_of_strand[p]];
        // kink counts per component; add_framing_kinks re-derives component
        // indices, which stay stable because kinks only append tail strands
        for (int c = 0; c < st.components; ++c)
            if (passes[c] > 0) {
                DiagramStats cur = closure_stats(Dp);
                // match component by its set of original positions
                int idx = -1;
                for (int ci = 0; ci < cur.components; ++ci)
                    if (cur.component_positions[ci][0] == st.component_positions[c][0]) {
                        idx = ci;
                        break;
                    }
                if (idx < 0) throw std::runtime_error("component tracking failed");
                Dp = add_framing_kinks(Dp, idx, passes[c], -sign);
            }
    }
    return {D, Dp};
}

// --- rewrites ---------------------------------------------------------------

FramedBraid rewrite_rii_insert(const FramedBraid& b, size_t at, int pos, int sign) {
    if (at > b.letters.size()) throw std::invalid_argument("slot out of range");
    if (pos < 0 || pos >= b.strands - 1) throw std::invalid_argument("position out of range");
    FramedBraid out = b;
    out.letters.insert(out.letters.begin() + at, {BraidLetter{pos, sign}, BraidLetter{pos, -sign}});
    return out;
}

bool rii_deletable(const FramedBraid& b, size_t at) {
    return at + 1 < b.letters.size() && b.letters[at].pos == b.letters[at + 1].pos &&
           b.letters[at].sign == -b.letters[at + 1].sign;
}

FramedBraid rewrite_rii_delete(const FramedBraid& b, size_t at) {
    if (!rii_deletable(b, at)) throw std::invalid_argument("not a cancelling pair");
    FramedBraid out = b;
    out.letters.erase(out.letters.begin() + at, out.letters.begin() + at + 2);
    return out;
}

bool far_commutable(const FramedBraid& b, size_t at) {
    if (at + 1 >= b.letters.size()) return false;
    int d = b.letters[at].pos - b.letters[at + 1].pos;
    return d >= 2 || d <= -2;
}

FramedBraid rewrite_far_commute(const FramedBraid& b, size_t at) {
    if (!far_commutable(b, at)) throw std::invalid_argument("letters interact");
    FramedBraid out = b;
    std::swap(out.letters[at], out.letters[at + 1]);
    return out;
}

bool riii_applicable(const FramedBraid& b, size_t at) {
    if (at + 2 >= b.letters.size()) return false;
    const auto& u = b.letters[at];
    const auto& v = b.letters[at + 1];
    const auto& w = b.letters[at + 2];
    if (u.sign != v.sign || v.sign != w.sign) return false;
    return (u.pos == w.pos) && (v.pos == u.pos + 1 || v.pos + 1 == u.pos);
}

FramedBraid rewrite_riii(const FramedBraid& b, size_t at) {
    if (!riii_applicable(b, at)) throw std::invalid_argument("no braid-relation site");
    FramedBraid out = b;
    std::swap(out.letters[at].pos, out.letters[at + 1].pos);
    out.letters[at + 2].pos = out.letters[at].pos;  // (i,j,i) -> (j,i,j)
    return out;
}

FramedBraid random_word(std::mt19937& rng, int max_strands, int max_letters) {
    FramedBraid b;
    b.strands = 1 + (int)(rng() % (unsigned)max_strands);
    int len = (int)(rng() % (unsigned)(max_letters + 1));
    if (b.strands == 1) len = 0;
    for (int i = 0; i < len; ++i)
        b.letters.push_back({(int)(rng() % (unsigned)(b.strands - 1)), rng() % 2 ? 1 : -1});
    return b;
}

FramedBraid random_rewrite(std::mt19937& rng, const FramedBraid& b) {
    switch (rng() % 4) {
        case 0: {  // RII insert
            if (b.strands < 2) return b;
            size_t at = rng() % (b.letters.size() + 1);
            return rewrite_rii_insert(b, at, (int)(rng() % (unsigned)(b.strands - 1)),
                                      rng() % 2 ? 1 : -1);
        }
        case 1: {  // RII delete at a random deletable site
            std::vector<size_t> sites;
            for (size_t i = 0; i + 1 < b.letters.size(); ++i)
                if (rii_deletable(b, i)) sites.push_back(i);
            if (sites.empty()) return b;
            return rewrite_rii_delete(b, sites[rng() % sites.size()]);
        }
        case 2: {
            std::vector<size_t> sites;
            for (size_t i = 0; i + 1 < b.letters.size(); ++i)
                if (far_commutable(b, i)) sites.push_back(i);
            if (sites.empty()) return b;
            return rewrite_far_commute(b, sites[rng() % sites.size()]);
        }
        default: {
            std::vector<size_t> sites;
            for (size_t i = 0; i + 2 < b.letters.size(); ++i)
                if (riii_applicable(b, i)) sites.push_back(i);
            if (sites.empty()) return b;
            return rewrite_riii(b, sites[rng() % sites.size()]);
        }
    }
}

} // namespace skewrack
