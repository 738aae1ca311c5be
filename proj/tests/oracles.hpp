// Independent test oracles: brute-force counterparts of library algorithms.
// These deliberately avoid the implementation paths they check.
#ifndef SCLGP_TESTS_ORACLES_HPP
#define SCLGP_TESTS_ORACLES_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "sclgp/lp.hpp"
#include "sclgp/prng.hpp"
#include "sclgp/qm.hpp"
#include "sclgp/word.hpp"

namespace sclgp::oracle {

// --- graphs ------------------------------------------------------------------

// Is the induced subgraph on `s` isomorphic to Delta_m (m = |s|-1)? True iff
// its complement is a simple path through all |s| vertices.
inline bool subset_is_delta(const SimplicialGraph& g, const std::vector<std::size_t>& s) {
    const std::size_t k = s.size();
    if (k < 2) return false;
    auto nonadj = [&](std::size_t a, std::size_t b) { return !g.adjacent(s[a], s[b]); };
    // Complement degree sequence: path needs exactly two endpoints of degree
    // one, the rest two, and connectivity.
    std::vector<int> deg(k, 0);
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = a + 1; b < k; ++b)
            if (nonadj(a, b)) {
                ++deg[a];
                ++deg[b];
            }
    int ones = 0;
    for (std::size_t a = 0; a < k; ++a) {
        if (deg[a] == 1)
            ++ones;
        else if (deg[a] != 2)
            return false;
    }
    if (ones != 2) return false;
    std::size_t edges = 0;
    for (std::size_t a = 0; a < k; ++a) edges += static_cast<std::size_t>(deg[a]);
    if (edges != 2 * (k - 1)) return false;
    // Connectivity of the complement graph on s.
    std::vector<bool> seen(k, false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
        std::size_t a = stack.back();
        stack.pop_back();
        for (std::size_t b = 0; b < k; ++b)
            if (!seen[b] && nonadj(a, b)) {
                seen[b] = true;
                stack.push_back(b);
            }
    }
    return std::all_of(seen.begin(), seen.end(), [](bool x) { return x; });
}

// Delta(g) by enumerating all vertex subsets; graphs up to ~12 vertices.
inline int brute_delta(const SimplicialGraph& g) {
    const std::size_t n = g.size();
    int best = 0;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1u << i)) s.push_back(i);
        if (s.size() >= 2 && subset_is_delta(g, s)) best = std::max(best, int(s.size()) - 1);
    }
    return best;
}

// --- words -------------------------------------------------------------------

// Minimal syllable length over all words equal to w, by breadth-first search
// over shuffle/merge/delete rewriting moves. Exponential; tiny words only.
inline std::size_t bfs_min_syllables(const Presentation& p, const Word& w) {
    std::set<Word> seen;
    std::vector<Word> queue{w};
    seen.insert(w);
    std::size_t best = w.size();
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const Word cur = queue[head];
        best = std::min(best, cur.size());
        auto push = [&](Word nxt) {
            if (seen.insert(nxt).second) queue.push_back(std::move(nxt));
        };
        for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
            if (cur[i].vertex == cur[i + 1].vertex) {  // merge
                Word nxt = cur;
                Letter m = letter_mul(p, nxt[i], nxt[i + 1]);
                nxt.erase(nxt.begin() + long(i), nxt.begin() + long(i) + 2);
                if (!letter_is_identity(p, m)) nxt.insert(nxt.begin() + long(i), m);
                push(std::move(nxt));
            } else if (p.adjacent(cur[i].vertex, cur[i + 1].vertex)) {  // shuffle
                Word nxt = cur;
                std::swap(nxt[i], nxt[i + 1]);
                push(std::move(nxt));
            }
        }
    }
    return best;
}

// All nonempty reduced words with at most `max_syll` syllables whose letters
// come from `alphabet`, used as a conjugator search space.
inline void enumerate_words(const Presentation& p, const std::vector<Letter>& alphabet,
                            std::size_t max_syll, std::vector<Word>& out) {
    std::vector<Word> frontier{Word{}};
    for (std::size_t len = 1; len <= max_syll; ++len) {
        std::vector<Word> next;
        for (const auto& w : frontier)
            for (const auto& l : alphabet) {
                Word cand = w;
                cand.push_back(l);
                if (normalize(p, cand).size() == cand.size()) {
                    out.push_back(cand);
                    next.push_back(cand);
                }
            }
        frontier = std::move(next);
    }
}

// Conjugacy by brute-force conjugator search over short words.
inline bool brute_conjugate(const Presentation& p, const Word& a, const Word& b,
                            std::size_t max_syll = 4) {
    if (equal(p, a, b)) return true;
    std::vector<Letter> alphabet;
    for (std::size_t v = 0; v < p.size(); ++v) {
        const auto& k = p.kind(v);
        if (k.type == KindType::Free) {
            for (int i = 1; i <= k.rank; ++i) {
                alphabet.push_back(make_letter(p, v, {0, {i}}));
                alphabet.push_back(make_letter(p, v, {0, {-i}}));
            }
        } else {
            alphabet.push_back(make_letter(p, v, {1, {}}));
            if (k.type == KindType::InfiniteCyclic) alphabet.push_back(make_letter(p, v, {-1, {}}));
        }
    }
    std::vector<Word> hs;
    enumerate_words(p, alphabet, max_syll, hs);
    for (const auto& h : hs)
        if (equal(p, conjugate(p, h, a), b)) return true;
    return false;
}

// --- rational linear algebra for the LP oracle -------------------------------

// Solve M z = rhs exactly; nullopt when singular.
inline std::optional<std::vector<Rat>> gauss_solve(std::vector<std::vector<Rat>> M,
                                                   std::vector<Rat> rhs) {
    const std::size_t n = M.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && M[piv][col] == 0) ++piv;
        if (piv == n) return std::nullopt;
        std::swap(M[piv], M[col]);
        std::swap(rhs[piv], rhs[col]);
        const Rat inv = 1 / M[col][col];
        for (auto& x : M[col]) x *= inv;
        rhs[col] *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || M[r][col] == 0) continue;
            const Rat f = M[r][col];
            for (std::size_t c = 0; c < n; ++c) M[r][c] -= f * M[col][c];
            rhs[r] -= f * rhs[col];
        }
    }
    return rhs;
}

// Maximum of c.x over all basic feasible solutions of Ax <= b, x >= 0
// (vertices of the polyhedron found by activating n constraints from
// {rows} U {x_j = 0}). Returns nullopt when no feasible basic point exists.
// Independent of the simplex implementation.
inline std::optional<Rat> brute_lp_max(const RationalLP& lp) {
    const std::size_t n = lp.objective.size(), m = lp.rows.size();
    std::vector<std::vector<Rat>> all_rows = lp.rows;
    std::vector<Rat> all_rhs = lp.rhs;
    for (std::size_t j = 0; j < n; ++j) {  // x_j >= 0 as -x_j <= 0
        std::vector<Rat> row(n, Rat(0));
        row[j] = -1;
        all_rows.push_back(std::move(row));
        all_rhs.emplace_back(0);
    }
    const std::size_t total = m + n;
    std::optional<Rat> best;
    std::vector<std::size_t> pick(n);
    // Enumerate n-subsets of the constraint set.
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    auto consider = [&](const std::vector<std::size_t>& sel) {
        std::vector<std::vector<Rat>> M;
        std::vector<Rat> rhs;
        for (std::size_t r : sel) {
            M.push_back(all_rows[r]);
            rhs.push_back(all_rhs[r]);
        }
        auto x = gauss_solve(std::move(M), std::move(rhs));
        if (!x) return;
        for (std::size_t j = 0; j < n; ++j)
            if ((*x)[j] < 0) return;
        for (std::size_t r = 0; r < m; ++r) {
            Rat ax(0);
            for (std::size_t j = 0; j < n; ++j) ax += lp.rows[r][j] * (*x)[j];
            if (ax > lp.rhs[r]) return;
        }
        Rat val(0);
        for (std::size_t j = 0; j < n; ++j) val += lp.objective[j] * (*x)[j];
        if (!best || val > *best) best = val;
    };
    if (n == 0) return Rat(0);
    for (;;) {
        consider(idx);
        std::size_t i = n;
        while (i > 0 && idx[i - 1] == total - n + i - 1) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t k = i; k < n; ++k) idx[k] = idx[k - 1] + 1;
    }
    return best;
}

// --- random structures --------------------------------------------------------

inline Presentation random_presentation(Prng& rng, int max_vertices = 5, bool allow_free = true) {
    const int n = int(rng.next_range(1, max_vertices));
    SimplicialGraph g = random_graph(n, 0.4, rng.next_u64());
    std::vector<VertexKind> kinds;
    for (int i = 0; i < n; ++i) {
        switch (rng.next_range(0, allow_free ? 2 : 1)) {
            case 0:
                kinds.push_back(VertexKind::Z());
                break;
            case 1:
                kinds.push_back(VertexKind::Zn(int(rng.next_range(2, 5))));
                break;
            default:
                kinds.push_back(VertexKind::F(int(rng.next_range(1, 2))));
                break;
        }
    }
    return Presentation(std::move(g), std::move(kinds));
}

inline Word random_word(const Presentation& p, Prng& rng, int max_syll = 6) {
    Word w;
    const long long len = rng.next_range(0, max_syll);
    for (long long i = 0; i < len; ++i) {
        const std::size_t v = rng.next_below(p.size());
        w.push_back(make_letter(p, v, random_vertex_elem(p, v, rng, 3)));
    }
    return w;
}

inline Word random_nontrivial_word(const Presentation& p, Prng& rng, int max_syll = 6) {
    for (;;) {
        Word w = normalize(p, random_word(p, rng, max_syll));
        if (!w.empty()) return w;
    }
}

}  // namespace sclgp::oracle

#endif
