#include "sclgp/factor.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace sclgp {

namespace {

// Connected components of the complement of the induced subgraph on `verts`.
std::vector<std::set<std::size_t>> opp_components(const Presentation& p,
                                                  const std::set<std::size_t>& verts) {
    std::vector<std::set<std::size_t>> comps;
    std::set<std::size_t> todo = verts;
    while (!todo.empty()) {
        std::set<std::size_t> comp;
        std::vector<std::size_t> stack{*todo.begin()};
        todo.erase(todo.begin());
        while (!stack.empty()) {
            std::size_t v = stack.back();
            stack.pop_back();
            comp.insert(v);
            for (auto it = todo.begin(); it != todo.end();) {
                if (!p.adjacent(v, *it)) {  // opposite-graph edge
                    stack.push_back(*it);
                    it = todo.erase(it);
                } else {
                    ++it;
                }
            }
        }
        comps.push_back(std::move(comp));
    }
    std::sort(comps.begin(), comps.end());
    return comps;
}

}  // namespace

PureFactor extract_root(const Presentation& p, const Word& w) {
    const std::size_t L = w.size();
    // Per-vertex letter subsequences are shuffle-invariant, so the first
    // count/e occurrences of each vertex, in word order, reconstruct the
    // candidate e-th root; verified by power-and-compare.
    for (long long e = static_cast<long long>(L); e >= 2; --e) {
        if (L % e != 0) continue;
        std::map<std::size_t, std::size_t> total, seen;
        for (const auto& l : w) ++total[l.vertex];
        bool divisible = true;
        for (const auto& [v, c] : total) divisible = divisible && (c % e == 0);
        if (!divisible) continue;
        Word cand;
        for (const auto& l : w)
            if (seen[l.vertex]++ < total[l.vertex] / e) cand.push_back(l);
        if (equal(p, power(p, cand, e), w)) return PureFactor{normalize(p, cand), e};
    }
    return PureFactor{normalize(p, w), 1};
}

PureFactorization pure_factor_decomposition(const Presentation& p, const Word& g) {
    const Word n = normalize(p, g);
    if (n.empty()) throw std::invalid_argument("pure_factor_decomposition: identity input");
    auto [conj, core] = cyclically_reduce(p, n);
    PureFactorization f;
    f.conjugator = conj;
    f.theta = support(p, core);
    for (const auto& comp : opp_components(p, f.theta)) {
        Word sub;
        for (const auto& l : core)
            if (comp.count(l.vertex)) sub.push_back(l);
        if (comp.size() == 1) {
            // All letters of a singleton component merge into one.
            const Word m = normalize(p, sub);
            if (m.size() != 1) throw std::logic_error("singleton factor did not merge");
            f.singleton_factors.push_back(m[0]);
        } else {
            f.pure_factors.push_back(extract_root(p, normalize(p, sub)));
        }
    }
    return f;
}

Word reassemble(const Presentation& p, const PureFactorization& f) {
    Word mid;
    for (const auto& l : f.singleton_factors) mid.push_back(l);
    for (const auto& pf : f.pure_factors) {
        const Word pw = power(p, pf.root, pf.exponent);
        mid.insert(mid.end(), pw.begin(), pw.end());
    }
    return mul(p, mul(p, f.conjugator, mid), inverse(p, f.conjugator));
}

bool conjugate_to_inverse(const Presentation& p, const Word& w) {
    return conjugate_cyclic(p, w, inverse(p, w));
}

namespace {

// Maximal root of a freely reduced word: conjugacy-reduce, take the literal
// period of the cyclic core, conjugate back.
std::vector<int> free_primitive_root(const std::vector<int>& w) {
    std::vector<int> pre, core = w;
    while (core.size() >= 2 && core.front() == -core.back()) {
        pre.push_back(core.front());
        core.erase(core.begin());
        core.pop_back();
    }
    std::vector<int> root = core;
    for (std::size_t r = 1; r <= core.size() / 2; ++r) {
        if (core.size() % r != 0) continue;
        bool periodic = true;
        for (std::size_t i = r; i < core.size() && periodic; ++i)
            periodic = core[i] == core[i - r];
        if (periodic) {
            root.assign(core.begin(), core.begin() + static_cast<long>(r));
            break;
        }
    }
    std::vector<int> out = pre;
    out.insert(out.end(), root.begin(), root.end());
    const std::vector<int> pre_inv = free_inverse(pre);
    out.insert(out.end(), pre_inv.begin(), pre_inv.end());
    return free_reduce(std::move(out));
}

}  // namespace

CentralizerDescription centralizer_description(const Presentation& p, const Word& g) {
    const PureFactorization f = pure_factor_decomposition(p, g);
    CentralizerDescription z;
    z.conjugator = f.conjugator;
    z.pure_factors = f.pure_factors;
    for (const auto& l : f.singleton_factors) {
        SingletonCentralizer sc;
        sc.factor = l;
        if (p.kind(l.vertex).type == KindType::Free) {
            sc.whole_vertex_group = false;
            sc.free_root = free_primitive_root(l.elem.fword);
        } else {
            sc.whole_vertex_group = true;  // cyclic vertex groups are abelian
        }
        z.singletons.push_back(std::move(sc));
    }
    for (std::size_t v = 0; v < p.size(); ++v) {
        if (f.theta.count(v)) continue;
        bool adj_all = true;
        for (std::size_t u : f.theta) adj_all = adj_all && p.adjacent(v, u);
        if (adj_all) z.dg.insert(v);
    }
    return z;
}

bool in_centralizer(const Presentation& p, const CentralizerDescription& z, const Word& h) {
    // Transport to the cyclically reduced core and split h' by support.
    const Word hp = mul(p, mul(p, inverse(p, z.conjugator), h), z.conjugator);
    std::vector<std::set<std::size_t>> comps;
    for (const auto& sc : z.singletons) comps.push_back({sc.factor.vertex});
    for (const auto& pf : z.pure_factors) comps.push_back(support(p, pf.root));
    Word zpart;
    std::vector<Word> pieces(comps.size());
    for (const auto& l : hp) {
        bool placed = false;
        for (std::size_t i = 0; i < comps.size() && !placed; ++i)
            if (comps[i].count(l.vertex)) {
                pieces[i].push_back(l);
                placed = true;
            }
        if (!placed) {
            if (!z.dg.count(l.vertex)) return false;
            zpart.push_back(l);
        }
    }
    // The support split must reassemble h' exactly.
    Word joined;
    for (const auto& w : pieces) joined.insert(joined.end(), w.begin(), w.end());
    joined.insert(joined.end(), zpart.begin(), zpart.end());
    if (!equal(p, joined, hp)) return false;
    for (std::size_t i = 0; i < z.singletons.size(); ++i) {
        const Word piece = normalize(p, pieces[i]);
        if (piece.empty()) continue;
        if (piece.size() != 1 || piece[0].vertex != z.singletons[i].factor.vertex) return false;
        if (!z.singletons[i].whole_vertex_group) {
            // Must be a power of the free root.
            const auto& root = z.singletons[i].free_root;
            const auto& target = piece[0].elem.fword;
            bool is_power = false;
            for (int s = 0; s < 2 && !is_power; ++s) {
                const auto dir = s == 0 ? root : free_inverse(root);
                std::vector<int> acc;
                for (int steps = 0; acc.size() < target.size() && steps <= 4096; ++steps)
                    acc = free_mul(acc, dir);
                is_power = acc == target;
            }
            if (!is_power) return false;
        }
    }
    for (std::size_t i = 0; i < z.pure_factors.size(); ++i) {
        const Word piece = normalize(p, pieces[z.singletons.size() + i]);
        if (piece.empty()) continue;
        const auto& root = z.pure_factors[i].root;
        if (piece.size() % root.size() != 0) return false;
        const long long f = static_cast<long long>(piece.size() / root.size());
        if (!equal(p, piece, power(p, root, f)) && !equal(p, piece, power(p, root, -f)))
            return false;
    }
    return true;
}

namespace {

// Unit terms of the per-element pure factor chain, with self-inverse-
// conjugate factors removed; a negative multiplicity emits inverses
// (the chain convention identifies -g with g^-1).
void emit_factor_terms(const Presentation& p, const Word& g, long long mult,
                       std::vector<Word>& out) {
    const PureFactorization f = pure_factor_decomposition(p, g);
    auto emit = [&](const Word& w, long long count) {
        const Word repr = count < 0 ? inverse(p, w) : normalize(p, w);
        for (long long i = 0; i < std::llabs(count); ++i) out.push_back(repr);
    };
    for (const auto& l : f.singleton_factors) {
        const Word w{l};
        if (!conjugate_to_inverse(p, w)) emit(w, mult);
    }
    for (const auto& pf : f.pure_factors)
        if (!conjugate_to_inverse(p, pf.root)) emit(pf.root, mult * pf.exponent);
}

}  // namespace

Chain pure_factor_chain(const Presentation& p, const Chain& c) {
    std::vector<Word> units;
    for (const auto& [k, w] : c.terms) emit_factor_terms(p, w, k, units);
    // Cancel pairs {u, v} with u^-1 conjugate to v until none remain.
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i < units.size() && !changed; ++i)
            for (std::size_t j = i + 1; j < units.size() && !changed; ++j)
                if (conjugate_cyclic(p, inverse(p, units[i]), units[j])) {
                    units.erase(units.begin() + static_cast<long>(j));
                    units.erase(units.begin() + static_cast<long>(i));
                    changed = true;
                }
    }
    std::vector<std::pair<long long, Word>> terms;
    for (auto& u : units) terms.emplace_back(1, std::move(u));
    return chain_make(p, std::move(terms));
}

VertexChainTest is_vertex_chain_equivalent(const Presentation& p, const Chain& c) {
    Chain pf = pure_factor_chain(p, c);
    const bool ok = is_vertex_chain(p, pf);
    return VertexChainTest{ok, ok ? pf : Chain{}};
}

bool racg_zero_scl(const Presentation& p, const Word& g) {
    if (!p.is_racg()) throw std::invalid_argument("racg_zero_scl: not a right-angled Coxeter presentation");
    const Word n = normalize(p, g);
    if (n.empty()) return true;
    const PureFactorization f = pure_factor_decomposition(p, n);
    // Singleton factors have order two; only multi-vertex roots can obstruct.
    for (const auto& pf : f.pure_factors)
        if (!conjugate_to_inverse(p, pf.root)) return false;
    return true;
}

long long sigma(const Presentation& p, const Chain& c, const Word& gamma) {
    const Word root = cyclically_reduce(p, gamma).core;
    if (conjugate_to_inverse(p, root))
        throw std::invalid_argument("sigma: factor conjugate to its inverse");
    const Word root_inv = inverse(p, root);
    long long total = 0;
    for (const auto& [k, w] : c.terms) {
        const PureFactorization f = pure_factor_decomposition(p, w);
        for (const auto& pf : f.pure_factors) {
            if (conjugate_cyclic(p, pf.root, root))
                total += k * pf.exponent;
            else if (conjugate_cyclic(p, pf.root, root_inv))
                total -= k * pf.exponent;
        }
        if (root.size() == 1)
            for (const auto& l : f.singleton_factors) {
                const Word w1{l};
                if (conjugate_cyclic(p, w1, root))
                    total += k;
                else if (conjugate_cyclic(p, w1, root_inv))
                    total -= k;
            }
    }
    return total;
}

}  // namespace sclgp
