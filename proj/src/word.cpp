#include "sclgp/word.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace sclgp {

std::vector<int> free_reduce(std::vector<int> w) {
    std::vector<int> out;
    for (int x : w) {
        if (x == 0) throw std::invalid_argument("free letter 0");
        if (!out.empty() && out.back() == -x)
            out.pop_back();
        else
            out.push_back(x);
    }
    return out;
}

std::vector<int> free_inverse(const std::vector<int>& w) {
    std::vector<int> out(w.rbegin(), w.rend());
    for (int& x : out) x = -x;
    return out;
}

std::vector<int> free_mul(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out = a;
    out.insert(out.end(), b.begin(), b.end());
    return free_reduce(std::move(out));
}

namespace {

VGElem canonical_elem(const Presentation& p, std::size_t vertex, VGElem e) {
    const VertexKind& k = p.kind(vertex);
    switch (k.type) {
        case KindType::InfiniteCyclic:
            e.fword.clear();
            return e;
        case KindType::FiniteCyclic: {
            e.fword.clear();
            e.exp %= k.order;
            if (e.exp < 0) e.exp += k.order;
            return e;
        }
        case KindType::Free: {
            e.exp = 0;
            for (int x : e.fword)
                if (x == 0 || std::abs(x) > k.rank)
                    throw std::invalid_argument("free letter out of rank");
            e.fword = free_reduce(std::move(e.fword));
            return e;
        }
    }
    throw std::logic_error("unreachable");
}

bool elem_is_identity(const Presentation& p, std::size_t vertex, const VGElem& e) {
    return p.kind(vertex).type == KindType::Free ? e.fword.empty() : e.exp == 0;
}

}  // namespace

Letter make_letter(const Presentation& p, std::size_t vertex, VGElem e) {
    if (vertex >= p.size()) throw std::invalid_argument("letter on unknown vertex");
    Letter l{vertex, canonical_elem(p, vertex, std::move(e))};
    if (elem_is_identity(p, vertex, l.elem))
        throw std::invalid_argument("letter must be a nontrivial vertex-group element");
    return l;
}

bool letter_is_identity(const Presentation& p, const Letter& l) {
    return elem_is_identity(p, l.vertex, l.elem);
}

Letter letter_inverse(const Presentation& p, const Letter& l) {
    VGElem e;
    if (p.kind(l.vertex).type == KindType::Free)
        e.fword = free_inverse(l.elem.fword);
    else
        e.exp = -l.elem.exp;
    return Letter{l.vertex, canonical_elem(p, l.vertex, std::move(e))};
}

Letter letter_mul(const Presentation& p, const Letter& a, const Letter& b) {
    if (a.vertex != b.vertex) throw std::logic_error("letter_mul across vertices");
    VGElem e;
    if (p.kind(a.vertex).type == KindType::Free)
        e.fword = free_mul(a.elem.fword, b.elem.fword);
    else
        e.exp = a.elem.exp + b.elem.exp;
    return Letter{a.vertex, canonical_elem(p, a.vertex, std::move(e))};
}

namespace {

// One merge pass: find i < j on the same vertex with every letter strictly
// between on a vertex adjacent to it, merge j into i. Returns true if the
// word changed.
bool merge_pass(const Presentation& p, Word& w) {
    for (std::size_t i = 0; i < w.size(); ++i) {
        for (std::size_t j = i + 1; j < w.size(); ++j) {
            if (w[j].vertex == w[i].vertex) {
                Letter m = letter_mul(p, w[i], w[j]);
                w.erase(w.begin() + static_cast<long>(j));
                if (letter_is_identity(p, m))
                    w.erase(w.begin() + static_cast<long>(i));
                else
                    w[i] = m;
                return true;
            }
            if (!p.adjacent(w[i].vertex, w[j].vertex)) break;
        }
    }
    return false;
}

// Lexicographically least shuffle of a reduced word: repeatedly emit the
// least available letter (one preceded only by letters on adjacent vertices).
Word least_shuffle(const Presentation& p, Word w) {
    Word out;
    out.reserve(w.size());
    while (!w.empty()) {
        std::size_t best = w.size();
        for (std::size_t i = 0; i < w.size(); ++i) {
            bool avail = true;
            for (std::size_t q = 0; q < i && avail; ++q)
                avail = p.adjacent(w[q].vertex, w[i].vertex);
            if (avail && (best == w.size() || w[i] < w[best])) best = i;
        }
        out.push_back(w[best]);
        w.erase(w.begin() + static_cast<long>(best));
    }
    return out;
}

}  // namespace

Word normalize(const Presentation& p, Word w) {
    for (auto& l : w) {
        if (l.vertex >= p.size()) throw std::invalid_argument("letter on unknown vertex");
        l.elem = canonical_elem(p, l.vertex, std::move(l.elem));
    }
    std::erase_if(w, [&](const Letter& l) { return letter_is_identity(p, l); });
    while (merge_pass(p, w)) {
    }
    return least_shuffle(p, std::move(w));
}

bool is_reduced(const Presentation& p, const Word& w) {
    for (const auto& l : w)
        if (letter_is_identity(p, l)) return false;
    Word copy = w;
    return !merge_pass(p, copy);
}

Word inverse(const Presentation& p, const Word& w) {
    Word out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(letter_inverse(p, *it));
    return normalize(p, std::move(out));
}

Word mul(const Presentation& p, const Word& a, const Word& b) {
    Word out = a;
    out.insert(out.end(), b.begin(), b.end());
    return normalize(p, std::move(out));
}

Word conjugate(const Presentation& p, const Word& h, const Word& g) {
    return mul(p, mul(p, h, g), inverse(p, h));
}

Word power(const Presentation& p, const Word& g, long long n) {
    Word base = n < 0 ? inverse(p, g) : g;
    Word out;
    for (long long i = 0; i < std::llabs(n); ++i) out.insert(out.end(), base.begin(), base.end());
    return normalize(p, std::move(out));
}

bool equal(const Presentation& p, const Word& a, const Word& b) {
    return normalize(p, a) == normalize(p, b);
}

std::size_t syllable_length(const Presentation& p, const Word& w) {
    return normalize(p, w).size();
}

std::set<std::size_t> support(const Presentation& p, const Word& w) {
    std::set<std::size_t> s;
    for (const auto& l : normalize(p, w)) s.insert(l.vertex);
    return s;
}

std::vector<std::size_t> front_available(const Presentation& p, const Word& w) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        bool avail = true;
        for (std::size_t q = 0; q < i && avail; ++q)
            avail = p.adjacent(w[q].vertex, w[i].vertex);
        if (avail) out.push_back(i);
    }
    return out;
}

std::vector<std::size_t> back_available(const Presentation& p, const Word& w) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        bool avail = true;
        for (std::size_t q = i + 1; q < w.size() && avail; ++q)
            avail = p.adjacent(w[q].vertex, w[i].vertex);
        if (avail) out.push_back(i);
    }
    return out;
}

CyclicReduction cyclically_reduce(const Presentation& p, const Word& w) {
    CyclicReduction r;
    r.core = normalize(p, w);
    for (;;) {
        // A reduced word fails to be cyclically reduced exactly when a
        // front-available and a back-available letter share a vertex
        // (distinct occurrences; the front one necessarily comes first).
        const auto front = front_available(p, r.core);
        const auto back = back_available(p, r.core);
        bool changed = false;
        for (std::size_t i : front) {
            for (std::size_t j : back) {
                if (i == j || r.core[i].vertex != r.core[j].vertex) continue;
                const Letter x = r.core[i];
                Word rest;
                for (std::size_t k = 0; k < r.core.size(); ++k)
                    if (k != i && k != j) rest.push_back(r.core[k]);
                Letter merged = letter_mul(p, r.core[j], x);
                if (!letter_is_identity(p, merged)) rest.push_back(merged);
                r.conjugator.push_back(x);
                r.core = normalize(p, std::move(rest));
                changed = true;
                break;
            }
            if (changed) break;
        }
        if (!changed) break;
    }
    r.conjugator = normalize(p, std::move(r.conjugator));
    return r;
}

bool is_cyclically_reduced(const Presentation& p, const Word& w) {
    Word n = normalize(p, w);
    return cyclically_reduce(p, n).core.size() == n.size();
}

std::vector<Word> cyclic_class(const Presentation& p, const Word& w) {
    const Word core = cyclically_reduce(p, w).core;
    std::set<Word> seen;
    std::vector<Word> queue{normalize(p, core)};
    seen.insert(queue[0]);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const Word cur = queue[head];
        for (std::size_t i : front_available(p, cur)) {
            Word rot;
            for (std::size_t k = 0; k < cur.size(); ++k)
                if (k != i) rot.push_back(cur[k]);
            rot.push_back(cur[i]);
            rot = normalize(p, std::move(rot));
            if (seen.insert(rot).second) queue.push_back(std::move(rot));
        }
    }
    return {seen.begin(), seen.end()};
}

Word cyclic_normal_form(const Presentation& p, const Word& w) {
    auto cls = cyclic_class(p, w);
    return *std::min_element(cls.begin(), cls.end());
}

namespace {

// Conjugacy inside a single vertex group.
bool vertex_conjugate(const Presentation& p, const Letter& a, const Letter& b) {
    if (a.vertex != b.vertex) return false;
    if (p.kind(a.vertex).type != KindType::Free) return a.elem.exp == b.elem.exp;
    // Free group: conjugate iff the cyclic reductions are cyclic rotations.
    auto cyc = [](std::vector<int> v) {
        while (v.size() >= 2 && v.front() == -v.back()) {
            v.erase(v.begin());
            v.pop_back();
        }
        return v;
    };
    std::vector<int> x = cyc(a.elem.fword), y = cyc(b.elem.fword);
    if (x.size() != y.size()) return false;
    if (x.empty()) return true;
    for (std::size_t r = 0; r < x.size(); ++r) {
        bool ok = true;
        for (std::size_t i = 0; i < x.size() && ok; ++i) ok = x[(r + i) % x.size()] == y[i];
        if (ok) return true;
    }
    return false;
}

}  // namespace

bool conjugate_cyclic(const Presentation& p, const Word& w1, const Word& w2) {
    const Word c1 = cyclically_reduce(p, w1).core;
    const Word c2 = cyclically_reduce(p, w2).core;
    if (c1.size() != c2.size()) return false;
    if (c1.empty()) return true;
    if (c1.size() == 1) return vertex_conjugate(p, c1[0], c2[0]);
    return cyclic_normal_form(p, c1) == cyclic_normal_form(p, c2);
}

bool commutes(const Presentation& p, const Word& g, const Word& h) {
    return mul(p, mul(p, g, h), inverse(p, mul(p, h, g))).empty();
}

InterfaceDecomposition interface_decomposition(const Presentation& p, const Word& g_in,
                                               const Word& h_in) {
    InterfaceDecomposition d;
    Word g = normalize(p, g_in), h = normalize(p, h_in);
    // Maximal full-cancellation part x: peel exact inverse pairs from the
    // back of g and the front of h until none remain.
    Word x_rev;  // letters of x, last peeled first
    for (;;) {
        bool peeled = false;
        for (std::size_t i : back_available(p, g)) {
            for (std::size_t j : front_available(p, h)) {
                if (g[i].vertex != h[j].vertex) continue;
                if (!letter_is_identity(p, letter_mul(p, g[i], h[j]))) continue;
                x_rev.push_back(g[i]);
                g.erase(g.begin() + static_cast<long>(i));
                h.erase(h.begin() + static_cast<long>(j));
                peeled = true;
                break;
            }
            if (peeled) break;
        }
        if (!peeled) break;
    }
    d.x.assign(x_rev.rbegin(), x_rev.rend());

    // Interface clique q. Same-vertex available pairs are forced (otherwise
    // g0 and h0 would admit a merge); unpaired available letters join only
    // when anchored to a letter of the other word already in q. Ties are
    // broken by the canonical vertex order; the decomposition is not unique
    // when several maximal interfaces exist.
    std::map<std::size_t, std::size_t> g_at, h_at;  // vertex -> position
    for (std::size_t i : back_available(p, g)) g_at[g[i].vertex] = i;
    for (std::size_t j : front_available(p, h)) h_at[h[j].vertex] = j;
    std::set<std::size_t> q;
    for (const auto& [v, i] : g_at)
        if (h_at.count(v)) q.insert(v);
    if (q.empty()) {
        // Seed with the least adjacent cross pair, if any.
        for (const auto& [v, i] : g_at) {
            for (const auto& [u, j] : h_at)
                if (v != u && p.adjacent(v, u)) {
                    q.insert(v);
                    q.insert(u);
                    break;
                }
            if (!q.empty()) break;
        }
    }
    if (!q.empty()) {
        auto joins = [&](std::size_t v, const std::map<std::size_t, std::size_t>& other) {
            if (q.count(v)) return false;
            for (std::size_t u : q)
                if (!p.adjacent(u, v)) return false;
            for (std::size_t u : q)
                if (other.count(u)) return true;  // anchored across the product
            return false;
        };
        for (bool grew = true; grew;) {
            grew = false;
            for (const auto& [v, i] : g_at)
                if (joins(v, h_at)) {
                    q.insert(v);
                    grew = true;
                }
            for (const auto& [v, j] : h_at)
                if (joins(v, g_at)) {
                    q.insert(v);
                    grew = true;
                }
        }
    }

    for (std::size_t i = 0; i < g.size(); ++i)
        (g_at.count(g[i].vertex) && q.count(g[i].vertex) && g_at[g[i].vertex] == i ? d.qg : d.g0)
            .push_back(g[i]);
    for (std::size_t j = 0; j < h.size(); ++j)
        (h_at.count(h[j].vertex) && q.count(h[j].vertex) && h_at[h[j].vertex] == j ? d.qh : d.h0)
            .push_back(h[j]);
    d.clique.assign(q.begin(), q.end());
    return d;
}

std::string word_str(const Presentation& p, const Word& w) {
    if (w.empty()) return "1";
    std::string out;
    for (const auto& l : w) {
        if (!out.empty()) out += ' ';
        out += p.graph().name(l.vertex);
        if (p.kind(l.vertex).type == KindType::Free) {
            out += ':';
            for (int x : l.elem.fword) {
                out += x > 0 ? 'x' : 'X';
                out += std::to_string(std::abs(x));
            }
        } else {
            out += '^';
            out += std::to_string(l.elem.exp);
        }
    }
    return out;
}

}  // namespace sclgp
