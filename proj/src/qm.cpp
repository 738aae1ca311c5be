#include "sclgp/qm.hpp"

#include <algorithm>
#include <stdexcept>

namespace sclgp {

FreeWord parse_free_word(const std::string& s, int rank) {
    FreeWord w;
    for (std::size_t i = 0; i < s.size();) {
        char c = s[i];
        if (c == ' ' || c == '\t') {
            ++i;
            continue;
        }
        if (c == 'x' || c == 'X') {
            std::size_t j = i + 1;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            if (j == i + 1) throw std::invalid_argument("free word: x must carry an index");
            int idx = std::stoi(s.substr(i + 1, j - i - 1));
            if (idx < 1 || idx > rank) throw std::invalid_argument("free word: index out of rank");
            w.push_back(c == 'x' ? idx : -idx);
            i = j;
        } else if (std::isalpha(static_cast<unsigned char>(c))) {
            int idx = std::tolower(static_cast<unsigned char>(c)) - 'a' + 1;
            if (idx > rank) throw std::invalid_argument("free word: letter out of rank");
            w.push_back(std::isupper(static_cast<unsigned char>(c)) ? -idx : idx);
            ++i;
        } else {
            throw std::invalid_argument(std::string("free word: bad character '") + c + "'");
        }
    }
    return free_reduce(std::move(w));
}

std::string free_word_str(const FreeWord& w) {
    std::string out;
    for (int x : w) {
        int idx = std::abs(x);
        if (idx <= 26)
            out += static_cast<char>((x > 0 ? 'a' : 'A') + idx - 1);
        else
            out += (x > 0 ? "x" : "X") + std::to_string(idx);
    }
    return out.empty() ? "1" : out;
}

int nu_count(const FreeWord& w, const FreeWord& x) {
    if (w.empty()) throw std::invalid_argument("nu_count: empty pattern");
    const FreeWord xr = free_reduce(x);
    if (w.size() > xr.size()) return 0;
    int count = 0;
    std::size_t i = 0;
    while (i + w.size() <= xr.size()) {
        if (std::equal(w.begin(), w.end(), xr.begin() + static_cast<long>(i))) {
            ++count;
            i += w.size();
        } else {
            ++i;
        }
    }
    return count;
}

QuasimorphismHandle brooks_qm(const FreeWord& w) {
    const FreeWord wr = free_reduce(w);
    if (wr.empty()) throw std::invalid_argument("brooks_qm: trivial word");
    const FreeWord wi = free_inverse(wr);
    QuasimorphismHandle h;
    h.eval = [wr, wi](const FreeWord& x) { return Rat(nu_count(wr, x) - nu_count(wi, x)); };
    h.defect_bound = 3;
    h.antisymmetric = true;
    return h;
}

QuasimorphismHandle antisymmetrize(const QuasimorphismHandle& phi) {
    QuasimorphismHandle h;
    auto inner = phi.eval;
    h.eval = [inner](const FreeWord& x) {
        return (inner(x) - inner(free_inverse(x))) / 2;
    };
    h.defect_bound = phi.defect_bound;
    h.antisymmetric = true;
    return h;
}

HomogBracket homogenize_bracket(const QuasimorphismHandle& phi, const FreeWord& g, long long N) {
    if (N < 1) throw std::invalid_argument("homogenize_bracket: N must be positive");
    FreeWord gn;
    for (long long i = 0; i < N; ++i) gn = free_mul(gn, g);
    HomogBracket b;
    b.estimate = phi.eval(gn) / to_rat(N);
    b.halfwidth = phi.defect_bound / to_rat(N);
    return b;
}

Rat bavard_lower_bound(const std::vector<std::pair<long long, HomogBracket>>& terms,
                       const Rat& homogenized_defect_bound) {
    if (homogenized_defect_bound <= 0)
        throw std::invalid_argument("bavard_lower_bound: defect bound must be positive");
    Rat pessimistic(0);
    for (const auto& [k, b] : terms)
        pessimistic += to_rat(k) * b.estimate - to_rat(std::llabs(k)) * b.halfwidth;
    Rat bound = pessimistic / (2 * homogenized_defect_bound);
    return bound > 0 ? bound : Rat(0);
}

FreeWord flatten_free(const Presentation& p, const Word& w) {
    for (std::size_t v = 0; v < p.size(); ++v)
        if (p.kind(v).type != KindType::InfiniteCyclic || p.graph().edge_count() != 0)
            throw std::invalid_argument("flatten_free: presentation is not a free group");
    FreeWord out;
    for (const auto& l : normalize(p, w)) {
        const int gen = static_cast<int>(l.vertex) + 1;
        for (long long i = 0; i < std::llabs(l.elem.exp); ++i)
            out.push_back(l.elem.exp > 0 ? gen : -gen);
    }
    return out;  // already reduced: distinct vertices alternate
}

VertexQM vertex_brooks(const FreeWord& w) {
    const QuasimorphismHandle h = brooks_qm(w);
    VertexQM v;
    v.eval = [h](const VGElem& e) { return h.eval(e.fword); };
    v.defect_bound = h.defect_bound;
    return v;
}

VertexQM vertex_homomorphism(const Rat& scale) {
    VertexQM v;
    Rat s = scale;
    v.eval = [s](const VGElem& e) { return s * to_rat(e.exp); };
    v.defect_bound = 0;
    return v;
}

VGElem random_vertex_elem(const Presentation& p, std::size_t v, Prng& rng, int max_size) {
    VGElem e;
    const VertexKind& k = p.kind(v);
    switch (k.type) {
        case KindType::InfiniteCyclic:
            e.exp = rng.next_range(1, max_size);
            if (rng.next_bernoulli(0.5)) e.exp = -e.exp;
            return e;
        case KindType::FiniteCyclic:
            e.exp = rng.next_range(1, k.order - 1);
            return e;
        case KindType::Free: {
            do {
                e.fword.clear();
                const long long len = rng.next_range(1, max_size);
                for (long long i = 0; i < len; ++i) {
                    int g = static_cast<int>(rng.next_range(1, k.rank));
                    e.fword.push_back(rng.next_bernoulli(0.5) ? g : -g);
                }
                e.fword = free_reduce(std::move(e.fword));
            } while (e.fword.empty());
            return e;
        }
    }
    throw std::logic_error("unreachable");
}

CombinedVertexQM combined_vertex_qm(const Presentation& p,
                                    const std::map<std::size_t, VertexQM>& handles,
                                    std::uint64_t validation_seed) {
    Prng rng(validation_seed);
    for (const auto& [v, h] : handles) {
        if (v >= p.size()) throw std::invalid_argument("handle on unknown vertex");
        for (int trial = 0; trial < 64; ++trial) {
            VGElem e = random_vertex_elem(p, v, rng);
            VGElem einv;
            if (p.kind(v).type == KindType::Free)
                einv.fword = free_inverse(e.fword);
            else
                einv.exp = p.kind(v).type == KindType::FiniteCyclic
                               ? (p.kind(v).order - e.exp) % p.kind(v).order
                               : -e.exp;
            if (h.eval(e) != -h.eval(einv))
                throw std::invalid_argument("vertex handle fails antisymmetry at vertex " +
                                            p.graph().name(v));
        }
    }
    CombinedVertexQM f;
    f.handles = handles;
    f.defect_bound = 0;
    for (const auto& q : maximal_cliques(p.graph())) {
        Rat sum(0);
        for (std::size_t v : q) {
            auto it = handles.find(v);
            if (it != handles.end()) sum += it->second.defect_bound;
        }
        f.defect_bound = std::max(f.defect_bound, sum);
    }
    return f;
}

Rat evaluate(const Presentation& p, const CombinedVertexQM& f, const Word& g) {
    Rat total(0);
    for (const auto& l : normalize(p, g)) {
        auto it = f.handles.find(l.vertex);
        if (it != f.handles.end()) total += it->second.eval(l.elem);
    }
    return total;
}

}  // namespace sclgp
