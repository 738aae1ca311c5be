#include "sclgp/chain.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace sclgp {

namespace {

Chain canonicalize(const Presentation& p, std::vector<std::pair<long long, Word>> terms) {
    std::map<Word, long long> acc;
    for (auto& [k, w] : terms) {
        if (k == 0) continue;
        Word n = normalize(p, w);
        if (n.empty()) continue;  // identity terms carry no content
        acc[std::move(n)] += k;
    }
    Chain c;
    for (auto& [w, k] : acc)
        if (k != 0) c.terms.emplace_back(k, w);
    return c;
}

}  // namespace

Chain chain_make(const Presentation& p, std::vector<std::pair<long long, Word>> terms) {
    return canonicalize(p, std::move(terms));
}

Chain chain_add(const Presentation& p, const Chain& a, const Chain& b) {
    auto terms = a.terms;
    terms.insert(terms.end(), b.terms.begin(), b.terms.end());
    return canonicalize(p, std::move(terms));
}

Chain chain_scale(const Chain& c, long long k) {
    Chain out;
    if (k == 0) return out;
    out.terms = c.terms;
    for (auto& [co, w] : out.terms) co *= k;
    return out;
}

Chain chain_with(const Presentation& p, Chain c, long long k, const Word& w) {
    c.terms.emplace_back(k, w);
    return canonicalize(p, std::move(c.terms));
}

bool is_vertex_chain(const Presentation& p, const Chain& c) {
    for (const auto& [k, w] : c.terms)
        if (support(p, w).size() > 1) return false;
    return true;
}

Chain apply_equivalence_move(const Presentation& p, const Chain& c, const EquivalenceMove& m) {
    const Word g = normalize(p, m.g);
    switch (m.kind) {
        case EquivalenceMove::Kind::Power: {
            const Word gn = power(p, g, m.n);
            if (m.forward)  // g^n -> n . g
                return chain_with(p, chain_with(p, c, -1, gn), m.n, g);
            return chain_with(p, chain_with(p, c, -m.n, g), 1, gn);
        }
        case EquivalenceMove::Kind::Conjugate: {
            const Word hgh = conjugate(p, m.h, g);
            if (m.forward)  // g -> h g h^-1
                return chain_with(p, chain_with(p, c, -1, g), 1, hgh);
            return chain_with(p, chain_with(p, c, -1, hgh), 1, g);
        }
        case EquivalenceMove::Kind::SplitCommuting: {
            if (!commutes(p, m.g, m.h))
                throw std::invalid_argument("split_commuting: elements do not commute");
            const Word h = normalize(p, m.h);
            const Word gh = mul(p, g, h);
            if (m.forward)  // gh -> g + h
                return chain_with(p, chain_with(p, chain_with(p, c, -1, gh), 1, g), 1, h);
            return chain_with(p, chain_with(p, chain_with(p, c, -1, g), -1, h), 1, gh);
        }
    }
    throw std::logic_error("unreachable");
}

std::string chain_str(const Presentation& p, const Chain& c) {
    if (c.terms.empty()) return "0";
    std::string out;
    for (const auto& [k, w] : c.terms) {
        if (!out.empty()) out += "  ";
        out += std::to_string(k) + "*(" + word_str(p, w) + ")";
    }
    return out;
}

}  // namespace sclgp
