#ifndef SCLGP_CHAIN_HPP
#define SCLGP_CHAIN_HPP

#include <string>
#include <vector>

#include "sclgp/word.hpp"

namespace sclgp {

/// An integral chain: a formal integer combination of group elements.
/// Canonical form: words normalized, coefficients combined, zero terms
/// dropped, terms sorted. Equality is order-insensitive.
struct Chain {
    std::vector<std::pair<long long, Word>> terms;

    bool zero() const { return terms.empty(); }
    bool operator==(const Chain&) const = default;
};

Chain chain_make(const Presentation& p, std::vector<std::pair<long long, Word>> terms);
Chain chain_add(const Presentation& p, const Chain& a, const Chain& b);
Chain chain_scale(const Chain& c, long long k);

/// Adds k copies of w into c (canonicalizing).
Chain chain_with(const Presentation& p, Chain c, long long k, const Word& w);

bool is_vertex_chain(const Presentation& p, const Chain& c);

/// The chain-equivalence moves: power g^n <-> n.g, conjugation
/// g <-> h g h^-1, and the split g h <-> g + h for commuting g, h.
/// `forward` applies left-to-right as written above.
struct EquivalenceMove {
    enum class Kind { Power, Conjugate, SplitCommuting } kind;
    bool forward = true;
    Word g, h;
    long long n = 1;  // Power only
};

/// Rewrites c by one move. The move must apply: the term being rewritten
/// (g^n, g, hgh^-1, gh, or the pair g,h) must be present with a nonzero
/// count of the needed sign. SplitCommuting requires commutes(g,h).
Chain apply_equivalence_move(const Presentation& p, const Chain& c, const EquivalenceMove& m);

std::string chain_str(const Presentation& p, const Chain& c);

}  // namespace sclgp

#endif
