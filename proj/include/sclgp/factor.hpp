#ifndef SCLGP_FACTOR_HPP
#define SCLGP_FACTOR_HPP

#include <optional>
#include <set>
#include <vector>

#include "sclgp/chain.hpp"
#include "sclgp/word.hpp"

namespace sclgp {

/// One pure factor gamma^e: the root is cyclically reduced with syllable
/// length >= 2 and is not a proper power; the exponent is maximal.
struct PureFactor {
    Word root;
    long long exponent = 1;
};

/// g = conjugator . (singleton factors) . (pure factors) . conjugator^-1,
/// factors indexed by the connected components of Theta(g)^opp.
struct PureFactorization {
    Word conjugator;
    std::vector<Letter> singleton_factors;
    std::vector<PureFactor> pure_factors;
    std::set<std::size_t> theta;  // support of the cyclically reduced core
};

PureFactorization pure_factor_decomposition(const Presentation& p, const Word& g);
Word reassemble(const Presentation& p, const PureFactorization& f);

/// Largest e with root^e equal to the cyclically reduced word w; e = 1 and
/// root = w when w is not a proper power.
PureFactor extract_root(const Presentation& p, const Word& w);

bool conjugate_to_inverse(const Presentation& p, const Word& w);

/// Full centralizer data in the sense of the centralizer theorem:
/// h commutes with g iff h = p . z*_1...z*_l . gamma_1^f1...gamma_l^fl . z . p^-1
/// with z supported on D(g).
struct SingletonCentralizer {
    Letter factor;                 // gamma*_i
    bool whole_vertex_group;       // cyclic kinds
    std::vector<int> free_root;    // Free kind: generator of the maximal cyclic subgroup
};

struct CentralizerDescription {
    Word conjugator;
    std::vector<SingletonCentralizer> singletons;
    std::vector<PureFactor> pure_factors;  // roots gamma_i with their exponents
    std::set<std::size_t> dg;              // D(g)
};

CentralizerDescription centralizer_description(const Presentation& p, const Word& g);

/// Membership test in the centralizer parametrization; used to cross-check
/// the direct commutator test.
bool in_centralizer(const Presentation& p, const CentralizerDescription& z, const Word& h);

/// The pure factor chain c^pf: per-term factor chains with self-inverse-
/// conjugate factors dropped, then repeated cancellation of

/// {inverse, conjugate} term pairs. Equivalent to c.
Chain pure_factor_chain(const Presentation& p, const Chain& c);

struct VertexChainTest {
    bool is_vertex_chain;
    Chain witness;  // the pure factor chain when true
};
VertexChainTest is_vertex_chain_equivalent(const Presentation& p, const Chain& c);

/// RACG-only: true iff g is equivalent to the zero chain (every pure factor
/// conjugate to its inverse). Throws on non-RACG presentations.
bool racg_zero_scl(const Presentation& p, const Word& g);

/// Signed multiplicity of the primitive pure factor gamma in the chain c;
/// gamma must not be conjugate to its inverse.
long long sigma(const Presentation& p, const Chain& c, const Word& gamma);

}  // namespace sclgp

#endif
