#ifndef SCLGP_SCL_HPP
#define SCLGP_SCL_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sclgp/chain.hpp"
#include "sclgp/factor.hpp"
#include "sclgp/graph.hpp"
#include "sclgp/lp.hpp"
#include "sclgp/rational.hpp"

namespace sclgp {

/// Nonnegative vertex weights with total at most 1 on every clique.
struct StableMeasure {
    std::map<std::string, Rat> weights;
};

/// Nonnegative clique weights dominating the target weight at every vertex.
struct CliqueCover {
    std::vector<std::pair<std::vector<std::string>, Rat>> weights;
};

struct WeightedStability {
    Rat value;
    StableMeasure measure;
    CliqueCover cover;
};

/// max sum mu_v w_v over stable measures, with the primal measure and the
/// dual clique cover; exact, primal value = dual value. Constraints range
/// over maximal cliques only (every clique constraint is implied).
WeightedStability fractional_weighted_stability(const SimplicialGraph& g,
                                                const std::map<std::string, Rat>& weights);

/// The fractional stability number: all weights one. Throws on empty graphs.
WeightedStability fsn_full(const SimplicialGraph& g);
Rat fsn(const SimplicialGraph& g);

/// scl of the double chain sum_v [a_v,b_v] in the RAAG on the double graph:
/// fsn(g)/2 together with the explicit presentation and chain.
struct DoubleChainResult {
    Rat value;
    Presentation pres;  // RAAG on the double graph
    Chain chain;
};
DoubleChainResult double_chain_scl(const SimplicialGraph& g);

/// Exact scl of a vertex chain given scl_{G_v}(c_v) per supporting vertex.
WeightedStability vertex_chain_scl(const Presentation& p, const Chain& c,
                                   const std::map<std::string, Rat>& vertex_scl);

/// The chain delta_m = g_{0,m} - g_{0,m-1} - g_{1,m} + g_{1,m-1} over a
/// graph product on Delta_m, with its scl bounds [1/(12(m+2)), 1/m].
struct DeltaChainResult {
    Chain chain;
    Rat lower;
    Rat upper;
    int m = 0;
};
DeltaChainResult delta_chain(const Presentation& p);

/// One chosen generator per vertex (exponent 1 / first free generator);
/// g_{i,j} = g_i ... g_j for the vertices v_i..v_j of an opposite path.
Word delta_generator_product(const Presentation& p, int i, int j);

enum class GapKind { ExactVertexChain, LowerBoundOnly, WeightsRequired, InfiniteHomology };

/// The spectral-gap dichotomy: either the pure factor chain is a vertex
/// chain (exact value by LP, or an explicit infinite/weights-required
/// status), or scl(c) >= 1/(12(Delta(Gamma)+2)) with the non-vertex pure
/// factor chain as witness.
struct GapCertificate {
    GapKind kind = GapKind::LowerBoundOnly;
    Rat value;             // ExactVertexChain
    StableMeasure measure;
    CliqueCover cover;
    Rat bound;             // LowerBoundOnly
    Chain witness;         // pure factor chain
};

GapCertificate gap_certificate(const Presentation& p, const Chain& c,
                               const std::map<std::string, Rat>* vertex_scl = nullptr);

/// JSON wire form of a certificate; rationals as reduced "p/q" strings.
std::string certificate_json(const Presentation& p, const GapCertificate& cert);

}  // namespace sclgp

#endif
