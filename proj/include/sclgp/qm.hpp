#ifndef SCLGP_QM_HPP
#define SCLGP_QM_HPP

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "sclgp/prng.hpp"
#include "sclgp/rational.hpp"
#include "sclgp/word.hpp"

namespace sclgp {

/// Freely reduced word over a free group's generators: +-(index+1) letters.
using FreeWord = std::vector<int>;

FreeWord parse_free_word(const std::string& s, int rank);  // a..z / A..Z or x1/X1 syntax
std::string free_word_str(const FreeWord& w);

/// Maximal number of disjoint occurrences of w as a contiguous subword of
/// the reduced form of x (greedy left-to-right is optimal for equal-length
/// disjoint intervals). Throws on empty w.
int nu_count(const FreeWord& w, const FreeWord& x);

/// A counting quasimorphism handle on a free group.
struct QuasimorphismHandle {
    std::function<Rat(const FreeWord&)> eval;
    Rat defect_bound;
    bool antisymmetric = false;
};

/// phi_w = nu_w - nu_{w^-1}; antisymmetric with declared defect 3.
QuasimorphismHandle brooks_qm(const FreeWord& w);

/// g -> (phi(g) - phi(g^-1))/2; same declared defect bound.
QuasimorphismHandle antisymmetrize(const QuasimorphismHandle& phi);

/// phi(g^N)/N brackets the homogenization: |phibar(g) - estimate| <= D/N.
struct HomogBracket {
    Rat estimate;
    Rat halfwidth;
};
HomogBracket homogenize_bracket(const QuasimorphismHandle& phi, const FreeWord& g, long long N);

/// Guaranteed Bavard lower bound from per-term homogenization brackets:
/// (sum coeff*estimate - |coeff|*halfwidth) / (2 Dbar), floored at zero.
/// Dbar must bound the homogenized defect (2x the declared bound suffices).
Rat bavard_lower_bound(const std::vector<std::pair<long long, HomogBracket>>& terms,
                       const Rat& homogenized_defect_bound);

/// Flattens a word over an edgeless all-Z presentation (a free group) into
/// a free word, one letter per exponent unit.
FreeWord flatten_free(const Presentation& p, const Word& w);

// --- combined vertex quasimorphisms -----------------------------------------

/// An antisymmetric quasimorphism on one vertex group, evaluated on the
/// canonical element payload of a letter.
struct VertexQM {
    std::function<Rat(const VGElem&)> eval;
    Rat defect_bound;
};

/// Brooks handle on a Free(k) vertex group.
VertexQM vertex_brooks(const FreeWord& w);
/// The homomorphism k -> scale*k on a cyclic vertex group (defect 0).
VertexQM vertex_homomorphism(const Rat& scale);

/// f(g) = sum of f_v over the syllables of the normalized form; declared
/// defect is the maximum over maximal cliques of the sum of vertex defects.
/// Antisymmetry of every handle is validated on sampled elements.
struct CombinedVertexQM {
    std::map<std::size_t, VertexQM> handles;
    Rat defect_bound;
};

CombinedVertexQM combined_vertex_qm(const Presentation& p,
                                    const std::map<std::size_t, VertexQM>& handles,
                                    std::uint64_t validation_seed = 7);

Rat evaluate(const Presentation& p, const CombinedVertexQM& f, const Word& g);

/// Random nontrivial element of the vertex group at v, for sampling checks.
VGElem random_vertex_elem(const Presentation& p, std::size_t v, Prng& rng, int max_size = 6);

}  // namespace sclgp

#endif
