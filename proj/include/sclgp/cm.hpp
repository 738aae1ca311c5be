#ifndef SCLGP_CM_HPP
#define SCLGP_CM_HPP

#include <set>
#include <vector>

#include "sclgp/word.hpp"

namespace sclgp {

/// g = left . rep . right with left, right in G(Lambda) and rep the unique
/// minimal-syllable-length element of the double coset G(Lambda) g G(Lambda).
struct DoubleCosetReduction {
    Word left;
    Word rep;
    Word right;
};

/// The canonical CM-representative: obtained by repeatedly deleting a front-
/// or back-shufflable letter supported in Lambda. Requires g outside
/// G(Lambda) (support not contained in Lambda after normalization).
DoubleCosetReduction cm_representative(const Presentation& p, const std::set<std::size_t>& lambda,
                                       const Word& g);

/// Vertices of Lambda adjacent to every vertex of supp(rep):
/// Z_{G(Lambda)}(rep) = G(centralizer_subgraph).
std::set<std::size_t> centralizer_subgraph(const Presentation& p,
                                           const std::set<std::size_t>& lambda, const Word& rep);

/// Iterated CM-reduction with the canonical choice:
/// conjugator^-1 . g . conjugator = h_0 ... h_n . tail, with tail in the
/// terminal centralizer subgroup and n <= Delta(graph).
struct CMNormalForm {
    Word conjugator;
    std::vector<Word> cm_sequence;               // h_0 .. h_n
    Word tail;                                   // e_n
    std::vector<std::set<std::size_t>> subgraph_chain;  // Lambda_1 .. Lambda_{n+2}
};

CMNormalForm cm_normal_form(const Presentation& p, const std::set<std::size_t>& lambda,
                            const Word& g);

}  // namespace sclgp

#endif
