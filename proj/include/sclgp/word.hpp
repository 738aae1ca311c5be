#ifndef SCLGP_WORD_HPP
#define SCLGP_WORD_HPP

#include <compare>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "sclgp/presentation.hpp"

namespace sclgp {

/// A canonical nontrivial vertex-group element. Cyclic kinds use `exp`
/// (nonzero; reduced mod n for finite order); the Free kind uses `fword`,
/// a nonempty freely reduced word with letters +-(generator index + 1).
struct VGElem {
    long long exp = 0;
    std::vector<int> fword;

    auto operator<=>(const VGElem&) const = default;
};

struct Letter {
    std::size_t vertex = 0;
    VGElem elem;

    auto operator<=>(const Letter&) const = default;
};

/// A word is a finite letter sequence; reducedness is a property, not an
/// invariant. Group equality is tested through normalize().
using Word = std::vector<Letter>;

// --- free words inside a Free(k) vertex group -------------------------------
std::vector<int> free_reduce(std::vector<int> w);
std::vector<int> free_inverse(const std::vector<int>& w);
std::vector<int> free_mul(const std::vector<int>& a, const std::vector<int>& b);

// --- letters ----------------------------------------------------------------
Letter make_letter(const Presentation& p, std::size_t vertex, VGElem e);  // throws on identity
bool letter_is_identity(const Presentation& p, const Letter& l);
Letter letter_inverse(const Presentation& p, const Letter& l);
/// Product of two letters on the same vertex; returns identity as exp=0/empty fword.
Letter letter_mul(const Presentation& p, const Letter& a, const Letter& b);

// --- words ------------------------------------------------------------------

/// The canonical reduced form: minimal syllable length, then the
/// lexicographically least shuffle (greedy least-available-letter emission,
/// the standard trace-monoid least normal form). The identity is the empty word.
Word normalize(const Presentation& p, Word w);

bool is_reduced(const Presentation& p, const Word& w);
Word inverse(const Presentation& p, const Word& w);
Word mul(const Presentation& p, const Word& a, const Word& b);
Word conjugate(const Presentation& p, const Word& h, const Word& g);  // h g h^-1
Word power(const Presentation& p, const Word& g, long long n);
bool equal(const Presentation& p, const Word& a, const Word& b);

std::size_t syllable_length(const Presentation& p, const Word& w);
std::set<std::size_t> support(const Presentation& p, const Word& w);

/// Positions of letters that can be shuffled to the front (resp. back) of a
/// reduced word: every earlier (resp. later) letter lies on an adjacent vertex.
std::vector<std::size_t> front_available(const Presentation& p, const Word& w);
std::vector<std::size_t> back_available(const Presentation& p, const Word& w);

struct CyclicReduction {
    Word conjugator;  // w = conjugator . core . conjugator^-1
    Word core;        // cyclically reduced
};
CyclicReduction cyclically_reduce(const Presentation& p, const Word& w);
bool is_cyclically_reduced(const Presentation& p, const Word& w);

/// Least canonical form over the conjugacy class of the cyclically reduced
/// core (closure under single-letter rotations, Lemma-style cyclic normal form).
Word cyclic_normal_form(const Presentation& p, const Word& w);
/// All canonical representatives of the cyclic class of the core of w.
std::vector<Word> cyclic_class(const Presentation& p, const Word& w);

/// Conjugacy test. Words of syllable length one are compared inside their
/// vertex group; longer words by cyclic normal forms.
bool conjugate_cyclic(const Presentation& p, const Word& w1, const Word& w2);

bool commutes(const Presentation& p, const Word& g, const Word& h);

/// The five-piece product decomposition g = g0.qg.x, h = x^-1.qh.h0 with
/// gh = g0.qgh.h0 reduced and the joint support of qg, qh a clique.
struct InterfaceDecomposition {
    Word g0, qg, x, qh, h0;
    Clique clique;  // vertex indices, sorted
};
InterfaceDecomposition interface_decomposition(const Presentation& p, const Word& g,
                                               const Word& h);

std::string word_str(const Presentation& p, const Word& w);

}  // namespace sclgp

#endif
