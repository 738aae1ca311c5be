#ifndef SCLGP_RATIONAL_HPP
#define SCLGP_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace sclgp {

// Exact rational arithmetic. All numeric results of the library are exact;
// doubles appear only in the statistics sampler.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

// LP64 note: long long and long coincide on the supported platforms.
inline Rat to_rat(long long v) { return Rat(static_cast<long>(v)); }

// Parses "p", "p/q" or a plain decimal like "-1.25" into an exact rational.
inline Rat parse_rat(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        Rat q;
        if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
        if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
        q.canonicalize();
        return q;
    }
    auto dot = s.find('.');
    if (dot == std::string::npos) {
        Rat q;
        if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad integer literal: " + s);
        return q;
    }
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    std::size_t frac_len = s.size() - dot - 1;
    if (digits.empty() || digits == "-" || digits == "+")
        throw std::invalid_argument("bad decimal literal: " + s);
    Rat num;
    if (num.set_str(digits, 10) != 0) throw std::invalid_argument("bad decimal literal: " + s);
    Rat den(1);
    for (std::size_t i = 0; i < frac_len; ++i) den *= 10;
    Rat q = num / den;
    q.canonicalize();
    return q;
}

// Reduced "p/q" (or "p" for integers); the external wire format for rationals.
inline std::string rat_str(const Rat& q) {
    return q.get_str();
}

inline std::string rat_str_frac(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str() + "/1";
    return q.get_str();
}

}  // namespace sclgp

#endif
