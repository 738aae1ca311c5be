#ifndef SCLGP_LP_HPP
#define SCLGP_LP_HPP

#include <vector>

#include "sclgp/rational.hpp"

namespace sclgp {

/// maximize c.x subject to A x <= b, x >= 0, over exact rationals.
struct RationalLP {
    std::vector<Rat> objective;            // c, one entry per variable
    std::vector<std::vector<Rat>> rows;    // A, one row per constraint
    std::vector<Rat> rhs;                  // b
};

enum class LPStatus { Optimal, Infeasible, Unbounded };

/// When Optimal: A x* <= b, x* >= 0, A^T y* >= c, y* >= 0 and
/// c.x* = b.y* exactly (checked by the solver before returning).
struct LPSolution {
    LPStatus status = LPStatus::Infeasible;
    Rat value;
    std::vector<Rat> primal;  // x*
    std::vector<Rat> dual;    // y*
};

/// Dense two-phase simplex with Bland's pivoting rule; every tableau entry
/// is a reduced fraction. Throws on dimension mismatch.
LPSolution solve(const RationalLP& lp);

}  // namespace sclgp

#endif
