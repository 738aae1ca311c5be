#include "sclgp/lp.hpp"

#include <stdexcept>

namespace sclgp {

namespace {

class SimplexTableau {
  public:
    SimplexTableau(const RationalLP& lp) : n_(lp.objective.size()), m_(lp.rows.size()) {
        for (const auto& row : lp.rows)
            if (row.size() != n_) throw std::invalid_argument("lp: row width mismatch");
        if (lp.rhs.size() != m_) throw std::invalid_argument("lp: rhs length mismatch");

        // Rows with negative rhs are flipped; their slack then enters with
        // coefficient -1 and an artificial variable restores a unit basis.
        flip_.assign(m_, 1);
        std::size_t artificials = 0;
        for (std::size_t i = 0; i < m_; ++i)
            if (lp.rhs[i] < 0) {
                flip_[i] = -1;
                ++artificials;
            }
        cols_ = n_ + m_ + artificials;
        t_.assign(m_ + 2, std::vector<Rat>(cols_ + 1, Rat(0)));
        basis_.assign(m_, 0);

        std::size_t art = n_ + m_;
        for (std::size_t i = 0; i < m_; ++i) {
            const Rat sign(flip_[i]);
            for (std::size_t j = 0; j < n_; ++j) t_[i][j] = sign * lp.rows[i][j];
            t_[i][n_ + i] = sign;
            t_[i][cols_] = sign * lp.rhs[i];
            if (flip_[i] < 0) {
                t_[i][art] = 1;
                basis_[i] = art++;
            } else {
                basis_[i] = n_ + i;
            }
        }
        // Phase-2 cost row: reduced costs start at -c.
        for (std::size_t j = 0; j < n_; ++j) t_[m_][j] = -lp.objective[j];
        // Phase-1 cost row: maximize -(sum of artificials), priced out over
        // the starting basis (artificial columns carry reduced cost zero).
        for (std::size_t i = 0; i < m_; ++i)
            if (flip_[i] < 0)
                for (std::size_t j = 0; j <= cols_; ++j) t_[m_ + 1][j] -= t_[i][j];
        for (std::size_t a = n_ + m_; a < cols_; ++a) t_[m_ + 1][a] = 0;
        first_artificial_ = n_ + m_;
        alive_.assign(m_, true);
    }

    LPSolution run(const RationalLP& lp) {
        LPSolution sol;
        if (first_artificial_ < cols_) {
            iterate(m_ + 1, cols_);
            if (t_[m_ + 1][cols_] != 0) {
                sol.status = LPStatus::Infeasible;
                return sol;
            }
            expel_artificials();
        }
        if (!iterate(m_, first_artificial_)) {
            sol.status = LPStatus::Unbounded;
            return sol;
        }
        sol.status = LPStatus::Optimal;
        sol.primal.assign(n_, Rat(0));
        for (std::size_t i = 0; i < m_; ++i)
            if (alive_[i] && basis_[i] < n_) sol.primal[basis_[i]] = t_[i][cols_];
        // y_i is the reduced cost of slack i at optimality (row flips cancel
        // against the flipped slack column sign).
        sol.dual.assign(m_, Rat(0));
        for (std::size_t i = 0; i < m_; ++i) sol.dual[i] = t_[m_][n_ + i];
        sol.value = 0;
        for (std::size_t j = 0; j < n_; ++j) sol.value += lp.objective[j] * sol.primal[j];
        check_certificates(lp, sol);
        return sol;
    }

  private:
    // Bland's rule on both the entering and leaving choice: no cycling.
    bool iterate(std::size_t cost_row, std::size_t col_limit) {
        for (;;) {
            std::size_t enter = col_limit;
            for (std::size_t j = 0; j < col_limit; ++j)
                if (t_[cost_row][j] < 0) {
                    enter = j;
                    break;
                }
            if (enter == col_limit) return true;
            std::size_t leave = m_;
            for (std::size_t i = 0; i < m_; ++i) {
                if (!alive_[i] || t_[i][enter] <= 0) continue;
                if (leave == m_) {
                    leave = i;
                    continue;
                }
                const Rat cur = t_[i][cols_] / t_[i][enter];
                const Rat best = t_[leave][cols_] / t_[leave][enter];
                if (cur < best || (cur == best && basis_[i] < basis_[leave])) leave = i;
            }
            if (leave == m_) return false;  // unbounded direction
            pivot(leave, enter);
        }
    }

    void pivot(std::size_t r, std::size_t c) {
        const Rat inv = 1 / t_[r][c];
        for (auto& x : t_[r]) x *= inv;
        for (std::size_t i = 0; i < t_.size(); ++i) {
            if (i == r) continue;
            const Rat f = t_[i][c];
            if (f == 0) continue;
            for (std::size_t j = 0; j <= cols_; ++j) t_[i][j] -= f * t_[r][j];
        }
        basis_[r] = c;
    }

    // After a feasible phase 1, pivot basic artificials onto structural or
    // slack columns; a row with no such entry is a redundant constraint and
    // is deactivated (its dual weight stays zero).
    void expel_artificials() {
        for (std::size_t i = 0; i < m_; ++i) {
            if (basis_[i] < first_artificial_) continue;
            std::size_t c = first_artificial_;
            for (std::size_t j = 0; j < first_artificial_; ++j)
                if (t_[i][j] != 0) {
                    c = j;
                    break;
                }
            if (c < first_artificial_)
                pivot(i, c);
            else
                alive_[i] = false;
        }
    }

    void check_certificates(const RationalLP& lp, const LPSolution& s) const {
        Rat dual_value(0);
        for (std::size_t i = 0; i < m_; ++i) {
            if (s.dual[i] < 0) throw std::logic_error("lp: negative dual");
            Rat ax(0);
            for (std::size_t j = 0; j < n_; ++j) ax += lp.rows[i][j] * s.primal[j];
            if (ax > lp.rhs[i]) throw std::logic_error("lp: primal infeasibility");
            if (s.dual[i] > 0 && ax != lp.rhs[i])
                throw std::logic_error("lp: complementary slackness (rows)");
            dual_value += s.dual[i] * lp.rhs[i];
        }
        for (std::size_t j = 0; j < n_; ++j) {
            if (s.primal[j] < 0) throw std::logic_error("lp: negative primal");
            Rat aty(0);
            for (std::size_t i = 0; i < m_; ++i) aty += lp.rows[i][j] * s.dual[i];
            if (aty < lp.objective[j]) throw std::logic_error("lp: dual infeasibility");
            if (s.primal[j] > 0 && aty != lp.objective[j])
                throw std::logic_error("lp: complementary slackness (columns)");
        }
        if (dual_value != s.value) throw std::logic_error("lp: nonzero duality gap");
    }

    std::size_t n_, m_, cols_ = 0, first_artificial_ = 0;
    std::vector<std::vector<Rat>> t_;
    std::vector<std::size_t> basis_;
    std::vector<int> flip_;
    std::vector<bool> alive_;
};

}  // namespace

LPSolution solve(const RationalLP& lp) {
    if (lp.rows.empty()) {
        // No constraints: bounded only if the objective is nonpositive.
        LPSolution s;
        for (const auto& c : lp.objective)
            if (c > 0) {
                s.status = LPStatus::Unbounded;
                return s;
            }
        s.status = LPStatus::Optimal;
        s.value = 0;
        s.primal.assign(lp.objective.size(), Rat(0));
        return s;
    }
    SimplexTableau tab(lp);
    return tab.run(lp);
}

}  // namespace sclgp
