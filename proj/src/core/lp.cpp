#include "polysparse/lp.hpp"

#include <numeric>
#include <stdexcept>

namespace polysparse {

const char* to_string(LPStatus s)
{
    switch (s) {
    case LPStatus::optimal: return "optimal";
    case LPStatus::infeasible: return "infeasible";
    case LPStatus::unbounded: return "unbounded";
    }
    return "?";
}

namespace {

enum class DualOutcome { optimal, infeasible, unbounded };

// Standard-form tableau for min b.y s.t. A^T y = c, y >= 0 with one column per
// primal row. Artificial columns are not stored: once an artificial leaves the
// basis it never re-enters.
class DualTableau {
public:
    DualTableau(const HPolytope& p, std::span<const std::size_t> rows, std::span<const Rational> c)
        : p_(p), rows_(rows), m_(rows.size())
    {
        const std::size_t n = p.dim;
        t_.assign(n, QVector(m_));
        rhs_.resize(n);
        basic_.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            const bool flip = c[i] < 0;
            rhs_[i] = flip ? Rational(-c[i]) : c[i];
            for (std::size_t j = 0; j < m_; ++j) {
                const Rational& aij = p.ineqs[rows_[j]].a[i];
                if (aij != 0)
                    t_[i][j] = flip ? Rational(-aij) : aij;
            }
            basic_[i] = m_ + i;
        }
    }

    DualOutcome solve()
    {
        // Phase I: minimize the sum of artificials.
        obj_.assign(m_, Rational(0));
        w_ = 0;
        for (std::size_t i = 0; i < t_.size(); ++i) {
            for (std::size_t j = 0; j < m_; ++j)
                if (t_[i][j] != 0)
                    obj_[j] -= t_[i][j];
            w_ -= rhs_[i];
        }
        if (iterate() == DualOutcome::unbounded)
            throw std::logic_error("solve_lp: phase I unbounded");
        if (w_ != 0)
            return DualOutcome::infeasible;

        drive_out_artificials();

        // Phase II: costs b_j.
        obj_.assign(m_, Rational(0));
        w_ = 0;
        for (std::size_t j = 0; j < m_; ++j)
            obj_[j] = cost(j);
        for (std::size_t i = 0; i < t_.size(); ++i) {
            const Rational cb = cost(basic_[i]);
            if (cb == 0)
                continue;
            for (std::size_t j = 0; j < m_; ++j)
                if (t_[i][j] != 0)
                    obj_[j] -= cb * t_[i][j];
            w_ -= cb * rhs_[i];
        }
        return iterate();
    }

    std::vector<std::size_t> basis_rows() const
    {
        std::vector<std::size_t> out;
        for (auto b : basic_)
            if (b < m_)
                out.push_back(rows_[b]);
        return out;
    }

private:
    const Rational& cost(std::size_t j) const { return p_.ineqs[rows_[j]].b; }

    // Bland's rule: lowest-index improving column, ties in the ratio test go to
    // the lowest-index basic variable.
    DualOutcome iterate()
    {
        for (;;) {
            std::size_t enter = m_;
            for (std::size_t j = 0; j < m_; ++j)
                if (obj_[j] < 0) {
                    enter = j;
                    break;
                }
            if (enter == m_)
                return DualOutcome::optimal;

            std::size_t leave = t_.size();
            Rational best;
            for (std::size_t i = 0; i < t_.size(); ++i) {
                if (t_[i][enter] <= 0)
                    continue;
                Rational ratio = rhs_[i] / t_[i][enter];
                if (leave == t_.size() || ratio < best || (ratio == best && basic_[i] < basic_[leave])) {
                    best = std::move(ratio);
                    leave = i;
                }
            }
            if (leave == t_.size())
                return DualOutcome::unbounded;
            pivot(leave, enter);
        }
    }

    void pivot(std::size_t r, std::size_t col)
    {
        QVector& row = t_[r];
        const Rational piv = row[col];
        std::vector<std::size_t> nz;
        for (std::size_t j = 0; j < m_; ++j)
            if (row[j] != 0) {
                if (piv != 1)
                    row[j] /= piv;
                nz.push_back(j);
            }
        if (piv != 1)
            rhs_[r] /= piv;

        auto eliminate = [&](QVector& target, Rational& target_rhs) {
            const Rational f = target[col];
            if (f == 0)
                return;
            for (auto j : nz)
                target[j] -= f * row[j];
            if (rhs_[r] != 0)
                target_rhs -= f * rhs_[r];
        };
        for (std::size_t i = 0; i < t_.size(); ++i)
            if (i != r)
                eliminate(t_[i], rhs_[i]);
        eliminate(obj_, w_);
        basic_[r] = col;
    }

    void drive_out_artificials()
    {
        for (std::size_t i = 0; i < t_.size();) {
            if (basic_[i] < m_) {
                ++i;
                continue;
            }
            std::size_t col = m_;
            for (std::size_t j = 0; j < m_; ++j)
                if (t_[i][j] != 0) {
                    col = j;
                    break;
                }
            if (col == m_) {
                // Redundant equality row of A^T y = c.
                t_.erase(t_.begin() + static_cast<std::ptrdiff_t>(i));
                rhs_.erase(rhs_.begin() + static_cast<std::ptrdiff_t>(i));
                basic_.erase(basic_.begin() + static_cast<std::ptrdiff_t>(i));
                continue;
            }
            pivot(i, col);
            ++i;
        }
    }

    const HPolytope& p_;
    std::span<const std::size_t> rows_;
    std::size_t m_;
    std::vector<QVector> t_;
    QVector rhs_;
    std::vector<std::size_t> basic_;
    QVector obj_;
    Rational w_;
};

LPResult primal_from_basis(const HPolytope& p, const std::vector<std::size_t>& basis, std::span<const Rational> c)
{
    std::vector<QVector> m;
    QVector rhs;
    for (auto r : basis) {
        m.push_back(p.ineqs[r].a);
        rhs.push_back(p.ineqs[r].b);
    }
    LPResult res;
    res.argmax.assign(p.dim, Rational(0));
    if (!m.empty() && !solve_linear(std::move(m), std::move(rhs), res.argmax))
        throw std::logic_error("solve_lp: inconsistent optimal basis");
    res.status = LPStatus::optimal;
    res.value = dot(c, res.argmax);
    return res;
}

} // namespace

LPResult solve_lp(const HPolytope& p, std::span<const std::size_t> rows, std::span<const Rational> c)
{
    if (c.size() != p.dim)
        throw std::invalid_argument("solve_lp: objective dimension " + std::to_string(c.size()) +
                                    " does not match polytope dimension " + std::to_string(p.dim));
    DualTableau tab(p, rows, c);
    switch (tab.solve()) {
    case DualOutcome::optimal: {
        auto res = primal_from_basis(p, tab.basis_rows(), c);
        for (auto r : rows)
            if (!p.ineqs[r].satisfied_by(res.argmax))
                throw std::logic_error("solve_lp: recovered point violates a row");
        return res;
    }
    case DualOutcome::unbounded:
        return LPResult{LPStatus::infeasible, {}, {}};
    case DualOutcome::infeasible:
        break;
    }
    // Dual infeasible: the primal is unbounded or infeasible. Decide with c = 0,
    // whose dual is always feasible.
    const QVector zero(p.dim);
    DualTableau feas(p, rows, zero);
    if (feas.solve() == DualOutcome::unbounded)
        return LPResult{LPStatus::infeasible, {}, {}};
    return LPResult{LPStatus::unbounded, {}, {}};
}

LPResult solve_lp(const HPolytope& p, std::span<const Rational> c)
{
    std::vector<std::size_t> rows(p.ineqs.size());
    std::iota(rows.begin(), rows.end(), std::size_t{0});
    return solve_lp(p, rows, c);
}

bool is_feasible(const HPolytope& p)
{
    const QVector zero(p.dim);
    return solve_lp(p, zero).status != LPStatus::infeasible;
}

bool is_bounded(const HPolytope& p)
{
    QVector c(p.dim);
    for (std::size_t i = 0; i < p.dim; ++i) {
        for (int s : {1, -1}) {
            c[i] = s;
            const auto st = solve_lp(p, c).status;
            if (st == LPStatus::infeasible)
                return true;
            if (st == LPStatus::unbounded)
                return false;
        }
        c[i] = 0;
    }
    return true;
}

} // namespace polysparse
