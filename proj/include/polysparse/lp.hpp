#pragma once

#include "polysparse/polytope.hpp"

#include <span>

namespace polysparse {

enum class LPStatus { optimal, infeasible, unbounded };

const char* to_string(LPStatus s);

struct LPResult {
    LPStatus status = LPStatus::infeasible;
    Rational value;  ///< valid when optimal
    QVector argmax;  ///< valid when optimal; satisfies every input row exactly
};

/**
 * Exact maximization of c . x over {x : Ax <= b}.
 *
 * Runs the two-phase primal simplex with Bland's rule on the dual
 * min { b . y : A^T y = c, y >= 0 }, whose tableau has only dim rows. The primal
 * optimum is recovered from the final basis by solving the tight rows exactly.
 * Deterministic: identical input gives an identical argmax.
 *
 * Throws std::invalid_argument on dimension mismatch.
 */
LPResult solve_lp(const HPolytope& p, std::span<const Rational> c);

/// Same, restricted to a subset of the rows of p (indices into p.ineqs).
LPResult solve_lp(const HPolytope& p, std::span<const std::size_t> rows, std::span<const Rational> c);

bool is_feasible(const HPolytope& p);

/// True when p is empty or has finite support in every direction +-e_i.
bool is_bounded(const HPolytope& p);

} // namespace polysparse
