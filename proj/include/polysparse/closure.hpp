#pragma once

#include "polysparse/operations.hpp"

#include <string>
#include <vector>

namespace polysparse::closure {

/// Sparsity level k for polytopes in R^n, 1 <= k <= n.
struct ClosureSpec {
    std::size_t k;
    std::size_t dim;

    ClosureSpec(std::size_t k, std::size_t dim);
};

/**
 * A finite set D of (possibly dense) cuts, each certified valid for a reference
 * polytope when the set is built.
 */
class CutSet {
public:
    /// Certifies every cut by one LP over reference. Throws InvalidCut naming the
    /// first cut whose support value exceeds its right-hand side.
    static CutSet certified(const HPolytope& reference, std::vector<LinIneq> cuts, std::string label = {});

    /// Builds without LP certification; validity is the caller's responsibility
    /// (used at dimensions where the reference has no tractable H-description).
    static CutSet trusted(std::size_t dim, std::vector<LinIneq> cuts, std::string label = {});

    const std::vector<LinIneq>& cuts() const { return cuts_; }
    const std::string& label() const { return label_; }
    std::size_t dim() const { return dim_; }
    std::size_t size() const { return cuts_.size(); }

private:
    CutSet(std::size_t dim, std::vector<LinIneq> cuts, std::string label);

    std::size_t dim_;
    std::vector<LinIneq> cuts_;
    std::string label_;
};

class InvalidCut : public std::invalid_argument {
public:
    InvalidCut(std::size_t index, const LinIneq& cut, const Rational& support);

    std::size_t index;
    LinIneq cut;
    Rational support_value;
};

/// Computes P^k as the intersection over k-subsets K (lexicographic order) of
/// lift(project(P, K)), canonicalizing after each intersection. k == n returns
/// canonicalize(P). Throws std::invalid_argument for k out of range and
/// std::domain_error for unbounded P.
HPolytope sparse_closure(const HPolytope& p, std::size_t k);

/// P^{k,D} = P^k intersected with the cuts of D.
HPolytope budgeted_closure(const HPolytope& p, std::size_t k, const CutSet& d);

enum class SymmetrizeMethod { automatic, fast, generic };

/**
 * conv of the union of all 2^n orthant reflections of P (P must lie in R^n_+).
 *
 * The fast path applies when every row other than the nonnegativity bounds
 * -x_i <= 0 has nonnegative coefficients: it emits every reflected row a^I x <= b.
 * Otherwise (or when generic is requested) the reflected vertex sets are unioned
 * and passed to facets(). Requesting fast on an unsuitable description falls back
 * to generic.
 */
HPolytope symmetrize(const HPolytope& p, SymmetrizeMethod method = SymmetrizeMethod::automatic);

/// True when the description qualifies for the reflected-row fast path.
bool has_nonnegative_form(const HPolytope& p);

/// Whether zeroing any single coordinate of any vertex stays inside P.
bool is_down_monotone(const HPolytope& p);

/// Throws std::domain_error unless P is contained in the nonnegative orthant.
void require_nonnegative(const HPolytope& p);

} // namespace polysparse::closure
