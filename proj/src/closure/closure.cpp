#include "polysparse/closure.hpp"

#include <algorithm>
#include <stdexcept>

namespace polysparse::closure {

ClosureSpec::ClosureSpec(std::size_t k_, std::size_t dim_) : k(k_), dim(dim_)
{
    if (dim == 0)
        throw std::invalid_argument("ClosureSpec: dimension must be positive");
    if (k < 1 || k > dim)
        throw std::invalid_argument("ClosureSpec: sparsity k=" + std::to_string(k) + " outside [1, " +
                                    std::to_string(dim) + "]");
}

InvalidCut::InvalidCut(std::size_t idx, const LinIneq& c, const Rational& s)
    : std::invalid_argument("cut #" + std::to_string(idx) + " (" + to_string(c.a) + " <= " + to_string(c.b) +
                            ") is not valid: support value " + to_string(s)),
      index(idx), cut(c), support_value(s)
{
}

CutSet::CutSet(std::size_t dim, std::vector<LinIneq> cuts, std::string label)
    : dim_(dim), cuts_(std::move(cuts)), label_(std::move(label))
{
    for (const auto& c : cuts_)
        if (c.dim() != dim_)
            throw std::invalid_argument("CutSet: cut dimension does not match");
}

CutSet CutSet::certified(const HPolytope& reference, std::vector<LinIneq> cuts, std::string label)
{
    CutSet set(reference.dim, std::move(cuts), std::move(label));
    for (std::size_t i = 0; i < set.cuts_.size(); ++i) {
        const auto res = solve_lp(reference, set.cuts_[i].a);
        if (res.status == LPStatus::unbounded)
            throw std::domain_error("CutSet: reference polytope is unbounded along cut #" + std::to_string(i));
        if (res.status == LPStatus::optimal && res.value > set.cuts_[i].b)
            throw InvalidCut(i, set.cuts_[i], res.value);
    }
    return set;
}

CutSet CutSet::trusted(std::size_t dim, std::vector<LinIneq> cuts, std::string label)
{
    return CutSet(dim, std::move(cuts), std::move(label));
}

HPolytope sparse_closure(const HPolytope& p, std::size_t k)
{
    const ClosureSpec params(k, p.dim);
    const HPolytope base = canonicalize(p);
    if (base.is_empty_marker())
        return base;
    if (!is_bounded(base))
        throw std::domain_error("sparse_closure: polytope is unbounded");
    if (params.k == params.dim)
        return base;

    HPolytope acc(p.dim);
    for (const auto& subset : k_subsets(p.dim, params.k)) {
        const HPolytope lifted = lift(project(base, subset), subset, p.dim);
        acc.ineqs.insert(acc.ineqs.end(), lifted.ineqs.begin(), lifted.ineqs.end());
        acc = canonicalize(acc);
    }
    return acc;
}

HPolytope budgeted_closure(const HPolytope& p, std::size_t k, const CutSet& d)
{
    if (d.dim() != p.dim)
        throw std::invalid_argument("budgeted_closure: cut set dimension does not match");
    HPolytope cuts(p.dim, d.cuts());
    return intersect(sparse_closure(p, k), cuts);
}

void require_nonnegative(const HPolytope& p)
{
    QVector c(p.dim);
    for (std::size_t i = 0; i < p.dim; ++i) {
        c[i] = -1;
        const auto res = solve_lp(p, c);
        if (res.status == LPStatus::infeasible)
            return;
        if (res.status == LPStatus::unbounded || res.value > 0)
            throw std::domain_error("polytope is not contained in the nonnegative orthant (coordinate " +
                                    std::to_string(i) + ")");
        c[i] = 0;
    }
}

namespace {

bool is_nonnegativity_bound(const LinIneq& row)
{
    LinIneq r = row;
    r.normalize();
    return r.b == 0 && r.sparsity() == 1 && std::find(r.a.begin(), r.a.end(), Rational(-1)) != r.a.end();
}

bool all_nonnegative(const QVector& a)
{
    for (const auto& x : a)
        if (x < 0)
            return false;
    return true;
}

HPolytope symmetrize_fast(const HPolytope& p)
{
    HPolytope out(p.dim);
    for (const auto& row : p.ineqs) {
        if (is_nonnegativity_bound(row))
            continue;
        std::vector<std::size_t> support;
        for (std::size_t j = 0; j < p.dim; ++j)
            if (row.a[j] != 0)
                support.push_back(j);
        const std::size_t patterns = std::size_t{1} << support.size();
        for (std::size_t mask = 0; mask < patterns; ++mask) {
            LinIneq r = row;
            for (std::size_t s = 0; s < support.size(); ++s)
                if (mask & (std::size_t{1} << s))
                    r.a[support[s]] = -r.a[support[s]];
            out.ineqs.push_back(std::move(r));
        }
    }
    return canonicalize(out);
}

HPolytope symmetrize_generic(const HPolytope& p)
{
    const VPolytope v = vertices(p);
    VPolytope all(p.dim);
    const std::size_t patterns = std::size_t{1} << p.dim;
    for (const auto& x : v.vertices)
        for (std::size_t mask = 0; mask < patterns; ++mask) {
            QVector y = x;
            for (std::size_t j = 0; j < p.dim; ++j)
                if (mask & (std::size_t{1} << j))
                    y[j] = -y[j];
            all.vertices.push_back(std::move(y));
        }
    all.sort_unique();
    return canonicalize(facets(all));
}

} // namespace

bool has_nonnegative_form(const HPolytope& p)
{
    for (const auto& row : p.ineqs)
        if (!is_nonnegativity_bound(row) && !all_nonnegative(row.a))
            return false;
    return true;
}

HPolytope symmetrize(const HPolytope& p, SymmetrizeMethod method)
{
    const HPolytope base = canonicalize(p);
    if (base.is_empty_marker())
        return base;
    require_nonnegative(base);
    if (!is_bounded(base))
        throw std::domain_error("symmetrize: polytope is unbounded");
    if (method != SymmetrizeMethod::generic && has_nonnegative_form(base))
        return symmetrize_fast(base);
    return symmetrize_generic(base);
}

bool is_down_monotone(const HPolytope& p)
{
    require_nonnegative(p);
    for (const auto& v : vertices(p).vertices)
        for (std::size_t i = 0; i < p.dim; ++i) {
            if (v[i] == 0)
                continue;
            QVector w = v;
            w[i] = 0;
            if (!p.contains(w))
                return false;
        }
    return true;
}

} // namespace polysparse::closure
