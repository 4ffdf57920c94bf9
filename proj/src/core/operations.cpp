#include "polysparse/operations.hpp"

#include "polysparse/double_description.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace polysparse {

HPolytope canonicalize(const HPolytope& p)
{
    HPolytope q = normalize_rows(p);
    if (q.is_empty_marker())
        return q;
    if (!is_feasible(q))
        return HPolytope::empty(q.dim);

    std::vector<std::size_t> active(q.ineqs.size());
    std::iota(active.begin(), active.end(), std::size_t{0});
    std::vector<std::size_t> others;
    for (std::size_t i = 0; i < q.ineqs.size(); ++i) {
        others.clear();
        for (auto j : active)
            if (j != i)
                others.push_back(j);
        const auto res = solve_lp(q, others, q.ineqs[i].a);
        if (res.status == LPStatus::optimal && res.value <= q.ineqs[i].b)
            active.erase(std::find(active.begin(), active.end(), i));
    }

    HPolytope out(q.dim);
    for (auto i : active)
        out.ineqs.push_back(std::move(q.ineqs[i]));
    return out;
}

VPolytope canonicalize(const VPolytope& v)
{
    if (v.empty())
        return VPolytope(v.dim);
    return vertices(facets(v));
}

namespace {

void validate_index_set(const IndexSet& k, std::size_t dim, const char* who)
{
    if (k.empty())
        throw std::invalid_argument(std::string(who) + ": empty index set");
    for (std::size_t i = 0; i < k.size(); ++i) {
        if (k[i] >= dim)
            throw std::invalid_argument(std::string(who) + ": index " + std::to_string(k[i]) + " out of range");
        if (i > 0 && k[i] <= k[i - 1])
            throw std::invalid_argument(std::string(who) + ": index set must be strictly increasing");
    }
}

// Eliminates column col from every row of p (dimension drops by one).
HPolytope eliminate(const HPolytope& p, std::size_t col)
{
    std::vector<const LinIneq*> pos, neg;
    HPolytope out(p.dim - 1);
    auto drop_col = [&](const QVector& a) {
        QVector r;
        r.reserve(a.size() - 1);
        for (std::size_t j = 0; j < a.size(); ++j)
            if (j != col)
                r.push_back(a[j]);
        return r;
    };
    for (const auto& row : p.ineqs) {
        if (row.a[col] > 0)
            pos.push_back(&row);
        else if (row.a[col] < 0)
            neg.push_back(&row);
        else
            out.ineqs.push_back(LinIneq{drop_col(row.a), row.b});
    }
    for (const auto* up : pos)
        for (const auto* lo : neg) {
            const Rational cu = up->a[col];
            const Rational cl = -lo->a[col];
            LinIneq comb{QVector(p.dim), cl * up->b + cu * lo->b};
            for (std::size_t j = 0; j < p.dim; ++j)
                comb.a[j] = cl * up->a[j] + cu * lo->a[j];
            comb.a = drop_col(comb.a);
            out.ineqs.push_back(std::move(comb));
        }
    return out;
}

} // namespace

HPolytope project(const HPolytope& p, const IndexSet& k)
{
    validate_index_set(k, p.dim, "project");
    HPolytope cur = canonicalize(p);
    if (cur.is_empty_marker())
        return HPolytope::empty(k.size());

    std::vector<std::size_t> coords(p.dim);
    std::iota(coords.begin(), coords.end(), std::size_t{0});
    for (std::size_t v = 0; v < p.dim; ++v) {
        if (std::binary_search(k.begin(), k.end(), v))
            continue;
        const auto col = static_cast<std::size_t>(std::find(coords.begin(), coords.end(), v) - coords.begin());
        cur = canonicalize(eliminate(cur, col));
        coords.erase(coords.begin() + static_cast<std::ptrdiff_t>(col));
        if (cur.is_empty_marker())
            return HPolytope::empty(k.size());
    }
    return cur;
}

HPolytope lift(const HPolytope& p, const IndexSet& k, std::size_t dim)
{
    if (p.dim != k.size())
        throw std::invalid_argument("lift: index set size does not match polytope dimension");
    validate_index_set(k, dim, "lift");
    HPolytope out(dim);
    for (const auto& row : p.ineqs) {
        LinIneq l{QVector(dim), row.b};
        for (std::size_t j = 0; j < k.size(); ++j)
            l.a[k[j]] = row.a[j];
        out.ineqs.push_back(std::move(l));
    }
    return out;
}

VPolytope vertices(const HPolytope& p)
{
    const HPolytope q = normalize_rows(p);
    VPolytope out(p.dim);
    if (q.is_empty_marker())
        return out;

    const std::size_t d = p.dim + 1;
    std::vector<QVector> cons;
    cons.reserve(q.ineqs.size() + 1);
    QVector lambda(d);
    lambda[p.dim] = -1;
    cons.push_back(std::move(lambda));
    for (const auto& row : q.ineqs) {
        QVector h(row.a);
        h.push_back(-row.b);
        cons.push_back(std::move(h));
    }
    const auto gen = cone_generators(cons, d);

    bool recession = !gen.lineality.empty();
    for (const auto& r : gen.rays) {
        if (r[p.dim] == 0) {
            recession = true;
            continue;
        }
        QVector v(r.begin(), r.end() - 1);
        for (auto& x : v)
            x /= r[p.dim];
        out.vertices.push_back(std::move(v));
    }
    if (!out.vertices.empty() && recession)
        throw std::domain_error("vertices: polyhedron is unbounded");
    out.sort_unique();
    return out;
}

HPolytope facets(const VPolytope& v)
{
    if (v.empty())
        return HPolytope::empty(v.dim);
    const std::size_t d = v.dim + 1;
    std::vector<QVector> cons;
    VPolytope sorted = v;
    sorted.sort_unique();
    for (const auto& x : sorted.vertices) {
        QVector h(x);
        h.push_back(Rational(-1));
        cons.push_back(std::move(h));
    }
    const auto gen = cone_generators(cons, d);

    HPolytope out(v.dim);
    auto as_row = [&](const QVector& g, bool negate) {
        LinIneq row{QVector(g.begin(), g.end() - 1), g.back()};
        if (negate) {
            for (auto& x : row.a)
                x = -x;
            row.b = -row.b;
        }
        return row;
    };
    for (const auto& l : gen.lineality) {
        out.ineqs.push_back(as_row(l, false));
        out.ineqs.push_back(as_row(l, true));
    }
    for (const auto& r : gen.rays) {
        auto row = as_row(r, false);
        if (is_zero(row.a))
            continue;
        out.ineqs.push_back(std::move(row));
    }
    return normalize_rows(out);
}

HPolytope intersect(const HPolytope& p, const HPolytope& q)
{
    if (p.dim != q.dim)
        throw std::invalid_argument("intersect: dimension mismatch");
    HPolytope out = p;
    out.ineqs.insert(out.ineqs.end(), q.ineqs.begin(), q.ineqs.end());
    return canonicalize(out);
}

namespace {

HPolytope polar_of_points(const std::vector<QVector>& pts, std::size_t dim)
{
    HPolytope out(dim);
    for (const auto& x : pts)
        out.ineqs.push_back(LinIneq{x, Rational(1)});
    return canonicalize(out);
}

void require_origin_interior(const HPolytope& canonical)
{
    if (canonical.is_empty_marker())
        throw std::domain_error("polar: polytope is empty");
    for (const auto& row : canonical.ineqs)
        if (row.b <= 0)
            throw std::domain_error("polar: origin is not an interior point");
}

} // namespace

HPolytope polar(const HPolytope& p)
{
    const HPolytope c = canonicalize(p);
    require_origin_interior(c);
    return polar_of_points(vertices(c).vertices, p.dim);
}

HPolytope polar(const VPolytope& v)
{
    require_origin_interior(facets(v));
    return polar_of_points(v.vertices, v.dim);
}

HPolytope scale(const HPolytope& p, const Rational& alpha)
{
    if (alpha <= 0)
        throw std::invalid_argument("scale: factor must be positive");
    HPolytope out = p;
    for (auto& row : out.ineqs)
        row.b *= alpha;
    return out;
}

VPolytope scale(const VPolytope& v, const Rational& alpha)
{
    if (alpha <= 0)
        throw std::invalid_argument("scale: factor must be positive");
    VPolytope out = v;
    for (auto& x : out.vertices)
        for (auto& c : x)
            c *= alpha;
    return out;
}

QVector reflect(const QVector& x, const IndexSet& keep)
{
    QVector y = x;
    for (std::size_t i = 0; i < y.size(); ++i)
        if (!std::binary_search(keep.begin(), keep.end(), i))
            y[i] = -y[i];
    return y;
}

HPolytope reflect(const HPolytope& p, const IndexSet& keep)
{
    HPolytope out(p.dim);
    for (const auto& row : p.ineqs)
        out.ineqs.push_back(LinIneq{reflect(row.a, keep), row.b});
    if (p.is_empty_marker())
        return out;
    return normalize_rows(out);
}

VPolytope reflect(const VPolytope& v, const IndexSet& keep)
{
    VPolytope out(v.dim);
    for (const auto& x : v.vertices)
        out.vertices.push_back(reflect(x, keep));
    out.sort_unique();
    return out;
}

HPolytope linear_image(const HPolytope& p, const QMatrix& r)
{
    if (r.rows() != p.dim || r.cols() != p.dim)
        throw std::invalid_argument("linear_image: matrix does not match dimension");
    // x in R(P) iff R^{-1} x in P, so each row a becomes R^{-T} a.
    const QMatrix inv_t = r.inverse().transpose();
    HPolytope out(p.dim);
    for (const auto& row : p.ineqs)
        out.ineqs.push_back(LinIneq{inv_t * row.a, row.b});
    if (p.is_empty_marker())
        return out;
    return normalize_rows(out);
}

VPolytope linear_image(const VPolytope& v, const QMatrix& r)
{
    if (r.rows() != v.dim || r.cols() != v.dim)
        throw std::invalid_argument("linear_image: matrix does not match dimension");
    VPolytope out(v.dim);
    for (const auto& x : v.vertices)
        out.vertices.push_back(r * x);
    out.sort_unique();
    return out;
}

bool includes(const HPolytope& outer, const HPolytope& inner)
{
    if (outer.dim != inner.dim)
        throw std::invalid_argument("includes: dimension mismatch");
    if (!is_feasible(inner))
        return true;
    for (const auto& row : outer.ineqs) {
        const auto res = solve_lp(inner, row.a);
        if (res.status == LPStatus::unbounded)
            return false;
        if (res.status == LPStatus::optimal && res.value > row.b)
            return false;
    }
    return true;
}

bool equal(const HPolytope& p, const HPolytope& q)
{
    if (p.dim != q.dim)
        throw std::invalid_argument("equal: dimension mismatch");
    return includes(p, q) && includes(q, p);
}

bool equal(const VPolytope& p, const VPolytope& q)
{
    if (p.dim != q.dim)
        throw std::invalid_argument("equal: dimension mismatch");
    return canonicalize(p) == canonicalize(q);
}

Rational support(const HPolytope& p, const QVector& c)
{
    auto res = solve_lp(p, c);
    if (res.status == LPStatus::infeasible)
        throw std::domain_error("support: polytope is empty");
    if (res.status == LPStatus::unbounded)
        throw std::domain_error("support: unbounded in direction " + to_string(c));
    return res.value;
}

QMatrix cayley_rotation(const QMatrix& s)
{
    const std::size_t n = s.rows();
    if (s.cols() != n)
        throw std::invalid_argument("cayley_rotation: matrix is not square");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (s(i, j) != -s(j, i))
                throw std::invalid_argument("cayley_rotation: matrix is not skew-symmetric");
    const QMatrix id = QMatrix::identity(n);
    QMatrix inv;
    try {
        inv = (id + s).inverse();
    } catch (const std::domain_error&) {
        throw std::domain_error("cayley_rotation: I + S is singular");
    }
    return (id - s) * inv;
}

std::vector<IndexSet> k_subsets(std::size_t n, std::size_t k)
{
    std::vector<IndexSet> out;
    if (k > n)
        return out;
    IndexSet cur(k);
    std::iota(cur.begin(), cur.end(), std::size_t{0});
    for (;;) {
        out.push_back(cur);
        std::size_t i = k;
        while (i > 0 && cur[i - 1] == n - k + (i - 1))
            --i;
        if (i == 0)
            return out;
        ++cur[i - 1];
        for (std::size_t j = i; j < k; ++j)
            cur[j] = cur[j - 1] + 1;
    }
}

IndexSet all_indices(std::size_t n)
{
    IndexSet out(n);
    std::iota(out.begin(), out.end(), std::size_t{0});
    return out;
}

} // namespace polysparse
