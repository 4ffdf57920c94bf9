#include "polysparse/polytope.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace polysparse {

void LinIneq::normalize()
{
    for (const auto& x : a)
        if (x != 0) {
            const Rational s = abs(x);
            if (s != 1) {
                for (auto& y : a)
                    y /= s;
                b /= s;
            }
            return;
        }
}

bool lex_less(const QVector& lhs, const QVector& rhs)
{
    return std::lexicographical_compare(lhs.begin(), lhs.end(), rhs.begin(), rhs.end());
}

bool lex_less(const LinIneq& lhs, const LinIneq& rhs)
{
    if (lex_less(lhs.a, rhs.a))
        return true;
    if (lex_less(rhs.a, lhs.a))
        return false;
    return lhs.b < rhs.b;
}

HPolytope::HPolytope(std::size_t d, std::vector<LinIneq> rows)
    : dim(d), ineqs(std::move(rows))
{
    for (const auto& r : ineqs)
        if (r.dim() != dim)
            throw std::invalid_argument("HPolytope: inequality dimension does not match ambient dimension");
}

HPolytope HPolytope::empty(std::size_t d)
{
    HPolytope p(d);
    p.ineqs.push_back(LinIneq{QVector(d), Rational(-1)});
    return p;
}

HPolytope HPolytope::box(std::size_t d, const Rational& lo, const Rational& hi)
{
    HPolytope p(d);
    for (std::size_t i = 0; i < d; ++i) {
        QVector lower(d), upper(d);
        lower[i] = -1;
        upper[i] = 1;
        p.ineqs.push_back(LinIneq{std::move(lower), -lo});
        p.ineqs.push_back(LinIneq{std::move(upper), hi});
    }
    return p;
}

bool HPolytope::is_empty_marker() const
{
    return ineqs.size() == 1 && ineqs.front().is_contradiction();
}

bool HPolytope::contains(const QVector& x) const
{
    if (x.size() != dim)
        throw std::invalid_argument("HPolytope::contains: dimension mismatch");
    return std::all_of(ineqs.begin(), ineqs.end(), [&](const LinIneq& r) { return r.satisfied_by(x); });
}

void HPolytope::add(LinIneq row)
{
    if (row.dim() != dim)
        throw std::invalid_argument("HPolytope::add: dimension mismatch");
    ineqs.push_back(std::move(row));
}

VPolytope::VPolytope(std::size_t d, std::vector<QVector> pts)
    : dim(d), vertices(std::move(pts))
{
    for (const auto& v : vertices)
        if (v.size() != dim)
            throw std::invalid_argument("VPolytope: point dimension does not match ambient dimension");
}

void VPolytope::sort_unique()
{
    std::sort(vertices.begin(), vertices.end(), [](const QVector& a, const QVector& b) { return lex_less(a, b); });
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
}

HPolytope normalize_rows(const HPolytope& p)
{
    std::map<QVector, Rational, bool (*)(const QVector&, const QVector&)> best(&lex_less);
    for (auto row : p.ineqs) {
        if (row.is_contradiction())
            return HPolytope::empty(p.dim);
        if (row.is_tautology())
            continue;
        row.normalize();
        auto [it, inserted] = best.try_emplace(row.a, row.b);
        if (!inserted && row.b < it->second)
            it->second = row.b;
    }
    HPolytope out(p.dim);
    out.ineqs.reserve(best.size());
    for (auto& [a, b] : best)
        out.ineqs.push_back(LinIneq{a, b});
    return out;
}

} // namespace polysparse
