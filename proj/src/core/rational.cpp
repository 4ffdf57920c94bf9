#include "polysparse/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace polysparse {

QMatrix::QMatrix(std::size_t rows, std::size_t cols)
    : data_(rows, QVector(cols)), cols_(cols)
{
}

QMatrix::QMatrix(std::vector<QVector> rows)
    : data_(std::move(rows)), cols_(data_.empty() ? 0 : data_.front().size())
{
    for (const auto& r : data_)
        if (r.size() != cols_)
            throw std::invalid_argument("QMatrix: ragged rows");
}

QMatrix QMatrix::identity(std::size_t n)
{
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

QMatrix QMatrix::transpose() const
{
    QMatrix t(cols_, rows());
    for (std::size_t i = 0; i < rows(); ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t(j, i) = data_[i][j];
    return t;
}

QMatrix QMatrix::operator*(const QMatrix& rhs) const
{
    if (cols_ != rhs.rows())
        throw std::invalid_argument("QMatrix: dimension mismatch in product");
    QMatrix out(rows(), rhs.cols());
    for (std::size_t i = 0; i < rows(); ++i)
        for (std::size_t l = 0; l < cols_; ++l) {
            if (data_[i][l] == 0)
                continue;
            for (std::size_t j = 0; j < rhs.cols(); ++j)
                out(i, j) += data_[i][l] * rhs(l, j);
        }
    return out;
}

QMatrix QMatrix::operator+(const QMatrix& rhs) const
{
    if (rows() != rhs.rows() || cols_ != rhs.cols())
        throw std::invalid_argument("QMatrix: dimension mismatch in sum");
    QMatrix out = *this;
    for (std::size_t i = 0; i < rows(); ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            out(i, j) += rhs(i, j);
    return out;
}

QMatrix QMatrix::operator-(const QMatrix& rhs) const
{
    if (rows() != rhs.rows() || cols_ != rhs.cols())
        throw std::invalid_argument("QMatrix: dimension mismatch in difference");
    QMatrix out = *this;
    for (std::size_t i = 0; i < rows(); ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            out(i, j) -= rhs(i, j);
    return out;
}

QVector QMatrix::operator*(const QVector& v) const
{
    if (cols_ != v.size())
        throw std::invalid_argument("QMatrix: dimension mismatch in matrix-vector product");
    QVector out(rows());
    for (std::size_t i = 0; i < rows(); ++i)
        out[i] = dot(data_[i], v);
    return out;
}

QMatrix QMatrix::inverse() const
{
    const std::size_t n = rows();
    if (n != cols_)
        throw std::invalid_argument("QMatrix: inverse of a non-square matrix");
    QMatrix a = *this;
    QMatrix inv = identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a(piv, col) == 0)
            ++piv;
        if (piv == n)
            throw std::domain_error("QMatrix: singular matrix");
        std::swap(a.data_[piv], a.data_[col]);
        std::swap(inv.data_[piv], inv.data_[col]);
        const Rational p = a(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            a(col, j) /= p;
            inv(col, j) /= p;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a(r, col) == 0)
                continue;
            const Rational f = a(r, col);
            for (std::size_t j = 0; j < n; ++j) {
                a(r, j) -= f * a(col, j);
                inv(r, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

Rational QMatrix::determinant() const
{
    const std::size_t n = rows();
    if (n != cols_)
        throw std::invalid_argument("QMatrix: determinant of a non-square matrix");
    QMatrix a = *this;
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a(piv, col) == 0)
            ++piv;
        if (piv == n)
            return 0;
        if (piv != col) {
            std::swap(a.data_[piv], a.data_[col]);
            det = -det;
        }
        det *= a(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            if (a(r, col) == 0)
                continue;
            const Rational f = a(r, col) / a(col, col);
            for (std::size_t j = col; j < n; ++j)
                a(r, j) -= f * a(col, j);
        }
    }
    return det;
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b)
{
    if (a.size() != b.size())
        throw std::invalid_argument("dot: dimension mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0 && b[i] != 0)
            s += a[i] * b[i];
    return s;
}

Rational sq_norm(std::span<const Rational> v)
{
    return dot(v, v);
}

Rational l1_norm(std::span<const Rational> v)
{
    Rational s = 0;
    for (const auto& x : v)
        s += abs(x);
    return s;
}

std::size_t sparsity(std::span<const Rational> v)
{
    std::size_t nz = 0;
    for (const auto& x : v)
        if (x != 0)
            ++nz;
    return nz;
}

bool is_zero(std::span<const Rational> v)
{
    return sparsity(v) == 0;
}

QVector operator+(const QVector& a, const QVector& b)
{
    if (a.size() != b.size())
        throw std::invalid_argument("vector sum: dimension mismatch");
    QVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = a[i] + b[i];
    return out;
}

QVector operator-(const QVector& a, const QVector& b)
{
    if (a.size() != b.size())
        throw std::invalid_argument("vector difference: dimension mismatch");
    QVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = a[i] - b[i];
    return out;
}

QVector operator*(const Rational& s, const QVector& v)
{
    QVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out[i] = s * v[i];
    return out;
}

namespace {

Integer parse_integer(std::string_view s, std::string_view whole)
{
    std::size_t i = 0;
    if (!s.empty() && (s[0] == '-' || s[0] == '+'))
        i = 1;
    if (i == s.size())
        throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
    for (std::size_t j = i; j < s.size(); ++j)
        if (s[j] < '0' || s[j] > '9')
            throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
    return Integer(std::string(s[0] == '+' ? s.substr(1) : s));
}

} // namespace

Rational parse_rational(std::string_view token)
{
    const auto slash = token.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_integer(token, token));
    const Integer num = parse_integer(token.substr(0, slash), token);
    const auto den_text = token.substr(slash + 1);
    if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+'))
        throw std::invalid_argument("malformed rational '" + std::string(token) + "'");
    const Integer den = parse_integer(den_text, token);
    if (den == 0)
        throw std::invalid_argument("zero denominator in '" + std::string(token) + "'");
    return Rational(num, den);
}

std::string to_string(const Rational& q)
{
    const Integer& den = denominator(q);
    if (den == 1)
        return numerator(q).str();
    return numerator(q).str() + "/" + den.str();
}

std::string to_string(const QVector& v)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            s += ' ';
        s += to_string(v[i]);
    }
    return s;
}

double to_double(const Rational& q)
{
    return q.convert_to<double>();
}

Rational from_double(double x)
{
    if (!std::isfinite(x))
        throw std::invalid_argument("from_double: non-finite value");
    return Rational(x);
}

namespace {

// Row-reduces m (with optional augmented rhs) in place; returns pivot columns.
std::vector<std::size_t> row_reduce(std::vector<QVector>& m, QVector* rhs, std::size_t cols)
{
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t piv = r;
        while (piv < m.size() && m[piv][c] == 0)
            ++piv;
        if (piv == m.size())
            continue;
        std::swap(m[piv], m[r]);
        if (rhs)
            std::swap((*rhs)[piv], (*rhs)[r]);
        const Rational p = m[r][c];
        for (std::size_t j = c; j < cols; ++j)
            m[r][j] /= p;
        if (rhs)
            (*rhs)[r] /= p;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c] == 0)
                continue;
            const Rational f = m[i][c];
            for (std::size_t j = c; j < cols; ++j)
                m[i][j] -= f * m[r][j];
            if (rhs)
                (*rhs)[i] -= f * (*rhs)[r];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace

bool solve_linear(std::vector<QVector> m, QVector rhs, QVector& x)
{
    const std::size_t cols = m.empty() ? x.size() : m.front().size();
    const auto pivots = row_reduce(m, &rhs, cols);
    for (std::size_t i = pivots.size(); i < m.size(); ++i)
        if (rhs[i] != 0)
            return false;
    x.assign(cols, Rational(0));
    for (std::size_t i = 0; i < pivots.size(); ++i)
        x[pivots[i]] = rhs[i];
    return true;
}

std::size_t rank(std::vector<QVector> rows)
{
    if (rows.empty())
        return 0;
    const std::size_t cols = rows.front().size();
    return row_reduce(rows, nullptr, cols).size();
}

std::vector<QVector> null_space(std::vector<QVector> rows, std::size_t dim)
{
    const auto pivots = row_reduce(rows, nullptr, dim);
    std::vector<bool> is_pivot(dim, false);
    for (auto c : pivots)
        is_pivot[c] = true;
    std::vector<QVector> basis;
    for (std::size_t f = 0; f < dim; ++f) {
        if (is_pivot[f])
            continue;
        QVector z(dim);
        z[f] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            z[pivots[i]] = -rows[i][f];
        make_primitive(z);
        basis.push_back(std::move(z));
    }
    return basis;
}

void make_primitive(QVector& v)
{
    Integer l = 1;
    for (const auto& x : v)
        if (x != 0)
            l = boost::multiprecision::lcm(l, Integer(denominator(x)));
    Integer g = 0;
    for (const auto& x : v)
        if (x != 0)
            g = boost::multiprecision::gcd(g, Integer(numerator(x) * (l / denominator(x))));
    if (g == 0)
        return;
    const Rational f(l, g);
    for (auto& x : v)
        if (x != 0)
            x *= f;
}

} // namespace polysparse
