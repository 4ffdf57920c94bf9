#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace polysparse {

/// Exact scalar. GMP keeps every value in lowest terms with a positive denominator.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

using QVector = std::vector<Rational>;

/// Dense row-major matrix of rationals; rows()[i] is row i.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols);
    explicit QMatrix(std::vector<QVector> rows);

    static QMatrix identity(std::size_t n);

    std::size_t rows() const { return data_.size(); }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i][j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i][j]; }

    const QVector& row(std::size_t i) const { return data_[i]; }

    QMatrix transpose() const;
    QMatrix operator*(const QMatrix& rhs) const;
    QMatrix operator+(const QMatrix& rhs) const;
    QMatrix operator-(const QMatrix& rhs) const;
    QVector operator*(const QVector& v) const;
    bool operator==(const QMatrix& rhs) const = default;

    /// Gauss-Jordan inverse; throws std::domain_error when singular.
    QMatrix inverse() const;
    Rational determinant() const;

private:
    std::vector<QVector> data_;
    std::size_t cols_ = 0;
};

Rational dot(std::span<const Rational> a, std::span<const Rational> b);
Rational sq_norm(std::span<const Rational> v);
Rational l1_norm(std::span<const Rational> v);
std::size_t sparsity(std::span<const Rational> v);
bool is_zero(std::span<const Rational> v);

QVector operator+(const QVector& a, const QVector& b);
QVector operator-(const QVector& a, const QVector& b);
QVector operator*(const Rational& s, const QVector& v);

/// Parses an integer or `p/q` token. Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view token);
/// Integer or `p/q`, the inverse of parse_rational.
std::string to_string(const Rational& q);
std::string to_string(const QVector& v);
double to_double(const Rational& q);

/// Exact rational equal to the binary double value (every finite double is dyadic).
Rational from_double(double x);

/// Solves M x = rhs for one particular solution (free variables set to zero).
/// Returns false if the system is inconsistent.
bool solve_linear(std::vector<QVector> m, QVector rhs, QVector& x);

/// Rank of a set of row vectors.
std::size_t rank(std::vector<QVector> rows);

/// Basis of {z : row . z = 0 for all rows}, each basis vector scaled to be primitive.
std::vector<QVector> null_space(std::vector<QVector> rows, std::size_t dim);

/// Scales v by a positive factor so its entries are coprime integers.
void make_primitive(QVector& v);

} // namespace polysparse
