#pragma once

#include "polysparse/experiments.hpp"
#include "polysparse/rational.hpp"

#include <chrono>

namespace polysparse::experiments::detail {

// Substream families, one per kind of random object.
inline constexpr std::uint64_t cut_stream = 0x6375747300000001ULL;
inline constexpr std::uint64_t sign_stream = 0x7369676e00000002ULL;
inline constexpr std::uint64_t rotation_stream = 0x726f746100000003ULL;
inline constexpr std::uint64_t permutation_stream = 0x7065726d00000004ULL;
inline constexpr std::uint64_t gaussian_stream = 0x6761757300000005ULL;
inline constexpr std::uint64_t verify_stream = 0x7665726900000006ULL;

inline Json rational_json(const Rational& r)
{
    return to_string(r);
}

inline Json vector_json(const QVector& v)
{
    Json a = Json::array();
    for (const auto& x : v)
        a.push_back(to_string(x));
    return a;
}

inline Json matrix_json(const QMatrix& m)
{
    Json a = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i)
        a.push_back(vector_json(m.row(i)));
    return a;
}

class Stopwatch {
public:
    double seconds() const
    {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

} // namespace polysparse::experiments::detail
