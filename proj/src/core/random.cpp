#include "polysparse/random.hpp"

#include <cmath>

namespace polysparse {

namespace {

constexpr std::uint64_t kMul0 = 0xD2E7470EE14C6C93ULL;
constexpr std::uint64_t kMul1 = 0xCA5A826395121157ULL;
constexpr std::uint64_t kWeyl0 = 0x9E3779B97F4A7C15ULL;
constexpr std::uint64_t kWeyl1 = 0xBB67AE8584CAA73BULL;

inline std::uint64_t mulhilo(std::uint64_t a, std::uint64_t b, std::uint64_t& hi)
{
    const unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
    hi = static_cast<std::uint64_t>(p >> 64);
    return static_cast<std::uint64_t>(p);
}

} // namespace

std::array<std::uint64_t, 4> philox4x64(std::array<std::uint64_t, 4> ctr, std::array<std::uint64_t, 2> key)
{
    for (int round = 0; round < 10; ++round) {
        if (round > 0) {
            key[0] += kWeyl0;
            key[1] += kWeyl1;
        }
        std::uint64_t hi0, hi1;
        const std::uint64_t lo0 = mulhilo(kMul0, ctr[0], hi0);
        const std::uint64_t lo1 = mulhilo(kMul1, ctr[2], hi1);
        ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
    }
    return ctr;
}

PhiloxStream::PhiloxStream(std::uint64_t seed, std::uint64_t stream, std::uint64_t substream)
    : key_{seed, stream}, ctr_{substream, 0, 0, 0}
{
}

std::uint64_t PhiloxStream::next_u64()
{
    if (pos_ == 4) {
        buf_ = philox4x64(ctr_, key_);
        ++ctr_[1];
        pos_ = 0;
    }
    return buf_[pos_++];
}

double PhiloxStream::uniform01()
{
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double PhiloxStream::uniform_pm1()
{
    return 2.0 * uniform01() - 1.0;
}

std::uint64_t PhiloxStream::below(std::uint64_t bound)
{
    const std::uint64_t limit = bound * (UINT64_MAX / bound);
    for (;;) {
        const std::uint64_t x = next_u64();
        if (x < limit)
            return x % bound;
    }
}

int PhiloxStream::sign()
{
    return (next_u64() >> 63) ? 1 : -1;
}

double PhiloxStream::gaussian()
{
    if (spare_) {
        const double g = *spare_;
        spare_.reset();
        return g;
    }
    for (;;) {
        const double u = uniform_pm1();
        const double v = uniform_pm1();
        const double s = u * u + v * v;
        if (s >= 1.0 || s == 0.0)
            continue;
        const double f = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * f;
        return u * f;
    }
}

double PhiloxStream::exponential()
{
    // 1 - U lies in (0, 1].
    return -std::log(1.0 - uniform01());
}

} // namespace polysparse
