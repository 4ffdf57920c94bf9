#pragma once

#include <array>
#include <cstdint>
#include <optional>

namespace polysparse {

/// Philox4x64-10 counter-based block function (Salmon et al., SC'11).
std::array<std::uint64_t, 4> philox4x64(std::array<std::uint64_t, 4> counter, std::array<std::uint64_t, 2> key);

/**
 * Sequential generator over one Philox substream: key = (seed, stream),
 * counter = (substream, block, 0, 0). Normal deviates use Marsaglia's polar
 * method on uniforms in [-1, 1) built from the top 53 bits of each word.
 */
class PhiloxStream {
public:
    PhiloxStream(std::uint64_t seed, std::uint64_t stream, std::uint64_t substream);

    std::uint64_t next_u64();
    /// Uniform on [0, 1).
    double uniform01();
    /// Uniform on [-1, 1).
    double uniform_pm1();
    /// Uniform integer in [0, bound); bound > 0. Rejection sampling, no modulo bias.
    std::uint64_t below(std::uint64_t bound);
    /// +1 or -1 with probability 1/2 each.
    int sign();
    double gaussian();
    /// Exponential with rate 1 by inversion.
    double exponential();

private:
    std::array<std::uint64_t, 2> key_;
    std::array<std::uint64_t, 4> ctr_;
    std::array<std::uint64_t, 4> buf_{};
    unsigned pos_ = 4;
    std::optional<double> spare_;
};

/// Master seed plus stream index; every sample index gets its own substream, so
/// results do not depend on the order in which samples are drawn.
struct RandomSource {
    std::uint64_t seed = 0;
    std::uint64_t stream = 0;

    PhiloxStream substream(std::uint64_t index) const { return PhiloxStream(seed, stream, index); }
};

} // namespace polysparse
