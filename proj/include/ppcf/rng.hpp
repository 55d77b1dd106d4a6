#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>

namespace ppcf {

/// Philox4x32-10 counter-based generator (Salmon et al., SC'11).
///
/// Each (seed, stream, trial) triple owns an independent stream of 2^32
/// blocks, so Monte-Carlo trials can be evaluated in any order, on any
/// number of threads, and still draw identical randomness.
class Philox {
  public:
    Philox(std::uint64_t seed, std::uint32_t stream, std::uint64_t trial)
        : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
          base_{0, static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32),
                stream} {}

    std::uint32_t next_u32() {
        if (pos_ == 4) refill();
        return out_[pos_++];
    }

    std::uint64_t next_u64() {
        const std::uint64_t hi = next_u32();
        return (hi << 32) | next_u32();
    }

    /// Uniform double in (0, 1].
    double next_unit_open0() {
        return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
    }

    /// Uniform double in [0, 1).
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, n).
    std::uint64_t next_index(std::uint64_t n) { return next_u64() % n; }

    /// Circularly-symmetric complex Gaussian, unit variance
    /// (real and imaginary parts independent N(0, 1/2)).
    std::complex<double> next_cnormal() {
        const double r = std::sqrt(-std::log(next_unit_open0()));
        const double theta = 2.0 * std::numbers::pi * next_unit();
        return {r * std::cos(theta), r * std::sin(theta)};
    }

    /// Raw single block, for known-answer tests.
    static std::array<std::uint32_t, 4> block(std::array<std::uint32_t, 4> ctr,
                                              std::array<std::uint32_t, 2> key) {
        for (int round = 0; round < 10; ++round) {
            const std::uint64_t p0 = 0xD2511F53ULL * ctr[0];
            const std::uint64_t p1 = 0xCD9E8D57ULL * ctr[2];
            ctr = {static_cast<std::uint32_t>(p1 >> 32) ^ ctr[1] ^ key[0],
                   static_cast<std::uint32_t>(p1),
                   static_cast<std::uint32_t>(p0 >> 32) ^ ctr[3] ^ key[1],
                   static_cast<std::uint32_t>(p0)};
            key[0] += 0x9E3779B9U;
            key[1] += 0xBB67AE85U;
        }
        return ctr;
    }

  private:
    void refill() {
        auto ctr = base_;
        ctr[0] = block_;
        ++block_;
        out_ = block(ctr, key_);
        pos_ = 0;
    }

    std::array<std::uint32_t, 2> key_;
    std::array<std::uint32_t, 4> base_;
    std::uint32_t block_ = 0;
    std::array<std::uint32_t, 4> out_{};
    int pos_ = 4;
};

}  // namespace ppcf
