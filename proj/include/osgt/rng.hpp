#pragma once

#include <array>
#include <cstdint>

#include "osgt/special.hpp"

namespace osgt::rng {

/// Philox4x32-10 block function (Salmon, Moraes, Dror, Shaw; SC'11).
/// Counter-based: the output is a pure function of (key, counter), so any
/// counter can be evaluated in any order on any thread.
inline std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> ctr,
                                               std::array<std::uint32_t, 2> key) noexcept {
    constexpr std::uint32_t m0 = 0xD2511F53u;
    constexpr std::uint32_t m1 = 0xCD9E8D57u;
    constexpr std::uint32_t w0 = 0x9E3779B9u;
    constexpr std::uint32_t w1 = 0xBB67AE85u;
    for (int round = 0; round < 10; ++round) {
        if (round > 0) {
            key[0] += w0;
            key[1] += w1;
        }
        const std::uint64_t p0 = static_cast<std::uint64_t>(m0) * ctr[0];
        const std::uint64_t p1 = static_cast<std::uint64_t>(m1) * ctr[2];
        ctr = {static_cast<std::uint32_t>(p1 >> 32) ^ ctr[1] ^ key[0],
               static_cast<std::uint32_t>(p1),
               static_cast<std::uint32_t>(p0 >> 32) ^ ctr[3] ^ key[1],
               static_cast<std::uint32_t>(p0)};
    }
    return ctr;
}

/// One independent stream of variates, addressed by (seed, stream index).
/// Streams with distinct indices are statistically independent and their
/// outputs do not depend on evaluation order, which makes batch sampling
/// deterministic under any parallel schedule.
class Stream {
public:
    explicit Stream(std::uint64_t seed, std::uint64_t index = 0) noexcept
        : key_{static_cast<std::uint32_t>(seed),
               static_cast<std::uint32_t>(seed >> 32)},
          index_(index) {}

    /// Uniform double in the open interval (0, 1); 53 mantissa bits.
    double next_uniform() noexcept {
        if (have_ == 0) refill();
        const std::uint64_t bits = buffer_[--have_];
        return (static_cast<double>(bits >> 11) + 0.5) * 0x1.0p-53;
    }

    /// Standard normal via the inverse upper-tail quantile.
    double next_standard_normal() { return special::inverse_q(next_uniform()); }

    std::uint64_t index() const noexcept { return index_; }

private:
    void refill() noexcept {
        const auto words = philox4x32(
            {static_cast<std::uint32_t>(index_),
             static_cast<std::uint32_t>(index_ >> 32),
             static_cast<std::uint32_t>(block_),
             static_cast<std::uint32_t>(block_ >> 32)},
            key_);
        ++block_;
        buffer_[0] = (static_cast<std::uint64_t>(words[0]) << 32) | words[1];
        buffer_[1] = (static_cast<std::uint64_t>(words[2]) << 32) | words[3];
        have_ = 2;
    }

    std::array<std::uint32_t, 2> key_;
    std::uint64_t index_ = 0;
    std::uint64_t block_ = 0;
    std::array<std::uint64_t, 2> buffer_{};
    int have_ = 0;
};

}  // namespace osgt::rng
