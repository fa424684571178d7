#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace bayesbound {

/// Counter-based random generator. Every output is a pure function of
/// (key, counter), so independent streams can be derived per trial / per
/// sample and evaluated in any order without changing results.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t key) : key_(key) {}

    /// Derives an independent substream for the given index.
    CounterRng fork(std::uint64_t index) const {
        return CounterRng(finalize(finalize(key_ + 0x632be59bd9b4e019ull) ^ finalize(index)));
    }

    std::uint64_t next_u64() {
        counter_ += 0x9e3779b97f4a7c15ull;
        return finalize(key_ ^ counter_);
    }

    /// Uniform in [0, 1).
    double next_unit() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Uniform in (0, 1); safe as a log() argument.
    double next_unit_open() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    /// Standard normal via Box-Muller.
    double next_gaussian() {
        const double u1 = next_unit_open();
        const double u2 = next_unit();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }

    /// Exponential(1) variate.
    double next_exponential() {
        return -std::log(next_unit_open());
    }

private:
    // splitmix64 finalizer
    static constexpr std::uint64_t finalize(std::uint64_t z) {
        z ^= z >> 30;
        z *= 0xbf58476d1ce4e5b9ull;
        z ^= z >> 27;
        z *= 0x94d049bb133111ebull;
        z ^= z >> 31;
        return z;
    }

    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

}  // namespace bayesbound
