#pragma once

#include <cstdint>
#include <random>

namespace tri {

// Deterministic RNG with rejection-free bias removal. All randomized pieces
// of the project draw through this wrapper so outputs are reproducible for a
// given seed.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    // Uniform in [0, n), n > 0.
    std::uint64_t below(std::uint64_t n) {
        std::uint64_t threshold = (-n) % n;  // 2^64 mod n
        for (;;) {
            std::uint64_t r = eng_();
            if (r >= threshold) return r % n;
        }
    }

    // Uniform in [lo, hi], inclusive.
    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(
                        below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

  private:
    std::mt19937_64 eng_;
};

}  // namespace tri
