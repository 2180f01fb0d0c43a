#pragma once

#include <cmath>
#include <cstdint>
#include <utility>
#include <vector>

namespace ngcl {

/// SplitMix64 (Steele, Lea & Flood; the java.util.SplitMix64 finalizer).
///
/// Every seeded draw in this project flows through this generator so that a
/// seed pins results across platforms and implementations.  The full
/// recurrence, bit for bit:
///
///   state    <- state + 0x9E3779B97F4A7C15
///   z        <- state
///   z        <- (z xor (z >> 30)) * 0xBF58476D1CE4E5B9
///   z        <- (z xor (z >> 27)) * 0x94D049BB133111EB
///   output   <- z xor (z >> 31)
///
/// Derived draws:
///   next_double  = (output >> 11) * 2^-53                  in [0, 1)
///   uniform(a,b) = a + (b - a) * next_double
///   next_below(n)= output mod n
///   next_normal  = Box-Muller over two next_double draws;
///                  r = sqrt(-2 ln u1), returns r cos(2 pi u2),
///                  caching r sin(2 pi u2) for the next call
///   shuffle      = Fisher-Yates, swapping index i-1 with next_below(i)
///                  for i = n .. 2
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) {
        return lo + (hi - lo) * next_double();
    }

    /// Integer in [0, n).  The modulo bias of at most n / 2^64 is irrelevant
    /// at the class counts this project shuffles.
    std::uint64_t next_below(std::uint64_t n) {
        return next_u64() % n;
    }

    double next_normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u1 = next_double();
        while (u1 == 0.0) u1 = next_double();
        const double u2 = next_double();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double t = 2.0 * 3.14159265358979323846 * u2;
        spare_ = r * std::sin(t);
        has_spare_ = true;
        return r * std::cos(t);
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::swap(v[i - 1], v[static_cast<std::size_t>(next_below(i))]);
        }
    }

private:
    std::uint64_t state_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace ngcl
