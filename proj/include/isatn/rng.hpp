#pragma once

#include <cmath>
#include <cstdint>
#include <string_view>

namespace isatn {

// Counter-based deterministic random streams. Every draw is a pure hash of
// (seed, stream tag, counter), so independent epochs/entities can be sampled
// in any order and still reproduce bit-identically across runs and platforms.

namespace detail {

constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

constexpr std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace detail

/// A named deterministic stream: successive draws advance an internal counter.
/// Copy a stream to fork its position; construction from (seed, tag, salts)
/// is the only source of entropy.
class RngStream {
  public:
    RngStream(std::uint64_t seed, std::string_view tag, std::uint64_t salt0 = 0,
              std::uint64_t salt1 = 0)
        : state_(mix(seed, tag, salt0, salt1)), counter_(0) {}

    std::uint64_t next_u64() {
        return detail::splitmix64(state_ ^ detail::splitmix64(counter_++));
    }

    /// Uniform double in [0, 1).
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Uniform double in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

    /// Uniform integer in [0, n).
    std::uint64_t next_below(std::uint64_t n) { return n ? next_u64() % n : 0; }

    /// Poisson via Knuth's product method; fine for the small means used here.
    int poisson(double mean) {
        const double limit = std::exp(-mean);
        double p = 1.0;
        int k = 0;
        do {
            ++k;
            p *= next_double();
        } while (p > limit);
        return k - 1;
    }

    std::uint64_t counter() const { return counter_; }

  private:
    static constexpr std::uint64_t mix(std::uint64_t seed, std::string_view tag,
                                       std::uint64_t s0, std::uint64_t s1) {
        std::uint64_t h = detail::splitmix64(seed ^ detail::fnv1a(tag));
        h = detail::splitmix64(h ^ s0);
        h = detail::splitmix64(h ^ (s1 * 0x9e3779b97f4a7c15ULL));
        return h;
    }

    std::uint64_t state_;
    std::uint64_t counter_;
};

/// One-shot draws keyed entirely by the salts; used by generators that must
/// be evaluable for any (epoch, entity) without sequencing.
inline double hash_unit(std::uint64_t seed, std::string_view tag, std::uint64_t a,
                        std::uint64_t b = 0, std::uint64_t c = 0) {
    std::uint64_t h = detail::splitmix64(seed ^ detail::fnv1a(tag));
    h = detail::splitmix64(h ^ a);
    h = detail::splitmix64(h ^ (b * 0x9e3779b97f4a7c15ULL));
    h = detail::splitmix64(h ^ (c * 0xd1342543de82ef95ULL));
    return static_cast<double>(h >> 11) * 0x1.0p-53;
}

}  // namespace isatn
