#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace africa3 {

// splitmix64 finalizer, used to derive independent sub-stream seeds from
// one master seed plus a few tags. Stable across platforms.
constexpr std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t tag) {
    return mix64(seed ^ mix64(tag));
}

constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
    return derive_seed(derive_seed(seed, a), b);
}

inline std::uint64_t tag_of(std::string_view name) {
    // FNV-1a; good enough to separate the handful of named stages.
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : name) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    return h;
}

// Seeded generator with portable helpers. mt19937_64 output is fixed by the
// standard, and uniform() avoids std::uniform_real_distribution (whose exact
// sequence is implementation-defined).
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    double uniform() {  // [0, 1)
        return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
    }

    // integer in [0, n)
    std::size_t below(std::size_t n) {
        return static_cast<std::size_t>(uniform() * static_cast<double>(n)) % n;
    }

    std::uint64_t next() { return eng_(); }

  private:
    std::mt19937_64 eng_;
};

}  // namespace africa3
