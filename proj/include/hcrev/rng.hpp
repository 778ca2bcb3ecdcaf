#ifndef HCREV_RNG_HPP
#define HCREV_RNG_HPP

#include <cstdint>
#include <random>
#include <vector>

namespace hcrev {

/// splitmix64 mix step; used to derive independent stream seeds from a
/// master seed so that per-trial results do not depend on trial order.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
    return splitmix64(master ^ splitmix64(stream));
}

/// Seeded generator with platform-stable output. mt19937_64 is fully
/// specified by the standard; the bounded draw and shuffle below avoid
/// std::uniform_int_distribution and std::shuffle, whose streams are
/// implementation-defined.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next() { return gen_(); }

    bool coin() { return (next() & 1) != 0; }

    /// Uniform draw from {0, ..., bound-1} by rejection.
    std::uint64_t below(std::uint64_t bound) {
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return v % bound;
    }

    /// Fisher-Yates shuffle.
    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

  private:
    std::mt19937_64 gen_;
};

}  // namespace hcrev

#endif
