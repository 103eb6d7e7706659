#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace relacheck::rng {

// Seeded generator whose output depends only on the mt19937_64 stream,
// never on the standard library's distribution implementations.
class Engine {
 public:
  explicit Engine(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }

  // Uniform draw from [0, n) by rejection sampling; n = 0 yields 0.
  std::uint64_t below(std::uint64_t n) {
    if (n <= 1) return 0;
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return x % n;
  }

  bool bernoulli(double p) {
    if (p <= 0.0) return false;
    if (p >= 1.0) return true;
    return static_cast<double>(next()) < p * 18446744073709551616.0;  // 2^64
  }

  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::swap(items[i - 1], items[below(i)]);
    }
  }

 private:
  std::mt19937_64 gen_;
};

// Mixes a base seed with stream indices so per-trial generators are
// independent but reproducible.
inline std::uint64_t mix(std::uint64_t seed, std::uint64_t a,
                         std::uint64_t b = 0) {
  auto split = [](std::uint64_t& s) {
    s += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  std::uint64_t state = seed;
  std::uint64_t out = split(state);
  state ^= (a + 1) * 0xff51afd7ed558ccdULL;
  out ^= split(state);
  state ^= (b + 1) * 0xc4ceb9fe1a85ec53ULL;
  out ^= split(state);
  return out;
}

}  // namespace relacheck::rng
