#pragma once

#include <cstdint>
#include <vector>

namespace lexiplan {

// SplitMix64 (Steele, Lea, Flood 2014). Chosen over std::mt19937 because the
// output sequence for a given seed is pinned by the algorithm, not by the
// standard library implementation, so seeds recorded in bundle paths mean the
// same instance everywhere. split() derives an independent stream by hashing
// the parent state with a stream tag, which keeps per-seed generation order
// independent of how many values earlier seeds consumed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n) without modulo bias (rejection from the top).
  std::uint64_t below(std::uint64_t n) {
    std::uint64_t threshold = (0 - n) % n;
    for (;;) {
      std::uint64_t r = next();
      if (r >= threshold) return r % n;
    }
  }

  int range(int lo, int hi) {  // inclusive bounds
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  bool coin() { return (next() & 1) != 0; }

  // Weighted index draw; weights must contain at least one positive entry.
  std::size_t weighted(const std::vector<double>& weights);

  Rng split(std::uint64_t tag) {
    std::uint64_t z = (state_ ^ (tag * 0xd1342543de82ef95ULL)) +
                      0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return Rng(z ^ (z >> 31));
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = below(i);
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::uint64_t state_;
};

inline std::size_t Rng::weighted(const std::vector<double>& weights) {
  double total = 0;
  for (double w : weights) total += w > 0 ? w : 0;
  double x = (next() >> 11) * (1.0 / 9007199254740992.0) * total;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    double w = weights[i] > 0 ? weights[i] : 0;
    if (x < w) return i;
    x -= w;
  }
  return weights.size() - 1;
}

}  // namespace lexiplan
