#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace cliquelist {

/// Portable seeded generator.
///
/// The raw stream is std::mt19937_64, whose output sequence is fixed by the
/// C++ standard. The mapping to bounded integers and doubles is done here
/// rather than with std::*_distribution (whose algorithms are
/// implementation-defined), so a seed yields the same graphs on every
/// platform and standard library:
///   below(b): rejection sampling, reject r < (2^64 - b) mod b, return r mod b
///   unit():   (r >> 11) * 2^-53
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t r = engine_();
      if (r >= threshold) return r % bound;
    }
  }

  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return unit() < p; }

  // Fisher-Yates from the back.
  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::swap(items[i - 1], items[below(i)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace cliquelist
