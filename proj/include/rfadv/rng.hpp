#ifndef RFADV_RNG_HPP
#define RFADV_RNG_HPP

#include <cstdint>
#include <initializer_list>
#include <random>
#include <utility>
#include <vector>

namespace rfadv {

// Deterministic random source. The gaussian variates are produced by an
// explicit Box-Muller transform on mt19937_64 output so that identical seeds
// give identical streams independent of the standard library's
// normal_distribution implementation.
class Rng {
 public:
  explicit Rng(uint64_t seed) : gen_(seed) {}

  uint64_t next_u64() { return gen_(); }

  // Uniform in [0, 1).
  double uniform() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform integer in [lo, hi] inclusive.
  int64_t uniform_int(int64_t lo, int64_t hi) {
    return lo + static_cast<int64_t>(gen_() % static_cast<uint64_t>(hi - lo + 1));
  }

  // Standard normal.
  double gaussian();

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) {
      size_t j = static_cast<size_t>(uniform_int(0, static_cast<int64_t>(i) - 1));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::mt19937_64 gen_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

// Splitmix64-style hash chain used to derive independent per-task seeds from
// one master seed, e.g. derive_seed(master, {command_tag, axis_index, frame}).
uint64_t derive_seed(uint64_t master, std::initializer_list<uint64_t> path);

}  // namespace rfadv

#endif
