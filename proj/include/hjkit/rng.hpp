#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace hjkit {

// Deterministic splittable randomness. Every consumer derives its generator
// from (master seed, stream label), so independent modules never share state
// and a run is reproducible from the master seed alone. mt19937_64 output is
// fixed by the standard, and bounded draws below use rejection sampling
// rather than std::uniform_int_distribution, whose mapping is
// implementation-defined.
class Rng {
 public:
  explicit Rng(uint64_t seed);

  static Rng stream(uint64_t master_seed, const std::string& label);
  Rng split(const std::string& label) const;
  Rng split(uint64_t index) const;

  uint64_t next_u64();

  // Uniform on [0, n); n > 0.
  uint64_t below(uint64_t n);

  // Fisher-Yates; uniform over permutations.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) {
      const size_t j = static_cast<size_t>(below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

  // Random permutation of 1..n (1-based values).
  std::vector<int> permutation(int n);

 private:
  uint64_t origin_;
  std::mt19937_64 gen_;
};

uint64_t hash_label(const std::string& label);
uint64_t mix_u64(uint64_t x);

}  // namespace hjkit
