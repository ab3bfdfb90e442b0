#include "hjkit/rng.hpp"

#include <bit>
#include <numeric>
#include <stdexcept>

namespace hjkit {

uint64_t hash_label(const std::string& label) {
  // FNV-1a, 64-bit.
  uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : label) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

uint64_t mix_u64(uint64_t x) {
  // splitmix64 finalizer.
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

Rng::Rng(uint64_t seed) : origin_(seed), gen_(seed) {}

Rng Rng::stream(uint64_t master_seed, const std::string& label) {
  return Rng(mix_u64(master_seed ^ hash_label(label)));
}

Rng Rng::split(const std::string& label) const {
  return Rng(mix_u64(origin_ ^ hash_label(label)));
}

Rng Rng::split(uint64_t index) const {
  return Rng(mix_u64(origin_ ^ mix_u64(index + 0x51ed2701ull)));
}

uint64_t Rng::next_u64() { return gen_(); }

uint64_t Rng::below(uint64_t n) {
  if (n == 0) throw std::invalid_argument("Rng::below requires n > 0");
  if (n == 1) return 0;
  const int width = std::bit_width(n - 1);
  const uint64_t mask = (width >= 64) ? ~0ull : ((1ull << width) - 1);
  for (;;) {
    const uint64_t r = next_u64() & mask;
    if (r < n) return r;
  }
}

std::vector<int> Rng::permutation(int n) {
  std::vector<int> p(static_cast<size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  shuffle(p);
  return p;
}

}  // namespace hjkit
