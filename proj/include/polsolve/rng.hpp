// Deterministic random streams. All randomized operations take an explicit
// Rng so that results are reproducible bit-for-bit from the seed alone;
// derived streams (per system, per trial) come from splitmix64 mixing so
// parallel workers never share state.
#pragma once

#include <cstdint>
#include <vector>

#include "polsolve/field.hpp"

namespace polsolve {

inline uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline uint64_t derive_seed(uint64_t master, uint64_t a, uint64_t b = 0) {
  return splitmix64(splitmix64(master ^ splitmix64(a)) ^ splitmix64(b + 0x517cc1b727220a95ULL));
}

// xoshiro-style generator seeded via splitmix64. Self-contained so output is
// identical across standard library implementations.
class Rng {
 public:
  explicit Rng(uint64_t seed) {
    uint64_t s = seed;
    for (auto& w : state_) w = s = splitmix64(s);
  }

  uint64_t next() {
    const uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  // Uniform in [0, bound) by masked rejection (no modulo bias).
  uint64_t below(uint64_t bound) {
    if (bound == 0) throw FieldError("rng bound must be positive");
    if (bound == 1) return 0;
    uint64_t mask = ~uint64_t(0) >> __builtin_clzll(bound - 1);
    uint64_t v;
    do {
      v = next() & mask;
    } while (v >= bound);
    return v;
  }

  FieldElement uniform(const Field& f) { return FieldElement::raw(f, below(f.q())); }

  FieldElement uniform_nonzero(const Field& f) {
    return FieldElement::raw(f, 1 + below(f.q() - 1));
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

  // Random e-subset of {1..L}, ascending.
  std::vector<size_t> subset(size_t universe, size_t count) {
    std::vector<size_t> all(universe);
    for (size_t i = 0; i < universe; ++i) all[i] = i + 1;
    shuffle(all);
    all.resize(count);
    std::sort(all.begin(), all.end());
    return all;
  }

 private:
  static uint64_t rotl(uint64_t x, int s) { return (x << s) | (x >> (64 - s)); }
  uint64_t state_[4];
};

}  // namespace polsolve
