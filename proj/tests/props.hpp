#pragma once

// Hand-rolled property generators. Every generator is a pure function of
// (seed, index) so a failure report pins down the exact case.

#include <cstdint>
#include <cstdlib>
#include <random>
#include <string>

#include "doctest.h"
#include "paritycf/input.hpp"

namespace props {

/// PARITY_CF_SEED, or 1.
inline std::uint64_t seed() {
  const char* s = std::getenv("PARITY_CF_SEED");
  return s && *s ? std::strtoull(s, nullptr, 10) : 1;
}

/// Calls f(x) for n pseudo-random quadratic surds (reduced into (0, 1) when
/// unit is set), reporting the case on failure.
template <class F>
void for_surds(std::size_t n, F&& f, bool unit = false) {
  const std::uint64_t s = seed();
  for (std::size_t i = 0; i < n; ++i) {
    const paritycf::QuadraticSurd x = unit ? paritycf::sample_unit_surd(s, i) : paritycf::sample_surd(s, i);
    INFO("seed " << s << ", sample " << i << ", x = " << x.str());
    f(x);
  }
}

/// Deterministic 64-bit stream for ad-hoc generators.
inline std::mt19937_64 rng(std::uint64_t salt) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed()), static_cast<std::uint32_t>(salt)};
  return std::mt19937_64(seq);
}

inline long uniform(std::mt19937_64& g, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(g); }

}  // namespace props
