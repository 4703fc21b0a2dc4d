#pragma once

// Cross-checks between the independent routes and the structural identities
// they must satisfy. Each check returns a named pass/fail line; nothing
// throws on a failed comparison.

#include <cstdint>
#include <vector>

#include "paritycf/oracle.hpp"

namespace paritycf {

/// Continued-fraction route, Delta-word route and brute-force scan agree on every
/// set up to q_max (one line per set).
std::vector<CheckLine> check_routes(const RealInput& x, std::int64_t q_max);
/// Quadratic definitional scan agrees with the fast scan on every set.
CheckLine check_definitional(const RealInput& x, std::int64_t q_max);
/// Partition and intersection identities among the eleven sets, and the
/// explicit intermediate-convergent rules.
CheckLine check_set_identities(const RealInput& x, const BigInt& q_max);

/// Cutting-sequence bookkeeping for m <= m_max: the matrix identity
/// M_1...M_m = H_{a_1}...H_{a_m} S_1...S_m, a_m = S_1...S_{m-1} . eta_m,
/// adjacent symbols distinct, the delta complement, the images of a_{m+1}
/// and delta_{m+1} as convergents, and the delta_m = delta_{m+1} criterion.
CheckLine check_delta_bookkeeping(const QuadraticSurd& x, std::size_t m_max);
/// Cutting-sequence and geometric expansions agree on `terms` symbols.
CheckLine check_delta_routes(const QuadraticSurd& x, std::size_t terms);
/// x lies in every cylinder, cylinders nest, endpoints carry their labels.
CheckLine check_cylinders(const QuadraticSurd& x, std::size_t m_max);

/// Numeric and symbolic steps agree for all six maps (x in (0, 1)).
CheckLine check_map_steps(const QuadraticSurd& x, std::size_t steps, std::size_t compare = 10);
CheckLine check_gauss_farey(const QuadraticSurd& x, std::size_t n_checks);
/// Inverse orbits of the even and odd-odd maps reproduce B^(0,inf) and B^(1).
CheckLine check_inverse_orbits(const QuadraticSurd& x, std::size_t i_max);

CheckLine check_parallelogram_lemma(const RealInput& x, std::size_t samples, std::uint64_t seed);

struct VerifyOptions {
  std::int64_t q_max = 200;
  std::int64_t definitional_q = 40;
  std::int64_t geometric_q = 200;
  std::size_t delta_terms = 200;
  std::size_t map_steps = 50;
  std::size_t orbit_length = 13;
  std::size_t lemma_samples = 100;
  std::uint64_t seed = 1;
};

/// Everything applicable to x: surd-only checks are skipped for decimal
/// inputs, map checks run on x - floor(x).
std::vector<CheckLine> verify_input(const RealInput& x, const VerifyOptions& opt);

}  // namespace paritycf
