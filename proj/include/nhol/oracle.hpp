#pragma once

// Brute-force ground truth at order p^3: Aut(G), the equivariant
// anti-homomorphisms gamma : G -> Aut(G), and the count of regular subgroups
// N_gamma = { gamma(x) rho(x) } isomorphic to G. Nothing here uses the
// forms/holo pipeline.

#include <cstdint>
#include <vector>

#include "nhol/check.hpp"
#include "nhol/pigroup.hpp"

namespace nhol {

using Perm = std::vector<std::uint32_t>;

struct SmallGroup {
  PiSpec spec;
  std::size_t order = 0;
  std::vector<GElement> elements;   // index = base-p digits of (v, w)
  std::vector<std::uint32_t> mult;  // mult[a * order + b]
  std::vector<std::uint32_t> inv;
  std::uint32_t identity = 0;
  std::vector<std::uint32_t> gens;  // x_1, ..., x_n

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return mult[std::size_t{a} * order + b]; }
  std::uint32_t index_of(const GElement& g) const;
  std::uint32_t pow(std::uint32_t a, std::uint64_t k) const;
};

/// Multiplication table of G_pi for n = 2, p in {3, 5}; group axioms checked.
/// Throws TooLarge otherwise.
SmallGroup build_small_group(const PiSpec& spec);

/// All automorphisms, as permutations of element indices. x_1 -> a, x_2 -> b
/// extends iff b^p = 1, a^p = [a, b] and a, b generate.
std::vector<Perm> enumerate_aut(const SmallGroup& g);

/// gamma as a table of automorphism indices: values[x] = index into auts.
struct GammaMap {
  std::vector<std::uint32_t> values;
};

/// Every gamma with gamma(xy) = gamma(y) gamma(x) (maps act on the right, so
/// gamma(y) is applied first) and gamma(x^beta) = beta^-1 gamma(x) beta for all beta.
std::vector<GammaMap> enumerate_gamma(const SmallGroup& g, const std::vector<Perm>& auts,
                                      std::uint64_t budget = 100'000'000);

struct OracleCount {
  std::size_t regular_normal = 0;  // gammas whose N_gamma passed the regularity/normality checks
  std::size_t isomorphic = 0;      // of those, N_gamma isomorphic to G
  CheckReport checks;
};

/// For each gamma: N_gamma is a regular subgroup of Sym(G) normalized by
/// translations and Aut(G); count those isomorphic to G.
OracleCount count_t(const SmallGroup& g, const std::vector<Perm>& auts, const std::vector<GammaMap>& gammas);

struct OracleResult {
  std::size_t group_order = 0;
  std::size_t aut_order = 0;
  std::size_t gamma_count = 0;
  std::size_t t_order = 0;
  CheckReport checks;
};

/// The whole oracle for the n2 spec at p.
OracleResult run_oracle(Prime p, std::uint64_t budget = 100'000'000);

}  // namespace nhol
