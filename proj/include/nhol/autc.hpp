#pragma once

// Aut^c(pi) = { alpha in GL(V) : pi * hat(alpha) = alpha * pi }.

#include <cstdint>
#include <vector>

#include "nhol/fp.hpp"
#include "nhol/linalg.hpp"
#include "nhol/pigroup.hpp"

namespace nhol {

struct SolverOptions {
  std::uint64_t budget = kDefaultBudget;
  unsigned workers = 1;
  // Search the whole of Aut^c(pi) instead of P in check_no_equivariant_hom.
  bool assumption_full_autc = false;
};

struct AutcElement {
  FpMatrix alpha;
  FpMatrix hat;

  /// Throws Singular if alpha is not invertible, SpecMismatch if it is not in Aut^c(pi).
  static AutcElement make(const PiSpec& spec, FpMatrix alpha);
};

struct GeneratorSet {
  std::vector<AutcElement> p_gens;  // unipotent part P
  std::vector<AutcElement> q_gens;  // complement Q
  // False when p_gens is not known to generate a normal p-subgroup containing
  // every candidate image; the hom search then uses all of Aut^c(pi).
  bool p_is_complete = true;

  std::vector<FpMatrix> matrices() const;  // p_gens then q_gens
};

/// pi * hat(alpha) == alpha * pi. Throws Singular for a non-invertible alpha.
bool is_autc(const PiSpec& spec, const FpMatrix& alpha);

/// Generators read off the catalog shapes (one-parameter unipotents for P,
/// primitive-root diagonals and GL_2 generators for Q). For zero3/zero4 the
/// generators of GL(V) go into q_gens and P is empty.
GeneratorSet generator_catalog(const PiSpec& spec);

/// Generators for any spec: the catalog when labelled, GL(V) for pi = 0,
/// conjugated catalog generators for rank-one pi (n <= 4), otherwise a
/// generating set picked from enumerate_autc.
GeneratorSet autc_generators(const PiSpec& spec, const SolverOptions& opts = {});

/// Standard generators of GL_n(F_p): diag(g,1,..), I + E_12, swap(1,2), n-cycle.
std::vector<FpMatrix> gl_generators(std::size_t n, Prime p);

/// Search shape: when ker(pi) = <e_2..e_n>, the first column vanishes below row 1.
MatrixShape autc_search_shape(const PiSpec& spec);

/// Every element of Aut^c(pi), in lexicographic order. Throws BudgetExceeded.
std::vector<FpMatrix> enumerate_autc(const PiSpec& spec, const SolverOptions& opts = {});

/// All products of the generators (breadth-first, deterministic order).
/// Throws BudgetExceeded if the group grows past `limit` elements.
std::vector<FpMatrix> group_closure(const std::vector<FpMatrix>& gens, std::size_t n, Prime p,
                                    std::uint64_t limit = 2'000'000);

struct HomSearchResult {
  bool only_trivial = true;
  std::uint64_t homs = 0;   // number of equivariant homs found, trivial included
  std::uint64_t nodes = 0;  // search nodes visited
};

/// Counts maps gamma : V -> D (D = closure of P, or all of Aut^c(pi)) with
/// commuting images of order dividing p, equivariant under every generator:
/// gamma(v alpha) = alpha^-1 gamma(v) alpha. Throws BudgetExceeded when the
/// node count passes the budget.
HomSearchResult search_equivariant_homs(const PiSpec& spec, const SolverOptions& opts = {});

bool check_no_equivariant_hom(const PiSpec& spec, const SolverOptions& opts = {});

}  // namespace nhol
