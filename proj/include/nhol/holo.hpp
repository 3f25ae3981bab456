#pragma once

// T(G) = S x| res(S') assembled from commutant elements tau = 1 + 2 sigma.
//
// An anti-symmetric Delta_[sigma] gives a regular subgroup isomorphic to G
// exactly when pi hat(eta) tau = eta pi has a solution eta in GL(V); the
// element of res(S') is then the coset (eta, hat(eta) tau) Gamma(G), where
// Gamma(G) = { (alpha, hat(alpha)) : alpha in Aut^c(pi) }.

#include <optional>
#include <string>
#include <vector>

#include "nhol/autc.hpp"
#include "nhol/check.hpp"
#include "nhol/forms.hpp"

namespace nhol {

struct ResPair {
  FpMatrix eta;   // on V
  FpMatrix zeta;  // on Lambda^2 V
};

/// Basis of { sigma : sigma hat(g) = hat(g) sigma for every generator g }.
std::vector<FpMatrix> commutant(const PiSpec& spec, const SolverOptions& opts = {});
bool in_commutant(const FpMatrix& tau, const std::vector<FpMatrix>& gens);

/// pi * hat(eta) * tau == eta * pi.
bool satisfies_criterion(const PiSpec& spec, const FpMatrix& eta, const FpMatrix& tau);

enum class CriterionStatus { found, none, unknown };

struct CriterionResult {
  CriterionStatus status = CriterionStatus::unknown;
  std::optional<ResPair> pair;
  std::string strategy;  // "scalar", "diagonal", "exhaustive", or empty
};

/// Tries eta = cI, then every invertible diagonal eta, then (within budget)
/// every eta preserving ker(pi). `none` is returned only after the exhaustive
/// pass; `unknown` when it was skipped. Throws NotInCommutant, NotInvertible.
CriterionResult criterion_solve(const PiSpec& spec, const FpMatrix& tau, const SolverOptions& opts = {});

bool coset_equal(const PiSpec& spec, const ResPair& a, const ResPair& b);

FpMatrix sigma_from_tau(const FpMatrix& tau);  // (tau - 1)/2
FpMatrix tau_from_sigma(const FpMatrix& sigma);  // 1 + 2 sigma

/// Delta = Delta_[sigma1]^{(r2.eta, r2.zeta)} + Delta_[sigma2], read back as
/// Delta_[sigma], paired with (r1.eta r2.eta, r1.zeta r2.zeta).
std::pair<FpMatrix, ResPair> sprime_compose(const PiSpec& spec, const FpMatrix& sigma1, const ResPair& r1,
                                            const FpMatrix& sigma2, const ResPair& r2);

struct AdmissibleTau {
  std::vector<std::uint32_t> params;  // coordinates on the commutant basis
  FpMatrix tau;
  ResPair pair;
  std::string strategy;
};

struct AdmissibleSet {
  std::vector<FpMatrix> basis;  // commutant basis
  std::vector<AdmissibleTau> taus;
  std::size_t singular = 0;      // commutant elements with det 0
  std::size_t inadmissible = 0;  // invertible, but the criterion has no solution
};

/// Every invertible commutant element whose criterion is solvable, in
/// lexicographic parameter order. Throws UnknownAdmissibility if any
/// criterion_solve came back unknown.
AdmissibleSet admissible_taus(const PiSpec& spec, const SolverOptions& opts = {});

/// Invariant factors d_1 | d_2 | ... of a finite abelian group given by a
/// multiplication table.
std::vector<std::uint64_t> abelian_invariants(const std::vector<std::size_t>& table, std::size_t order,
                                              std::size_t identity);
/// "C4", "C2 x C6", "1" for the trivial group.
std::string structure_name(const std::vector<std::uint64_t>& invariants);

struct ResGroup {
  std::vector<AdmissibleTau> elements;
  std::vector<std::size_t> table;  // table[i * order + j] = index of i * j
  std::size_t identity = 0;
  bool abelian = false;
  std::vector<std::uint64_t> invariants;
  std::string structure;
  CheckReport checks;

  std::size_t order() const noexcept { return elements.size(); }
};

/// res(S') with the group law from sprime_compose, checked against the group axioms.
ResGroup res_sprime_group(const PiSpec& spec, const SolverOptions& opts = {});

/// For each lambda != -1/2 and kappa = (1 + 2 lambda)^-1: the power map
/// x -> x^kappa is a bijection and conjugates right translation by y into the
/// element x -> x^{gamma(y^kappa)} y^kappa of the regular subgroup of Delta_[lambda].
CheckReport power_map_check(const PiSpec& spec, std::size_t samples = 48);

struct Expectation {
  std::uint64_t t_order;
  std::string t_structure;
  std::size_t dim_sprime;
};

/// The T(G) table for cases a-e; empty for other labels.
std::optional<Expectation> catalog_expectation(Label label, Prime p);

/// True for a-e at primes where the catalog result is asserted.
bool within_hypotheses(Label label, Prime p);

struct TGReport {
  Label label = Label::custom;
  std::uint32_t p = 0;
  std::size_t n = 0;
  std::size_t group_log_order = 0;
  std::size_t dim_s = 0;
  std::size_t dim_sprime = 0;
  std::string sprime_basis;
  std::size_t admissible = 0;
  std::size_t res_order = 0;
  std::string res_structure;
  std::uint64_t t_order = 0;
  std::string t_structure;
  bool assumption_ok = false;
  bool within_hypotheses = false;
  CheckReport checks;
};

/// Runs the whole pipeline. A failed Assumption check does not abort: the
/// report is still produced, with the "assumption" check failing.
TGReport t_g_report(const PiSpec& spec, const SolverOptions& opts = {});

}  // namespace nhol
