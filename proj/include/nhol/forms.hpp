#pragma once

// Bilinear maps Delta : V x V -> Lambda^2 V and the equivariant spaces
//   B  = { Delta : Delta(u alpha, v alpha) = Delta(u, v) hat(alpha) for alpha in Aut^c(pi) },
//   S  = symmetric part of B,   S' = anti-symmetric part of B.
// Values in Lambda^2 V are written additively.

#include <utility>
#include <vector>

#include "nhol/autc.hpp"
#include "nhol/pigroup.hpp"

namespace nhol {

enum class Symmetry { none, symmetric, antisymmetric };

std::string_view symmetry_name(Symmetry s);

class BilinearForm {
 public:
  BilinearForm(std::size_t n, Prime p, Symmetry symmetry = Symmetry::none);

  std::size_t n() const noexcept { return n_; }
  std::size_t wedge_dim() const noexcept { return c_; }
  Prime modulus() const noexcept { return p_; }
  Symmetry symmetry() const noexcept { return sym_; }

  /// Delta(v_i, v_j) as a vector of wedge-basis coefficients.
  FpVector value(std::size_t i, std::size_t j) const;
  std::uint32_t coeff(std::size_t i, std::size_t j, std::size_t m) const { return t_[(i * n_ + j) * c_ + m]; }
  /// Sets Delta(v_i, v_j); the mirrored entry follows the declared symmetry.
  void set_value(std::size_t i, std::size_t j, const FpVector& w);

  /// Delta(u, v) for arbitrary vectors.
  FpVector operator()(const FpVector& u, const FpVector& v) const;

  /// Checks the declared symmetry entrywise.
  bool symmetry_holds() const;
  bool is_zero() const noexcept;

  /// All n*n*C(n,2) coefficients, index (i, j, m) row-major.
  std::span<const std::uint32_t> raw() const noexcept { return t_; }
  FpVector as_vector() const;

  BilinearForm operator+(const BilinearForm& o) const;
  BilinearForm operator-(const BilinearForm& o) const;
  BilinearForm scaled(std::uint32_t c) const;

  /// Same coefficients, different declared symmetry (checked).
  BilinearForm with_symmetry(Symmetry s) const;

  /// Coefficients equal; the symmetry tag is ignored.
  friend bool operator==(const BilinearForm& a, const BilinearForm& b) {
    return a.n_ == b.n_ && a.p_ == b.p_ && a.t_ == b.t_;
  }

 private:
  std::size_t n_, c_;
  Prime p_;
  Symmetry sym_;
  std::vector<std::uint32_t> t_;
};

struct FormSpace {
  std::vector<BilinearForm> basis;
  Symmetry symmetry = Symmetry::none;
  std::size_t dim() const noexcept { return basis.size(); }
};

/// Index pairs carrying free unknowns: i <= j (symmetric), i < j (anti), all (none).
std::vector<std::pair<std::size_t, std::size_t>> free_pairs(std::size_t n, Symmetry s);
std::size_t unknown_count(std::size_t n, Symmetry s);

/// Linear system whose nullspace is the equivariant forms of the given
/// symmetry: one row per generator, free pair (i, j) and component m',
///   sum_{k,l} alpha_ik alpha_jl Delta(k,l)_m' - sum_m Delta(i,j)_m hat(alpha)_{m,m'} = 0.
/// Throws EmptyGenerators.
FpMatrix assemble_system(const PiSpec& spec, const std::vector<FpMatrix>& gens, Symmetry s);

/// Unknown vector (in free_pairs order) to a form, and back.
BilinearForm form_from_unknowns(std::size_t n, Prime p, Symmetry s, const FpVector& x);
FpVector unknowns_of(const BilinearForm& f, Symmetry s);

FormSpace solve_forms(const PiSpec& spec, Symmetry s, const SolverOptions& opts = {});
FormSpace solve_S(const PiSpec& spec, const SolverOptions& opts = {});
FormSpace solve_Sprime(const PiSpec& spec, const SolverOptions& opts = {});

/// Delta(u alpha, v alpha) == Delta(u, v) hat(alpha) for every given matrix.
bool is_equivariant(const BilinearForm& f, const std::vector<FpMatrix>& gens);

/// Delta_[sigma](u, v) = (u ^ v) sigma.
BilinearForm delta_sigma(const PiSpec& spec, const FpMatrix& sigma);
/// Delta_[lambda] = Delta_[lambda * I].
BilinearForm delta_lambda(const PiSpec& spec, std::uint32_t lambda);
/// The extra anti-symmetric form of case (e). Throws LabelMismatch otherwise.
BilinearForm delta_star(const PiSpec& spec, std::uint32_t kappa);

/// The sigma with f = Delta_[sigma]; throws NotDeltaSigma if f is not of that form.
FpMatrix sigma_of(const BilinearForm& f);

/// (Delta + Delta^t)/2 and (Delta - Delta^t)/2.
std::pair<BilinearForm, BilinearForm> split(const BilinearForm& f);

/// Delta^{(ec, ez)}(u, v) = Delta(u ec^-1, v ec^-1) ez.
BilinearForm transform_form(const BilinearForm& f, const FpMatrix& ec, const FpMatrix& ez);

/// x^{gamma(y)} = x + Delta(x G', y G') for the gamma attached to Delta.
GElement gamma_apply(const PiSpec& spec, const BilinearForm& f, const GElement& y, const GElement& x);

/// Verifies on the given elements that every gamma(y) is an automorphism and
/// that gamma(x y) = gamma(y) gamma(x). Throws NotInB if Delta fails
/// equivariance under the generators of Aut^c(pi).
CheckReport verify_gamma(const PiSpec& spec, const BilinearForm& f, const std::vector<GElement>& sample,
                         const SolverOptions& opts = {});

}  // namespace nhol
