#include "nhol/forms.hpp"

#include "nhol/linalg.hpp"
#include "nhol/wedge.hpp"

namespace nhol {

namespace {

BilinearForm delta_sigma_raw(std::size_t n, const FpMatrix& sigma) {
  const WedgeBasis basis(n);
  if (sigma.rows() != basis.size() || sigma.cols() != basis.size())
    throw Error(ErrorCode::DimMismatch, "sigma must act on Lambda^2 V");
  BilinearForm f(n, sigma.modulus(), Symmetry::antisymmetric);
  for (std::size_t m = 0; m < basis.size(); ++m) {
    const auto [j, k] = basis.pairs()[m];
    f.set_value(j, k, sigma.row(m));
  }
  return f;
}

}  // namespace

std::string_view symmetry_name(Symmetry s) {
  switch (s) {
    case Symmetry::none: return "none";
    case Symmetry::symmetric: return "symmetric";
    case Symmetry::antisymmetric: return "antisymmetric";
  }
  return "?";
}

BilinearForm::BilinearForm(std::size_t n, Prime p, Symmetry symmetry)
    : n_(n), c_(choose2(n)), p_(p), sym_(symmetry), t_(n * n * choose2(n), 0) {}

FpVector BilinearForm::value(std::size_t i, std::size_t j) const {
  return FpVector(std::span<const std::uint32_t>(t_).subspan((i * n_ + j) * c_, c_), p_);
}

void BilinearForm::set_value(std::size_t i, std::size_t j, const FpVector& w) {
  if (w.size() != c_) throw Error(ErrorCode::DimMismatch, "form value length");
  if (i == j && sym_ == Symmetry::antisymmetric && !w.is_zero())
    throw Error(ErrorCode::DimMismatch, "anti-symmetric form has zero diagonal");
  for (std::size_t m = 0; m < c_; ++m) {
    t_[(i * n_ + j) * c_ + m] = w[m];
    if (i == j) continue;
    if (sym_ == Symmetry::symmetric) t_[(j * n_ + i) * c_ + m] = w[m];
    if (sym_ == Symmetry::antisymmetric) t_[(j * n_ + i) * c_ + m] = reduce(-std::int64_t{w[m]}, p_);
  }
}

FpVector BilinearForm::operator()(const FpVector& u, const FpVector& v) const {
  if (u.size() != n_ || v.size() != n_) throw Error(ErrorCode::DimMismatch, "form argument length");
  const std::uint64_t p = p_.value();
  std::vector<std::uint64_t> acc(c_, 0);
  for (std::size_t i = 0; i < n_; ++i) {
    if (!u[i]) continue;
    for (std::size_t j = 0; j < n_; ++j) {
      if (!v[j]) continue;
      const std::uint64_t s = std::uint64_t{u[i]} * v[j] % p;
      for (std::size_t m = 0; m < c_; ++m) acc[m] = (acc[m] + s * coeff(i, j, m)) % p;
    }
  }
  FpVector out(c_, p_);
  for (std::size_t m = 0; m < c_; ++m) out.set(m, static_cast<std::int64_t>(acc[m]));
  return out;
}

bool BilinearForm::symmetry_holds() const {
  if (sym_ == Symmetry::none) return true;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      for (std::size_t m = 0; m < c_; ++m) {
        const std::uint32_t a = coeff(i, j, m), b = coeff(j, i, m);
        if (sym_ == Symmetry::symmetric ? a != b : a != reduce(-std::int64_t{b}, p_)) return false;
      }
  return true;
}

bool BilinearForm::is_zero() const noexcept {
  for (auto x : t_)
    if (x) return false;
  return true;
}

FpVector BilinearForm::as_vector() const { return FpVector(std::span<const std::uint32_t>(t_), p_); }

BilinearForm BilinearForm::operator+(const BilinearForm& o) const {
  if (o.n_ != n_ || !(o.p_ == p_)) throw Error(ErrorCode::DimMismatch, "adding forms of different shape");
  BilinearForm r(n_, p_, sym_ == o.sym_ ? sym_ : Symmetry::none);
  for (std::size_t k = 0; k < t_.size(); ++k) r.t_[k] = (t_[k] + o.t_[k]) % p_.value();
  return r;
}

BilinearForm BilinearForm::operator-(const BilinearForm& o) const { return *this + o.scaled(p_.value() - 1); }

BilinearForm BilinearForm::scaled(std::uint32_t c) const {
  BilinearForm r = *this;
  for (auto& x : r.t_) x = static_cast<std::uint32_t>(std::uint64_t{x} * (c % p_.value()) % p_.value());
  return r;
}

BilinearForm BilinearForm::with_symmetry(Symmetry s) const {
  BilinearForm r = *this;
  r.sym_ = s;
  if (!r.symmetry_holds())
    throw Error(ErrorCode::DimMismatch, std::string("form is not ") + std::string(symmetry_name(s)));
  return r;
}

std::vector<std::pair<std::size_t, std::size_t>> free_pairs(std::size_t n, Symmetry s) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (s == Symmetry::symmetric && j < i) continue;
      if (s == Symmetry::antisymmetric && j <= i) continue;
      out.emplace_back(i, j);
    }
  return out;
}

std::size_t unknown_count(std::size_t n, Symmetry s) { return free_pairs(n, s).size() * choose2(n); }

FpMatrix assemble_system(const PiSpec& spec, const std::vector<FpMatrix>& gens, Symmetry s) {
  if (gens.empty()) throw Error(ErrorCode::EmptyGenerators, "no generators for the equivariance system");
  const std::size_t n = spec.n, c = spec.wedge_dim();
  const Prime p = spec.p;
  const auto pairs = free_pairs(n, s);

  // Where Delta(k, l) lives among the unknowns: (pair index, sign), or none.
  std::vector<long> slot(n * n, -1);
  std::vector<std::int64_t> sign(n * n, 0);
  for (std::size_t q = 0; q < pairs.size(); ++q) {
    const auto [i, j] = pairs[q];
    slot[i * n + j] = static_cast<long>(q);
    sign[i * n + j] = 1;
    if (i != j && s != Symmetry::none) {
      slot[j * n + i] = static_cast<long>(q);
      sign[j * n + i] = s == Symmetry::symmetric ? 1 : -1;
    }
  }

  FpMatrix sys(gens.size() * pairs.size() * c, pairs.size() * c, p);
  std::size_t row = 0;
  for (const auto& alpha : gens) {
    const FpMatrix hat = induced_hat(alpha);
    for (const auto& [i, j] : pairs) {
      for (std::size_t mp = 0; mp < c; ++mp, ++row) {
        std::vector<std::int64_t> acc(pairs.size() * c, 0);
        for (std::size_t k = 0; k < n; ++k)
          for (std::size_t l = 0; l < n; ++l) {
            const long q = slot[k * n + l];
            if (q < 0) continue;
            const std::int64_t coef = std::int64_t{alpha(i, k)} * alpha(j, l) % p.value();
            if (coef) acc[q * c + mp] += sign[k * n + l] * coef;
          }
        const std::size_t q0 = static_cast<std::size_t>(slot[i * n + j]);
        for (std::size_t m = 0; m < c; ++m) acc[q0 * c + m] -= hat(m, mp);
        for (std::size_t u = 0; u < acc.size(); ++u) sys.set(row, u, acc[u]);
      }
    }
  }
  return sys;
}

BilinearForm form_from_unknowns(std::size_t n, Prime p, Symmetry s, const FpVector& x) {
  const auto pairs = free_pairs(n, s);
  const std::size_t c = choose2(n);
  if (x.size() != pairs.size() * c) throw Error(ErrorCode::DimMismatch, "unknown vector length");
  BilinearForm f(n, p, s);
  for (std::size_t q = 0; q < pairs.size(); ++q)
    f.set_value(pairs[q].first, pairs[q].second,
                FpVector(x.raw().subspan(q * c, c), p));
  return f;
}

FpVector unknowns_of(const BilinearForm& f, Symmetry s) {
  const auto pairs = free_pairs(f.n(), s);
  const std::size_t c = f.wedge_dim();
  FpVector x(pairs.size() * c, f.modulus());
  for (std::size_t q = 0; q < pairs.size(); ++q)
    for (std::size_t m = 0; m < c; ++m) x.set(q * c + m, f.coeff(pairs[q].first, pairs[q].second, m));
  return x;
}

FormSpace solve_forms(const PiSpec& spec, Symmetry s, const SolverOptions& opts) {
  const auto gens = autc_generators(spec, opts).matrices();
  FormSpace space;
  space.symmetry = s;
  if (gens.empty()) {
    // Aut^c(pi) trivial: every form qualifies.
    const std::size_t u = unknown_count(spec.n, s);
    for (std::size_t k = 0; k < u; ++k)
      space.basis.push_back(form_from_unknowns(spec.n, spec.p, s, FpVector::unit(u, k, spec.p)));
    return space;
  }
  for (const auto& x : nullspace(assemble_system(spec, gens, s)))
    space.basis.push_back(form_from_unknowns(spec.n, spec.p, s, x));
  return space;
}

FormSpace solve_S(const PiSpec& spec, const SolverOptions& opts) {
  return solve_forms(spec, Symmetry::symmetric, opts);
}

FormSpace solve_Sprime(const PiSpec& spec, const SolverOptions& opts) {
  return solve_forms(spec, Symmetry::antisymmetric, opts);
}

bool is_equivariant(const BilinearForm& f, const std::vector<FpMatrix>& gens) {
  const std::size_t n = f.n();
  for (const auto& alpha : gens) {
    const FpMatrix hat = induced_hat(alpha);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (!(f(alpha.row(i), alpha.row(j)) == f.value(i, j) * hat)) return false;
  }
  return true;
}

BilinearForm delta_sigma(const PiSpec& spec, const FpMatrix& sigma) {
  if (!(sigma.modulus() == spec.p)) throw Error(ErrorCode::ModulusMismatch, "sigma modulus");
  return delta_sigma_raw(spec.n, sigma);
}

BilinearForm delta_lambda(const PiSpec& spec, std::uint32_t lambda) {
  return delta_sigma(spec, FpMatrix::scalar(spec.wedge_dim(), lambda, spec.p));
}

BilinearForm delta_star(const PiSpec& spec, std::uint32_t kappa) {
  if (spec.label != Label::e) throw Error(ErrorCode::LabelMismatch, "delta_star is defined for case e only");
  const Prime p = spec.p;
  const WedgeBasis basis(4);
  const std::int64_t k = kappa;
  auto e = [&](std::size_t j, std::size_t l, std::int64_t c) {
    FpVector w(6, p);
    w.set(basis.index(j, l), c);
    return w;
  };
  BilinearForm f(4, p, Symmetry::antisymmetric);
  f.set_value(0, 1, e(2, 3, k));
  f.set_value(0, 2, e(0, 2, -k));
  f.set_value(0, 3, e(0, 3, -k));
  f.set_value(1, 2, e(1, 2, -k));
  f.set_value(1, 3, e(1, 3, -k));
  f.set_value(2, 3, e(0, 1, k));
  return f;
}

FpMatrix sigma_of(const BilinearForm& f) {
  const WedgeBasis basis(f.n());
  std::vector<FpVector> rows;
  for (const auto& [j, k] : basis.pairs()) rows.push_back(f.value(j, k));
  FpMatrix sigma = FpMatrix::from_rows(rows);
  if (!(delta_sigma_raw(f.n(), sigma) == f))
    throw Error(ErrorCode::NotDeltaSigma, "form is not anti-symmetric, so no sigma represents it");
  return sigma;
}

std::pair<BilinearForm, BilinearForm> split(const BilinearForm& f) {
  const Prime p = f.modulus();
  const std::uint32_t half = inv_mod(2, p);
  BilinearForm sym(f.n(), p, Symmetry::symmetric), anti(f.n(), p, Symmetry::antisymmetric);
  for (std::size_t i = 0; i < f.n(); ++i)
    for (std::size_t j = i; j < f.n(); ++j) {
      const FpVector a = f.value(i, j), b = f.value(j, i);
      sym.set_value(i, j, (a + b).scaled(half));
      if (i != j) anti.set_value(i, j, (a - b).scaled(half));
    }
  return {sym, anti};
}

BilinearForm transform_form(const BilinearForm& f, const FpMatrix& ec, const FpMatrix& ez) {
  const FpMatrix inv = inverse(ec);
  BilinearForm r(f.n(), f.modulus(), Symmetry::none);
  for (std::size_t i = 0; i < f.n(); ++i)
    for (std::size_t j = 0; j < f.n(); ++j) r.set_value(i, j, f(inv.row(i), inv.row(j)) * ez);
  return r.with_symmetry(f.symmetry());
}

GElement gamma_apply(const PiSpec& spec, const BilinearForm& f, const GElement& y, const GElement& x) {
  if (f.n() != spec.n) throw Error(ErrorCode::SpecMismatch, "form dimension");
  return {x.v, x.w + f(x.v, y.v)};
}

CheckReport verify_gamma(const PiSpec& spec, const BilinearForm& f, const std::vector<GElement>& sample,
                         const SolverOptions& opts) {
  if (!is_equivariant(f, autc_generators(spec, opts).matrices()))
    throw Error(ErrorCode::NotInB, "form is not Aut^c(pi)-equivariant");
  CheckReport report;
  bool aut = true, anti = true;
  for (const auto& y : sample) {
    for (const auto& a : sample)
      for (const auto& b : sample) {
        const GElement lhs = gamma_apply(spec, f, y, g_mul(spec, a, b));
        const GElement rhs = g_mul(spec, gamma_apply(spec, f, y, a), gamma_apply(spec, f, y, b));
        if (!(lhs == rhs)) aut = false;
      }
    for (const auto& x : sample)
      for (const auto& z : sample) {
        const GElement lhs = gamma_apply(spec, f, g_mul(spec, x, y), z);
        const GElement rhs = gamma_apply(spec, f, x, gamma_apply(spec, f, y, z));
        if (!(lhs == rhs)) anti = false;
      }
  }
  report.add("gamma_values_are_automorphisms", aut);
  report.add("gamma_is_anti_homomorphism", anti);
  return report;
}

}  // namespace nhol
