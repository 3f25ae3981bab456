#include "nhol/pigroup.hpp"

#include <array>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "nhol/linalg.hpp"

namespace nhol {

namespace {

struct LabelInfo {
  Label label;
  std::string_view name;
  std::size_t n;
  std::uint32_t min_prime;
};

constexpr std::array<LabelInfo, 8> kLabels{{
    {Label::a, "a", 3, 5},
    {Label::b, "b", 3, 3},
    {Label::c, "c", 4, 5},
    {Label::d, "d", 4, 3},
    {Label::e, "e", 4, 5},
    {Label::zero3, "zero3", 3, 3},
    {Label::zero4, "zero4", 4, 3},
    {Label::n2, "n2", 2, 3},
}};

const LabelInfo& info(Label label) {
  for (const auto& li : kLabels)
    if (li.label == label) return li;
  throw Error(ErrorCode::UnknownLabel, "no catalog entry for label");
}

void check_member(const PiSpec& spec, const GElement& x) {
  if (x.v.size() != spec.n || x.w.size() != spec.wedge_dim() || !(x.v.modulus() == spec.p) ||
      !(x.w.modulus() == spec.p))
    throw Error(ErrorCode::SpecMismatch, "element does not belong to this G_pi");
}

}  // namespace

std::string_view label_name(Label label) {
  if (label == Label::custom) return "custom";
  return info(label).name;
}

std::optional<Label> parse_label(std::string_view name) {
  for (const auto& li : kLabels)
    if (li.name == name) return li.label;
  if (name == "custom") return Label::custom;
  return std::nullopt;
}

const std::vector<Label>& catalog_labels() {
  static const std::vector<Label> labels = [] {
    std::vector<Label> v;
    for (const auto& li : kLabels) v.push_back(li.label);
    return v;
  }();
  return labels;
}

std::uint32_t hypothesis_min_prime(Label label) {
  if (label == Label::custom) return 3;
  return info(label).min_prime;
}

PiSpec::PiSpec(Prime p_, FpMatrix pi_, Label label_)
    : p(p_), n(pi_.rows()), pi(std::move(pi_)), label(label_) {
  if (!(pi.modulus() == p)) throw Error(ErrorCode::ModulusMismatch, "pi modulus");
  if (n < 2) throw Error(ErrorCode::DimMismatch, "dimension must be at least 2");
  if (pi.cols() != choose2(n))
    throw Error(ErrorCode::DimMismatch, "pi must be n x C(n,2), got " + std::to_string(pi.rows()) +
                                            "x" + std::to_string(pi.cols()));
}

PiSpec catalog(Label label, Prime p) {
  const LabelInfo& li = info(label);
  const WedgeBasis basis(li.n);
  FpMatrix pi(li.n, basis.size(), p);
  switch (label) {
    case Label::a:
    case Label::c:
    case Label::n2: pi.set(0, basis.index(0, 1), 1); break;
    case Label::b: pi.set(0, basis.index(1, 2), 1); break;
    case Label::d: pi.set(0, basis.index(2, 3), 1); break;
    case Label::e:
      pi.set(0, basis.index(0, 1), 1);
      pi.set(0, basis.index(2, 3), 1);
      break;
    case Label::zero3:
    case Label::zero4: break;
    case Label::custom: throw Error(ErrorCode::UnknownLabel, "custom has no catalog entry");
  }
  return PiSpec(p, std::move(pi), label);
}

PiSpec parse_pi_spec(std::string_view text) {
  std::istringstream in{std::string(text)};
  long long p = 0, n = 0;
  if (!(in >> p >> n)) throw Error(ErrorCode::Parse, "expected header \"p n\"");
  if (n < 2 || n > 8) throw Error(ErrorCode::Parse, "n must be between 2 and 8");
  if (p < 3 || p > 100000 || !is_prime(static_cast<std::uint64_t>(p)))
    throw Error(ErrorCode::Parse, "p must be an odd prime");
  const Prime prime(static_cast<std::uint32_t>(p));
  const std::size_t cols = choose2(static_cast<std::size_t>(n));
  FpMatrix pi(static_cast<std::size_t>(n), cols, prime);
  for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      long long x;
      if (!(in >> x))
        throw Error(ErrorCode::Parse, "expected " + std::to_string(n * cols) + " matrix entries");
      pi.set(i, j, x);
    }
  std::string extra;
  if (in >> extra) throw Error(ErrorCode::Parse, "trailing input \"" + extra + "\"");
  return PiSpec(prime, std::move(pi));
}

std::string format_pi_spec(const PiSpec& spec) {
  std::ostringstream out;
  out << spec.p.value() << ' ' << spec.n << '\n';
  for (std::size_t i = 0; i < spec.n; ++i) {
    for (std::size_t j = 0; j < spec.wedge_dim(); ++j) out << (j ? " " : "") << spec.pi(i, j);
    out << '\n';
  }
  return out.str();
}

std::ostream& operator<<(std::ostream& os, const GElement& g) { return os << '<' << g.v << ' ' << g.w << '>'; }

GElement g_identity(const PiSpec& spec) {
  return {FpVector(spec.n, spec.p), FpVector(spec.wedge_dim(), spec.p)};
}

GElement g_generator(const PiSpec& spec, std::size_t i) {
  return {FpVector::unit(spec.n, i, spec.p), FpVector(spec.wedge_dim(), spec.p)};
}

GElement g_central(const PiSpec& spec, const FpVector& w) {
  GElement g = g_identity(spec);
  g.w = w;
  check_member(spec, g);
  return g;
}

GElement g_random(const PiSpec& spec, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> digit(0, spec.p.value() - 1);
  GElement g = g_identity(spec);
  for (std::size_t i = 0; i < spec.n; ++i) g.v.set(i, digit(rng));
  for (std::size_t m = 0; m < spec.wedge_dim(); ++m) g.w.set(m, digit(rng));
  return g;
}

GElement g_mul(const PiSpec& spec, const GElement& x, const GElement& y) {
  check_member(spec, x);
  check_member(spec, y);
  const std::uint32_t p = spec.p.value();
  const std::size_t n = spec.n;
  GElement r{x.v + y.v, x.w + y.w};
  const std::int64_t sign = spec.cocycle == CocycleSign::standard ? -1 : 1;
  std::size_t m = 0;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = j + 1; k < n; ++k, ++m) {
      const std::uint64_t cross = static_cast<std::uint64_t>(x.v[k]) * y.v[j] % p;
      if (cross) r.w.set(m, static_cast<std::int64_t>(r.w[m]) + sign * static_cast<std::int64_t>(cross));
    }
  for (std::size_t i = 0; i < n; ++i)
    if (x.v[i] + y.v[i] >= p) r.w += spec.pi.row(i);
  return r;
}

GElement g_inv(const PiSpec& spec, const GElement& x) {
  check_member(spec, x);
  // Solve x * y = 1 in normal form: y.v = -x.v, and every nonzero coordinate
  // of x.v carries.
  const std::uint32_t p = spec.p.value();
  GElement y{-x.v, -x.w};
  const std::int64_t sign = spec.cocycle == CocycleSign::standard ? -1 : 1;
  std::size_t m = 0;
  for (std::size_t j = 0; j < spec.n; ++j)
    for (std::size_t k = j + 1; k < spec.n; ++k, ++m) {
      const std::uint64_t cross = static_cast<std::uint64_t>(x.v[k]) * y.v[j] % p;
      if (cross) y.w.set(m, static_cast<std::int64_t>(y.w[m]) - sign * static_cast<std::int64_t>(cross));
    }
  for (std::size_t i = 0; i < spec.n; ++i)
    if (x.v[i] != 0) y.w = y.w - spec.pi.row(i);
  return y;
}

GElement g_pow(const PiSpec& spec, const GElement& x, std::int64_t k) {
  GElement base = k < 0 ? g_inv(spec, x) : x;
  check_member(spec, base);
  std::uint64_t e = k < 0 ? static_cast<std::uint64_t>(-(k + 1)) + 1 : static_cast<std::uint64_t>(k);
  GElement r = g_identity(spec);
  while (e) {
    if (e & 1) r = g_mul(spec, r, base);
    e >>= 1;
    if (e) base = g_mul(spec, base, base);
  }
  return r;
}

GElement g_comm(const PiSpec& spec, const GElement& x, const GElement& y) {
  return g_mul(spec, g_inv(spec, g_mul(spec, y, x)), g_mul(spec, x, y));
}

CheckReport verify_presentation(const PiSpec& spec) {
  CheckReport report;
  const std::size_t n = spec.n;
  const WedgeBasis basis(n);
  const GElement one = g_identity(spec);
  std::vector<GElement> gens;
  for (std::size_t i = 0; i < n; ++i) gens.push_back(g_generator(spec, i));

  auto label = [](const char* what, std::size_t i, std::size_t j, std::size_t k = SIZE_MAX) {
    std::ostringstream os;
    os << what << '(' << i + 1 << ',' << j + 1;
    if (k != SIZE_MAX) os << ',' << k + 1;
    os << ')';
    return os.str();
  };

  bool nested_ok = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!(g_comm(spec, g_comm(spec, gens[i], gens[j]), gens[k]) == one)) {
          nested_ok = false;
          report.add(label("nested_commutator", i, j, k), false);
        }
  if (nested_ok) report.add("nested_commutators_trivial", true);

  for (std::size_t i = 0; i < n; ++i) {
    const GElement pw = g_pow(spec, gens[i], spec.p.value());
    const bool ok = pw == g_central(spec, spec.pi.row(i));
    std::ostringstream os;
    os << "power_relation(" << i + 1 << ')';
    report.add(os.str(), ok, ok ? "" : "got w = " + [&] {
      std::ostringstream d;
      d << pw;
      return d.str();
    }());
  }

  bool ident_ok = true, central_ok = true;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = j + 1; k < n; ++k) {
      const GElement c = g_comm(spec, gens[j], gens[k]);
      if (!(c == g_central(spec, FpVector::unit(basis.size(), basis.index(j, k), spec.p)))) {
        ident_ok = false;
        report.add(label("commutator_identification", j, k), false);
      }
      for (std::size_t i = 0; i < n; ++i)
        if (!(g_mul(spec, c, gens[i]) == g_mul(spec, gens[i], c))) {
          central_ok = false;
          report.add(label("commutator_central", j, k, i), false);
        }
    }
  if (ident_ok) report.add("commutator_identification", true);
  if (central_ok) report.add("commutators_central", true);

  bool exp_ok = true;
  for (std::size_t m = 0; m < basis.size(); ++m) {
    const GElement z = g_central(spec, FpVector::unit(basis.size(), m, spec.p));
    if (!(g_pow(spec, z, spec.p.value()) == one)) exp_ok = false;
  }
  report.add("derived_subgroup_exponent_p", exp_ok);
  return report;
}

FpMatrix transport_pi(const FpMatrix& pi, const FpMatrix& m) {
  return m * pi * inverse(induced_hat(m));
}

RankOneForm canonical_rank_one(const PiSpec& spec) {
  const std::size_t n = spec.n;
  const Prime p = spec.p;
  if (n < 2 || n > 4) throw Error(ErrorCode::NotRankOne, "rank-one normal forms exist for n in {2,3,4}");
  if (rank(spec.pi) != 1) throw Error(ErrorCode::NotRankOne, "pi has rank " + std::to_string(rank(spec.pi)));

  // First change of basis: a vector outside ker(pi), then a basis of ker(pi).
  std::vector<FpVector> rows;
  for (std::size_t i = 0; i < n; ++i)
    if (!spec.pi.row(i).is_zero()) {
      rows.push_back(FpVector::unit(n, i, p));
      break;
    }
  for (auto& k : left_nullspace(spec.pi)) rows.push_back(k);
  const FpMatrix first = FpMatrix::from_rows(rows);
  const FpMatrix pi1 = transport_pi(spec.pi, first);

  // Now ker = <e_2..e_n> and omega = e_1 pi1 = e_1 ^ x + psi with x in ker
  // and psi in Lambda^2(ker).
  const WedgeBasis basis(n);
  const FpVector omega = pi1.row(0);
  FpVector x(n, p);
  for (std::size_t k = 1; k < n; ++k) x.set(k, omega[basis.index(0, k)]);
  const FpVector e1 = FpVector::unit(n, 0, p);
  const FpVector psi = omega - wedge(e1, x);

  std::vector<FpVector> ker_units;
  for (std::size_t k = 1; k < n; ++k) ker_units.push_back(FpVector::unit(n, k, p));
  auto complete = [&](std::vector<FpVector> head, std::vector<FpVector> tail) {
    // head followed by a completion of tail's span inside ker, then tail.
    std::vector<FpVector> fixed = head;
    for (auto& t : tail) fixed.push_back(t);
    std::vector<FpVector> ker_part(fixed.begin() + 1, fixed.end());
    std::vector<FpVector> fill;
    for (auto& u : ker_units) {
      auto trial = ker_part;
      trial.push_back(u);
      if (rank(FpMatrix::from_rows(trial)) == trial.size()) {
        ker_part.push_back(u);
        fill.push_back(u);
      }
    }
    std::vector<FpVector> out = head;
    for (auto& f : fill) out.push_back(f);
    for (auto& t : tail) out.push_back(t);
    return out;
  };

  Label label;
  std::vector<FpVector> basis_rows;
  if (psi.is_zero()) {
    label = n == 2 ? Label::n2 : n == 3 ? Label::a : Label::c;
    basis_rows = complete({e1, x}, {});
  } else {
    const auto pairs = decompose_two_vector(psi, n);
    if (pairs.size() != 1) throw std::logic_error("2-vector in a 3-dim kernel must be decomposable");
    const FpVector& y = pairs[0].first;
    const FpVector& z = pairs[0].second;
    if (x.is_zero()) {
      label = n == 3 ? Label::b : Label::d;
      basis_rows = n == 3 ? std::vector<FpVector>{e1, y, z} : complete({e1}, {y, z});
    } else if (in_span({y, z}, x)) {
      // psi = x ^ z' for some z' in <y,z>, so omega = (e_1 - z') ^ x.
      FpVector zp = rank(FpMatrix::from_rows({x, y})) == 2 ? y : z;
      const FpVector xz = wedge(x, zp);
      std::size_t m = 0;
      while (xz[m] == 0) ++m;
      zp = zp.scaled(static_cast<std::uint32_t>(psi[m] * static_cast<std::uint64_t>(inv_mod(xz[m], p)) % p));
      label = n == 3 ? Label::a : Label::c;
      basis_rows = complete({e1 - zp, x}, {});
    } else {
      label = Label::e;
      basis_rows = {e1, x, y, z};
    }
  }

  // Already in catalog form: keep the basis.
  if (spec.pi == catalog(label, p).pi) return {label, FpMatrix::identity(n, p)};
  const FpMatrix second = FpMatrix::from_rows(basis_rows);
  FpMatrix change = second * first;
  if (!(transport_pi(spec.pi, change) == catalog(label, p).pi))
    throw std::logic_error("rank-one normal form failed to transport to catalog form");
  return {label, std::move(change)};
}

}  // namespace nhol
