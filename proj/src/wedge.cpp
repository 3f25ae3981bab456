#include "nhol/wedge.hpp"

#include "nhol/linalg.hpp"

namespace nhol {

WedgeBasis::WedgeBasis(std::size_t n) : n_(n), index_(n * n, static_cast<std::size_t>(-1)) {
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = j + 1; k < n; ++k) {
      index_[j * n + k] = pairs_.size();
      pairs_.emplace_back(j, k);
    }
}

std::size_t WedgeBasis::index(std::size_t j, std::size_t k) const {
  if (j >= k || k >= n_) throw Error(ErrorCode::DimMismatch, "wedge index requires j < k < n");
  return index_[j * n_ + k];
}

std::size_t dim_from_wedge_length(std::size_t len) {
  std::size_t n = 0;
  while (choose2(n) < len) ++n;
  if (choose2(n) != len)
    throw Error(ErrorCode::DimMismatch, std::to_string(len) + " is not of the form C(n,2)");
  return n;
}

FpVector wedge(const FpVector& u, const FpVector& v) {
  if (!(u.modulus() == v.modulus())) throw Error(ErrorCode::ModulusMismatch, "wedge");
  if (u.size() != v.size()) throw Error(ErrorCode::DimMismatch, "wedge of vectors of different length");
  const std::size_t n = u.size();
  const std::uint64_t p = u.modulus().value();
  FpVector w(choose2(n), u.modulus());
  std::size_t m = 0;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = j + 1; k < n; ++k, ++m) {
      const std::uint64_t a = static_cast<std::uint64_t>(u[j]) * v[k] % p;
      const std::uint64_t b = static_cast<std::uint64_t>(u[k]) * v[j] % p;
      w.set(m, static_cast<std::int64_t>(a) - static_cast<std::int64_t>(b));
    }
  return w;
}

FpVector induced_hat_row(const FpMatrix& alpha, std::size_t j, std::size_t k) {
  return wedge(alpha.row(j), alpha.row(k));
}

FpMatrix induced_hat(const FpMatrix& alpha) {
  if (!alpha.is_square()) throw Error(ErrorCode::DimMismatch, "induced_hat needs a square matrix");
  const WedgeBasis basis(alpha.rows());
  FpMatrix hat(basis.size(), basis.size(), alpha.modulus());
  for (std::size_t m = 0; m < basis.size(); ++m) {
    const auto [j, k] = basis.pairs()[m];
    hat.set_row(m, induced_hat_row(alpha, j, k));
  }
  return hat;
}

FpMatrix antisymmetric_matrix(const FpVector& w, std::size_t n) {
  const WedgeBasis basis(n);
  if (w.size() != basis.size()) throw Error(ErrorCode::DimMismatch, "2-vector length");
  FpMatrix a(n, n, w.modulus());
  for (std::size_t m = 0; m < basis.size(); ++m) {
    const auto [j, k] = basis.pairs()[m];
    a.set(j, k, w[m]);
    a.set(k, j, -static_cast<std::int64_t>(w[m]));
  }
  return a;
}

std::vector<std::pair<FpVector, FpVector>> decompose_two_vector(const FpVector& w, std::size_t n) {
  if (n > 4) throw Error(ErrorCode::DimMismatch, "decompose_two_vector supports n <= 4");
  const Prime p = w.modulus();
  std::vector<std::pair<FpVector, FpVector>> out;
  FpVector rest = w;
  const WedgeBasis basis(n);
  // Symplectic reduction: with A(j,k) != 0, the contractions u = row j and
  // v = row k of the anti-symmetric matrix give rest - (u ^ v)/A(j,k) of rank
  // two less.
  while (!rest.is_zero()) {
    std::size_t m = 0;
    while (rest[m] == 0) ++m;
    const auto [j, k] = basis.pairs()[m];
    const FpMatrix a = antisymmetric_matrix(rest, n);
    const FpVector u = a.row(j).scaled(inv_mod(rest[m], p));
    const FpVector v = a.row(k);
    rest = rest - wedge(u, v);
    out.emplace_back(u, v);
  }
  return out;
}

}  // namespace nhol
