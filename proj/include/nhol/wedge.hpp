#pragma once

// Exterior square of V = F_p^n.
//
// The basis of Lambda^2 V is v_j ^ v_k for j < k, listed lexicographically:
// (1,2), (1,3), ..., (1,n), (2,3), ..., (n-1,n). Indices in code are 0-based.

#include <utility>
#include <vector>

#include "nhol/fp.hpp"

namespace nhol {

class WedgeBasis {
 public:
  explicit WedgeBasis(std::size_t n);

  std::size_t n() const noexcept { return n_; }
  std::size_t size() const noexcept { return pairs_.size(); }
  const std::vector<std::pair<std::size_t, std::size_t>>& pairs() const noexcept { return pairs_; }

  /// Position of v_j ^ v_k (j < k) in the basis.
  std::size_t index(std::size_t j, std::size_t k) const;

 private:
  std::size_t n_;
  std::vector<std::pair<std::size_t, std::size_t>> pairs_;
  std::vector<std::size_t> index_;
};

inline std::size_t choose2(std::size_t n) { return n * (n - 1) / 2; }

/// u ^ v; coefficient u_j v_k - u_k v_j on v_j ^ v_k.
FpVector wedge(const FpVector& u, const FpVector& v);

/// Matrix of the induced map on Lambda^2 V: row (j,k) is (v_j alpha) ^ (v_k alpha).
/// Multiplicative: induced_hat(a * b) = induced_hat(a) * induced_hat(b).
FpMatrix induced_hat(const FpMatrix& alpha);

/// Row (j,k) of induced_hat(alpha) only.
FpVector induced_hat_row(const FpMatrix& alpha, std::size_t j, std::size_t k);

/// n x n anti-symmetric matrix associated with a 2-vector.
FpMatrix antisymmetric_matrix(const FpVector& w, std::size_t n);

/// Writes w as a sum of rank/2 decomposable 2-vectors u ^ v (n <= 4).
std::vector<std::pair<FpVector, FpVector>> decompose_two_vector(const FpVector& w, std::size_t n);

/// Dimension of V recovered from the length C(n,2) of a 2-vector.
std::size_t dim_from_wedge_length(std::size_t len);

}  // namespace nhol
