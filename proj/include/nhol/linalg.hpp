#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "nhol/fp.hpp"

namespace nhol {

/// Reduced row-echelon form plus the pivot column of each nonzero row.
struct Rref {
  FpMatrix matrix;
  std::vector<std::size_t> pivots;
  std::size_t rank() const noexcept { return pivots.size(); }
};

Rref rref(const FpMatrix& m);
std::size_t rank(const FpMatrix& m);

/// Basis of {x : m * x = 0} (x a column vector), one vector per free column of
/// the RREF in increasing column order, with a 1 in that free column.
/// Empty iff m is injective.
std::vector<FpVector> nullspace(const FpMatrix& m);

/// Basis of {x : x * m = 0} for row vectors x.
std::vector<FpVector> left_nullspace(const FpMatrix& m);

Fp det(const FpMatrix& m);
FpMatrix inverse(const FpMatrix& m);
bool is_invertible(const FpMatrix& m);

/// True iff v lies in the row span of the given vectors.
bool in_span(const std::vector<FpVector>& basis, const FpVector& v);

/// Some basis of the subspace spanned by the given vectors (RREF rows).
std::vector<FpVector> span_basis(const std::vector<FpVector>& vectors);

/// Extends an independent list to a basis of F_p^n using unit vectors.
std::vector<FpVector> extend_to_basis(std::vector<FpVector> vectors, std::size_t n, Prime p);

// ---- exhaustive enumeration -------------------------------------------------

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

/// Cells of a rows x cols matrix that are pinned to fixed values; all other
/// cells range over F_p.
struct MatrixShape {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::optional<std::uint32_t>> fixed;  // row-major, nullopt = free

  static MatrixShape free(std::size_t rows, std::size_t cols);
  MatrixShape& fix(std::size_t i, std::size_t j, std::uint32_t value);
  std::size_t free_cells() const;
};

/// p^free, saturating at UINT64_MAX.
std::uint64_t candidate_count(const MatrixShape& shape, Prime p);

/// Visits every matrix of the shape in lexicographic (row-major) order. The
/// visitor receives a reference to a reused buffer. Throws BudgetExceeded
/// before visiting anything if the count exceeds the budget.
void enumerate_matrices(const MatrixShape& shape, Prime p, std::uint64_t budget,
                        const std::function<void(const FpMatrix&)>& visit);

/// Visits candidates with lexicographic index in [begin, end) only. Used to
/// partition one enumeration across workers.
void enumerate_matrices_range(const MatrixShape& shape, Prime p, std::uint64_t begin,
                              std::uint64_t end,
                              const std::function<void(const FpMatrix&)>& visit);

}  // namespace nhol
