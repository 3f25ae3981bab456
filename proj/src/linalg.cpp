#include "nhol/linalg.hpp"

#include <limits>

namespace nhol {

namespace {

void require_square(const FpMatrix& m, const char* what) {
  if (!m.is_square()) throw Error(ErrorCode::DimMismatch, std::string(what) + " of non-square matrix");
}

}  // namespace

Rref rref(const FpMatrix& input) {
  FpMatrix m = input;
  const std::uint64_t p = m.modulus().value();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t sel = r;
    while (sel < m.rows() && m(sel, c) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != r)
      for (std::size_t j = 0; j < m.cols(); ++j) {
        auto a = m(r, j);
        m.set(r, j, m(sel, j));
        m.set(sel, j, a);
      }
    const std::uint64_t inv = inv_mod(m(r, c), m.modulus());
    for (std::size_t j = c; j < m.cols(); ++j) m.set(r, j, static_cast<std::int64_t>(m(r, j) * inv % p));
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      const std::uint64_t f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        m.set(i, j, static_cast<std::int64_t>((m(i, j) + (p - f) * m(r, j)) % p));
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

std::size_t rank(const FpMatrix& m) { return rref(m).rank(); }

std::vector<FpVector> nullspace(const FpMatrix& m) {
  const Rref red = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : red.pivots) is_pivot[c] = true;
  std::vector<FpVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    FpVector v(m.cols(), m.modulus());
    v.set(f, 1);
    for (std::size_t r = 0; r < red.pivots.size(); ++r)
      v.set(red.pivots[r], -static_cast<std::int64_t>(red.matrix(r, f)));
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<FpVector> left_nullspace(const FpMatrix& m) { return nullspace(m.transposed()); }

Fp det(const FpMatrix& input) {
  require_square(input, "det");
  FpMatrix m = input;
  const std::size_t n = m.rows();
  const std::uint64_t p = m.modulus().value();
  Fp d(1, m.modulus());
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t sel = c;
    while (sel < n && m(sel, c) == 0) ++sel;
    if (sel == n) return Fp(0, m.modulus());
    if (sel != c) {
      for (std::size_t j = 0; j < n; ++j) {
        auto a = m(c, j);
        m.set(c, j, m(sel, j));
        m.set(sel, j, a);
      }
      d = -d;
    }
    d *= m.at(c, c);
    const std::uint64_t inv = inv_mod(m(c, c), m.modulus());
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c) == 0) continue;
      const std::uint64_t f = m(i, c) * inv % p;
      for (std::size_t j = c; j < n; ++j)
        m.set(i, j, static_cast<std::int64_t>((m(i, j) + (p - f) * m(c, j)) % p));
    }
  }
  return d;
}

bool is_invertible(const FpMatrix& m) { return m.is_square() && rank(m) == m.rows(); }

FpMatrix inverse(const FpMatrix& m) {
  require_square(m, "inverse");
  const std::size_t n = m.rows();
  FpMatrix aug(n, 2 * n, m.modulus());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.set(i, j, m(i, j));
    aug.set(i, n + i, 1);
  }
  const Rref red = rref(aug);
  if (red.rank() < n || red.pivots[n - 1] != n - 1)
    throw Error(ErrorCode::Singular, "matrix " + to_string(m) + " is not invertible");
  FpMatrix inv(n, n, m.modulus());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.set(i, j, red.matrix(i, n + j));
  return inv;
}

FpMatrix mat_pow(const FpMatrix& m, std::int64_t k) {
  require_square(m, "mat_pow");
  FpMatrix base = k < 0 ? inverse(m) : m;
  std::uint64_t e = k < 0 ? static_cast<std::uint64_t>(-k) : static_cast<std::uint64_t>(k);
  FpMatrix r = FpMatrix::identity(m.rows(), m.modulus());
  while (e) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

std::vector<FpVector> span_basis(const std::vector<FpVector>& vectors) {
  if (vectors.empty()) return {};
  const Rref red = rref(FpMatrix::from_rows(vectors));
  std::vector<FpVector> out;
  for (std::size_t r = 0; r < red.rank(); ++r) out.push_back(red.matrix.row(r));
  return out;
}

bool in_span(const std::vector<FpVector>& basis, const FpVector& v) {
  if (basis.empty()) return v.is_zero();
  auto rows = basis;
  const std::size_t r0 = rank(FpMatrix::from_rows(rows));
  rows.push_back(v);
  return rank(FpMatrix::from_rows(rows)) == r0;
}

std::vector<FpVector> extend_to_basis(std::vector<FpVector> vectors, std::size_t n, Prime p) {
  std::size_t r = vectors.empty() ? 0 : rank(FpMatrix::from_rows(vectors));
  if (r != vectors.size()) throw Error(ErrorCode::Singular, "vectors are dependent");
  for (std::size_t i = 0; i < n && vectors.size() < n; ++i) {
    vectors.push_back(FpVector::unit(n, i, p));
    if (rank(FpMatrix::from_rows(vectors)) != vectors.size()) vectors.pop_back();
  }
  return vectors;
}

// ---- enumeration -----------------------------------------------------------

MatrixShape MatrixShape::free(std::size_t rows, std::size_t cols) {
  MatrixShape s;
  s.rows = rows;
  s.cols = cols;
  s.fixed.assign(rows * cols, std::nullopt);
  return s;
}

MatrixShape& MatrixShape::fix(std::size_t i, std::size_t j, std::uint32_t value) {
  fixed.at(i * cols + j) = value;
  return *this;
}

std::size_t MatrixShape::free_cells() const {
  std::size_t k = 0;
  for (const auto& c : fixed) k += !c.has_value();
  return k;
}

std::uint64_t candidate_count(const MatrixShape& shape, Prime p) {
  std::uint64_t c = 1;
  for (std::size_t i = 0; i < shape.free_cells(); ++i) {
    if (c > std::numeric_limits<std::uint64_t>::max() / p.value())
      return std::numeric_limits<std::uint64_t>::max();
    c *= p.value();
  }
  return c;
}

void enumerate_matrices_range(const MatrixShape& shape, Prime p, std::uint64_t begin,
                              std::uint64_t end,
                              const std::function<void(const FpMatrix&)>& visit) {
  const std::uint64_t total = candidate_count(shape, p);
  if (end > total) end = total;
  if (begin >= end) return;
  FpMatrix m(shape.rows, shape.cols, p);
  std::vector<std::size_t> free_pos;
  for (std::size_t k = 0; k < shape.fixed.size(); ++k) {
    if (shape.fixed[k])
      m.data()[k] = *shape.fixed[k] % p.value();
    else
      free_pos.push_back(k);
  }
  // The last free cell is the fastest-moving digit, giving row-major lex order.
  std::uint64_t idx = begin;
  for (std::size_t d = free_pos.size(); d-- > 0;) {
    m.data()[free_pos[d]] = static_cast<std::uint32_t>(idx % p.value());
    idx /= p.value();
  }
  for (std::uint64_t n = begin; n < end; ++n) {
    visit(m);
    for (std::size_t d = free_pos.size(); d-- > 0;) {
      std::uint32_t& cell = m.data()[free_pos[d]];
      if (++cell < p.value()) break;
      cell = 0;
    }
  }
}

void enumerate_matrices(const MatrixShape& shape, Prime p, std::uint64_t budget,
                        const std::function<void(const FpMatrix&)>& visit) {
  const std::uint64_t total = candidate_count(shape, p);
  if (total > budget) throw BudgetExceeded(total, budget, "matrix enumeration");
  enumerate_matrices_range(shape, p, 0, total, visit);
}

}  // namespace nhol
