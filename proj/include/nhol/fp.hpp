#pragma once

// Exact arithmetic over the prime field F_p.
//
// Every value carries its modulus. Combining values with different moduli is
// an error (ModulusMismatch), never a silent coercion.

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "nhol/error.hpp"

namespace nhol {

/// An odd prime modulus, validated once at construction.
class Prime {
 public:
  explicit Prime(std::uint32_t p);

  std::uint32_t value() const noexcept { return p_; }
  operator std::uint32_t() const noexcept { return p_; }

  friend bool operator==(Prime a, Prime b) noexcept { return a.p_ == b.p_; }

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

/// Smallest primitive root modulo p.
std::uint32_t primitive_root(Prime p);

/// Reduces an arbitrary integer into [0, p).
inline std::uint32_t reduce(std::int64_t x, std::uint32_t p) {
  std::int64_t r = x % static_cast<std::int64_t>(p);
  return static_cast<std::uint32_t>(r < 0 ? r + p : r);
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p);
std::uint32_t pow_mod(std::uint32_t a, std::uint64_t e, std::uint32_t p);

class Fp {
 public:
  Fp(std::int64_t value, Prime p) : v_(reduce(value, p)), p_(p) {}

  std::uint32_t value() const noexcept { return v_; }
  Prime modulus() const noexcept { return p_; }
  bool is_zero() const noexcept { return v_ == 0; }

  Fp operator+(Fp o) const;
  Fp operator-(Fp o) const;
  Fp operator*(Fp o) const;
  Fp operator/(Fp o) const;
  Fp operator-() const { return Fp(p_.value() - v_, p_); }
  Fp& operator+=(Fp o) { return *this = *this + o; }
  Fp& operator-=(Fp o) { return *this = *this - o; }
  Fp& operator*=(Fp o) { return *this = *this * o; }

  friend bool operator==(Fp a, Fp b);

 private:
  void check(Fp o) const;

  std::uint32_t v_;
  Prime p_;
};

/// Multiplicative inverse; throws ZeroInverse on 0.
Fp fp_inv(Fp a);

/// A row vector over F_p.
class FpVector {
 public:
  FpVector(std::size_t n, Prime p) : p_(p), e_(n, 0) {}
  FpVector(std::initializer_list<std::int64_t> values, Prime p);
  FpVector(std::span<const std::uint32_t> values, Prime p);

  static FpVector unit(std::size_t n, std::size_t i, Prime p);

  std::size_t size() const noexcept { return e_.size(); }
  Prime modulus() const noexcept { return p_; }

  std::uint32_t operator[](std::size_t i) const { return e_[i]; }
  Fp at(std::size_t i) const { return Fp(e_[i], p_); }
  void set(std::size_t i, std::int64_t x) { e_[i] = reduce(x, p_); }
  std::span<const std::uint32_t> raw() const noexcept { return e_; }

  bool is_zero() const noexcept;

  FpVector operator+(const FpVector& o) const;
  FpVector operator-(const FpVector& o) const;
  FpVector operator-() const;
  FpVector scaled(std::uint32_t c) const;
  FpVector& operator+=(const FpVector& o);

  friend bool operator==(const FpVector& a, const FpVector& b) {
    return a.p_ == b.p_ && a.e_ == b.e_;
  }
  friend auto operator<=>(const FpVector& a, const FpVector& b) { return a.e_ <=> b.e_; }

 private:
  void check(const FpVector& o) const;

  Prime p_;
  std::vector<std::uint32_t> e_;
};

/// Dense row-major matrix over F_p. Maps act on row vectors from the right:
/// the image of x under m is x * m, and "first a, then b" is a * b.
class FpMatrix {
 public:
  FpMatrix(std::size_t rows, std::size_t cols, Prime p);
  FpMatrix(std::size_t rows, std::size_t cols, std::initializer_list<std::int64_t> values,
           Prime p);
  FpMatrix(std::size_t rows, std::size_t cols, std::span<const std::uint32_t> values, Prime p);

  static FpMatrix identity(std::size_t n, Prime p);
  static FpMatrix scalar(std::size_t n, std::int64_t c, Prime p);
  static FpMatrix diagonal(std::initializer_list<std::int64_t> diag, Prime p);
  static FpMatrix from_rows(const std::vector<FpVector>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Prime modulus() const noexcept { return p_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  std::uint32_t operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
  Fp at(std::size_t i, std::size_t j) const { return Fp((*this)(i, j), p_); }
  void set(std::size_t i, std::size_t j, std::int64_t x) { e_[i * cols_ + j] = reduce(x, p_); }
  std::uint32_t* data() noexcept { return e_.data(); }
  std::span<const std::uint32_t> raw() const noexcept { return e_; }

  FpVector row(std::size_t i) const;
  void set_row(std::size_t i, const FpVector& v);
  FpMatrix transposed() const;
  bool is_zero() const noexcept;
  bool is_identity() const noexcept;

  FpMatrix operator+(const FpMatrix& o) const;
  FpMatrix operator-(const FpMatrix& o) const;
  FpMatrix scaled(std::uint32_t c) const;

  friend bool operator==(const FpMatrix& a, const FpMatrix& b) {
    return a.p_ == b.p_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }
  friend auto operator<=>(const FpMatrix& a, const FpMatrix& b) { return a.e_ <=> b.e_; }

 private:
  void check_same_shape(const FpMatrix& o) const;

  std::size_t rows_;
  std::size_t cols_;
  Prime p_;
  std::vector<std::uint32_t> e_;
};

/// x * m for a row vector x.
FpVector operator*(const FpVector& x, const FpMatrix& m);

FpMatrix mat_mul(const FpMatrix& a, const FpMatrix& b);
inline FpMatrix operator*(const FpMatrix& a, const FpMatrix& b) { return mat_mul(a, b); }

FpMatrix mat_pow(const FpMatrix& m, std::int64_t k);

std::ostream& operator<<(std::ostream& os, const FpVector& v);
std::ostream& operator<<(std::ostream& os, const FpMatrix& m);
std::string to_string(const FpMatrix& m);

struct FpMatrixHash {
  std::size_t operator()(const FpMatrix& m) const noexcept;
};

}  // namespace nhol
