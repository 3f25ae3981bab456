#include "nhol/fp.hpp"

#include <ostream>
#include <sstream>

namespace nhol {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroInverse: return "ZeroInverse";
    case ErrorCode::DimMismatch: return "DimMismatch";
    case ErrorCode::ModulusMismatch: return "ModulusMismatch";
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::UnknownLabel: return "UnknownLabel";
    case ErrorCode::SpecMismatch: return "SpecMismatch";
    case ErrorCode::NotRankOne: return "NotRankOne";
    case ErrorCode::EmptyGenerators: return "EmptyGenerators";
    case ErrorCode::LabelMismatch: return "LabelMismatch";
    case ErrorCode::NotInB: return "NotInB";
    case ErrorCode::NotInCommutant: return "NotInCommutant";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::UnknownAdmissibility: return "UnknownAdmissibility";
    case ErrorCode::NotDeltaSigma: return "NotDeltaSigma";
    case ErrorCode::AssumptionFailed: return "AssumptionFailed";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::Parse: return "Parse";
  }
  return "Unknown";
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Prime::Prime(std::uint32_t p) : p_(p) {
  if (p < 3 || !is_prime(p))
    throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not an odd prime");
  // Products of two residues must fit in 64 bits with headroom.
  if (p > (1u << 30)) throw Error(ErrorCode::TooLarge, "modulus too large");
}

std::uint32_t pow_mod(std::uint32_t a, std::uint64_t e, std::uint32_t p) {
  std::uint64_t r = 1 % p, b = a % p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  a %= p;
  if (a == 0) throw Error(ErrorCode::ZeroInverse, "0 has no inverse mod " + std::to_string(p));
  std::int64_t t = 0, nt = 1, r = p, nr = a;
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::int64_t tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  return reduce(t, p);
}

std::uint32_t primitive_root(Prime p) {
  const std::uint32_t n = p.value() - 1;
  std::vector<std::uint32_t> factors;
  std::uint32_t m = n;
  for (std::uint32_t d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      factors.push_back(d);
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) factors.push_back(m);
  for (std::uint32_t g = 2; g < p.value(); ++g) {
    bool ok = true;
    for (auto q : factors)
      if (pow_mod(g, n / q, p) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  return 1;  // unreachable for odd primes
}

// ---- Fp ------------------------------------------------------------------

void Fp::check(Fp o) const {
  if (!(p_ == o.p_))
    throw Error(ErrorCode::ModulusMismatch, "mod " + std::to_string(p_.value()) + " vs mod " +
                                                std::to_string(o.p_.value()));
}

Fp Fp::operator+(Fp o) const {
  check(o);
  return Fp(static_cast<std::int64_t>(v_) + o.v_, p_);
}

Fp Fp::operator-(Fp o) const {
  check(o);
  return Fp(static_cast<std::int64_t>(v_) - o.v_, p_);
}

Fp Fp::operator*(Fp o) const {
  check(o);
  return Fp(static_cast<std::int64_t>(static_cast<std::uint64_t>(v_) * o.v_ % p_.value()), p_);
}

Fp Fp::operator/(Fp o) const { return *this * fp_inv(o); }

bool operator==(Fp a, Fp b) {
  a.check(b);
  return a.v_ == b.v_;
}

Fp fp_inv(Fp a) { return Fp(inv_mod(a.value(), a.modulus()), a.modulus()); }

// ---- FpVector --------------------------------------------------------------

FpVector::FpVector(std::initializer_list<std::int64_t> values, Prime p) : p_(p) {
  e_.reserve(values.size());
  for (auto x : values) e_.push_back(reduce(x, p));
}

FpVector::FpVector(std::span<const std::uint32_t> values, Prime p) : p_(p) {
  e_.reserve(values.size());
  for (auto x : values) e_.push_back(x % p.value());
}

FpVector FpVector::unit(std::size_t n, std::size_t i, Prime p) {
  FpVector v(n, p);
  v.e_.at(i) = 1;
  return v;
}

bool FpVector::is_zero() const noexcept {
  for (auto x : e_)
    if (x) return false;
  return true;
}

void FpVector::check(const FpVector& o) const {
  if (!(p_ == o.p_)) throw Error(ErrorCode::ModulusMismatch, "vector moduli differ");
  if (e_.size() != o.e_.size())
    throw Error(ErrorCode::DimMismatch, "vector lengths " + std::to_string(e_.size()) + " and " +
                                            std::to_string(o.e_.size()));
}

FpVector FpVector::operator+(const FpVector& o) const {
  FpVector r = *this;
  r += o;
  return r;
}

FpVector& FpVector::operator+=(const FpVector& o) {
  check(o);
  const std::uint32_t p = p_.value();
  for (std::size_t i = 0; i < e_.size(); ++i) {
    std::uint32_t s = e_[i] + o.e_[i];
    e_[i] = s >= p ? s - p : s;
  }
  return *this;
}

FpVector FpVector::operator-() const {
  FpVector r = *this;
  for (auto& x : r.e_) x = x ? p_.value() - x : 0;
  return r;
}

FpVector FpVector::operator-(const FpVector& o) const { return *this + (-o); }

FpVector FpVector::scaled(std::uint32_t c) const {
  FpVector r = *this;
  const std::uint64_t cc = c % p_.value();
  for (auto& x : r.e_) x = static_cast<std::uint32_t>(x * cc % p_.value());
  return r;
}

// ---- FpMatrix --------------------------------------------------------------

FpMatrix::FpMatrix(std::size_t rows, std::size_t cols, Prime p)
    : rows_(rows), cols_(cols), p_(p), e_(rows * cols, 0) {}

FpMatrix::FpMatrix(std::size_t rows, std::size_t cols, std::initializer_list<std::int64_t> values,
                   Prime p)
    : rows_(rows), cols_(cols), p_(p) {
  if (values.size() != rows * cols)
    throw Error(ErrorCode::DimMismatch, "matrix literal has wrong number of entries");
  e_.reserve(values.size());
  for (auto x : values) e_.push_back(reduce(x, p));
}

FpMatrix::FpMatrix(std::size_t rows, std::size_t cols, std::span<const std::uint32_t> values,
                   Prime p)
    : rows_(rows), cols_(cols), p_(p) {
  if (values.size() != rows * cols)
    throw Error(ErrorCode::DimMismatch, "matrix data has wrong number of entries");
  e_.reserve(values.size());
  for (auto x : values) e_.push_back(x % p.value());
}

FpMatrix FpMatrix::identity(std::size_t n, Prime p) { return scalar(n, 1, p); }

FpMatrix FpMatrix::scalar(std::size_t n, std::int64_t c, Prime p) {
  FpMatrix m(n, n, p);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, c);
  return m;
}

FpMatrix FpMatrix::diagonal(std::initializer_list<std::int64_t> diag, Prime p) {
  FpMatrix m(diag.size(), diag.size(), p);
  std::size_t i = 0;
  for (auto x : diag) {
    m.set(i, i, x);
    ++i;
  }
  return m;
}

FpMatrix FpMatrix::from_rows(const std::vector<FpVector>& rows) {
  if (rows.empty()) throw Error(ErrorCode::DimMismatch, "no rows");
  FpMatrix m(rows.size(), rows.front().size(), rows.front().modulus());
  for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
  return m;
}

FpVector FpMatrix::row(std::size_t i) const {
  return FpVector(std::span<const std::uint32_t>(e_.data() + i * cols_, cols_), p_);
}

void FpMatrix::set_row(std::size_t i, const FpVector& v) {
  if (v.size() != cols_) throw Error(ErrorCode::DimMismatch, "row length");
  if (!(v.modulus() == p_)) throw Error(ErrorCode::ModulusMismatch, "row modulus");
  for (std::size_t j = 0; j < cols_; ++j) e_[i * cols_ + j] = v[j];
}

FpMatrix FpMatrix::transposed() const {
  FpMatrix t(cols_, rows_, p_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.e_[j * rows_ + i] = e_[i * cols_ + j];
  return t;
}

bool FpMatrix::is_zero() const noexcept {
  for (auto x : e_)
    if (x) return false;
  return true;
}

bool FpMatrix::is_identity() const noexcept {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (e_[i * cols_ + j] != (i == j ? 1u : 0u)) return false;
  return true;
}

void FpMatrix::check_same_shape(const FpMatrix& o) const {
  if (!(p_ == o.p_)) throw Error(ErrorCode::ModulusMismatch, "matrix moduli differ");
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw Error(ErrorCode::DimMismatch, "matrix shapes differ");
}

FpMatrix FpMatrix::operator+(const FpMatrix& o) const {
  check_same_shape(o);
  FpMatrix r = *this;
  for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = (e_[k] + o.e_[k]) % p_.value();
  return r;
}

FpMatrix FpMatrix::operator-(const FpMatrix& o) const {
  check_same_shape(o);
  FpMatrix r = *this;
  for (std::size_t k = 0; k < e_.size(); ++k)
    r.e_[k] = (e_[k] + p_.value() - o.e_[k]) % p_.value();
  return r;
}

FpMatrix FpMatrix::scaled(std::uint32_t c) const {
  FpMatrix r = *this;
  const std::uint64_t cc = c % p_.value();
  for (auto& x : r.e_) x = static_cast<std::uint32_t>(x * cc % p_.value());
  return r;
}

FpVector operator*(const FpVector& x, const FpMatrix& m) {
  if (!(x.modulus() == m.modulus())) throw Error(ErrorCode::ModulusMismatch, "vector * matrix");
  if (x.size() != m.rows())
    throw Error(ErrorCode::DimMismatch, "vector length " + std::to_string(x.size()) +
                                            " vs matrix rows " + std::to_string(m.rows()));
  const std::uint64_t p = m.modulus().value();
  FpVector r(m.cols(), m.modulus());
  for (std::size_t j = 0; j < m.cols(); ++j) {
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < m.rows(); ++i) acc += static_cast<std::uint64_t>(x[i]) * m(i, j) % p;
    r.set(j, static_cast<std::int64_t>(acc % p));
  }
  return r;
}

FpMatrix mat_mul(const FpMatrix& a, const FpMatrix& b) {
  if (!(a.modulus() == b.modulus())) throw Error(ErrorCode::ModulusMismatch, "mat_mul");
  if (a.cols() != b.rows())
    throw Error(ErrorCode::DimMismatch, std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                                            " * " + std::to_string(b.rows()) + "x" +
                                            std::to_string(b.cols()));
  const std::uint64_t p = a.modulus().value();
  FpMatrix r(a.rows(), b.cols(), a.modulus());
  std::uint32_t* out = r.data();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      std::uint64_t acc = 0;
      for (std::size_t k = 0; k < a.cols(); ++k) acc += static_cast<std::uint64_t>(a(i, k)) * b(k, j);
      out[i * b.cols() + j] = static_cast<std::uint32_t>(acc % p);
    }
  }
  return r;
}

std::ostream& operator<<(std::ostream& os, const FpVector& v) {
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os << ')';
}

std::ostream& operator<<(std::ostream& os, const FpMatrix& m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ";" : "");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j);
  }
  return os << ']';
}

std::string to_string(const FpMatrix& m) {
  std::ostringstream os;
  os << m;
  return os.str();
}

std::size_t FpMatrixHash::operator()(const FpMatrix& m) const noexcept {
  std::size_t h = m.rows() * 31 + m.cols();
  for (auto x : m.raw()) h = h * 1000003u ^ x;
  return h;
}

}  // namespace nhol
