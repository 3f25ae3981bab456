#pragma once

// The class-two groups G_pi built from a linear map pi : V -> Lambda^2 V.
//
// G_pi = < x_1..x_n : [[x_i,x_j],x_k] = 1, x_i^p = prod_{j<k} [x_j,x_k]^{pi_{i,(j,k)}} >
// has order p^(n + C(n,2)). An element is stored in normal form
//   x_1^{v_1} ... x_n^{v_n} * w,   v in F_p^n, w in Lambda^2 V = G',
// with G' written additively and [x_j, x_k] identified with v_j ^ v_k.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <string_view>

#include "nhol/check.hpp"
#include "nhol/fp.hpp"
#include "nhol/wedge.hpp"

namespace nhol {

enum class Label { a, b, c, d, e, zero3, zero4, n2, custom };

std::string_view label_name(Label label);
std::optional<Label> parse_label(std::string_view name);
const std::vector<Label>& catalog_labels();  // every label except custom

/// Smallest prime for which the catalog result is asserted (5 for a, c, e).
std::uint32_t hypothesis_min_prime(Label label);

/// Sign of the commutator cross term in the multiplication cocycle. Only the
/// standard sign realizes the presentation; `flipped` exists so the
/// presentation checker can be shown to catch a sign error.
enum class CocycleSign { standard, flipped };

struct PiSpec {
  Prime p;
  std::size_t n;
  FpMatrix pi;  // n x C(n,2); row i is the image of v_i
  Label label = Label::custom;
  CocycleSign cocycle = CocycleSign::standard;

  PiSpec(Prime p_, FpMatrix pi_, Label label_ = Label::custom);

  std::size_t wedge_dim() const noexcept { return pi.cols(); }
  std::size_t group_log_order() const noexcept { return n + pi.cols(); }
};

/// The built-in pi for a label. Throws UnknownLabel for Label::custom.
PiSpec catalog(Label label, Prime p);

/// Parses the custom format: "p n" on the first line, then n lines with
/// C(n,2) integers each (columns in wedge-basis order). Throws Parse.
PiSpec parse_pi_spec(std::string_view text);
std::string format_pi_spec(const PiSpec& spec);

struct GElement {
  FpVector v;  // image in G/G' = V
  FpVector w;  // central part in G' = Lambda^2 V

  friend bool operator==(const GElement&, const GElement&) = default;
};

std::ostream& operator<<(std::ostream& os, const GElement& g);

GElement g_identity(const PiSpec& spec);
GElement g_generator(const PiSpec& spec, std::size_t i);
GElement g_central(const PiSpec& spec, const FpVector& w);
/// Uniformly random element.
GElement g_random(const PiSpec& spec, std::mt19937_64& rng);

/// Normal-form product:
///   (xy).v = x.v + y.v
///   (xy).w = x.w + y.w - sum_{j<k} x.v_k y.v_j e_(j,k) + sum_i carry_i pi_i
/// where carry_i = 1 iff x.v_i + y.v_i >= p as integers.
GElement g_mul(const PiSpec& spec, const GElement& x, const GElement& y);
GElement g_inv(const PiSpec& spec, const GElement& x);
/// Any integer exponent; negative means a power of the inverse.
GElement g_pow(const PiSpec& spec, const GElement& x, std::int64_t k);
/// [x, y] = x^-1 y^-1 x y.
GElement g_comm(const PiSpec& spec, const GElement& x, const GElement& y);

/// Checks the defining relations on generators (nested commutators trivial,
/// p-th powers equal to pi, commutators central and identified with the
/// wedge basis, G' of exponent p).
CheckReport verify_presentation(const PiSpec& spec);

/// The pi obtained by taking the rows of m as the new basis of V:
/// m * pi * induced_hat(m)^-1.
FpMatrix transport_pi(const FpMatrix& pi, const FpMatrix& m);

struct RankOneForm {
  Label label;
  FpMatrix basis_change;  // rows = new basis in old coordinates
};

/// Brings a rank-one pi with n in {2,3,4} to its catalog form. Throws
/// NotRankOne otherwise.
RankOneForm canonical_rank_one(const PiSpec& spec);

}  // namespace nhol
