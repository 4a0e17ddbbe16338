#pragma once

// Exact truth values in [0,1] and the connectives over them: the
// Lukasiewicz triple (negation, bounded-difference conjunction,
// bounded-sum disjunction), the min/max pair, and classical XOR.

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "lukq/error.hpp"

namespace lukq {

using Rational = boost::multiprecision::cpp_rational;

/// A truth value: an exact rational in [0,1].
///
/// Construction rejects anything outside the unit interval with
/// OutOfRange, so every TruthValue in the program is admissible and the
/// connectives below never need to re-check their operands.
class TruthValue {
 public:
  /// The value 0 (false).
  TruthValue() = default;

  explicit TruthValue(Rational value);
  TruthValue(std::int64_t numerator, std::int64_t denominator);

  static TruthValue zero() { return TruthValue(); }
  static TruthValue one();

  /// Parses "n/d", an integer, or a decimal with at most nine fractional
  /// digits ("0.25"). The conversion is exact.
  static TruthValue parse(std::string_view text);

  /// Exact conversion of a double (every finite double is a dyadic
  /// rational). Values within `tolerance` outside [0,1] are clamped.
  static TruthValue from_double(double value, double tolerance = 0.0);

  const Rational& value() const { return value_; }
  double to_double() const;
  bool is_zero() const { return value_ == 0; }
  bool is_one() const { return value_ == 1; }
  bool is_crisp() const { return is_zero() || is_one(); }

  /// "0", "1", or a reduced "n/d".
  std::string str() const;

  friend bool operator==(const TruthValue&, const TruthValue&) = default;
  friend std::strong_ordering operator<=>(const TruthValue& a,
                                          const TruthValue& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (a.value_ > b.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  Rational value_{0};
};

TruthValue luk_neg(const TruthValue& v);
/// max(v1 + v2 - 1, 0)
TruthValue luk_conj(const TruthValue& v1, const TruthValue& v2);
/// min(v1 + v2, 1)
TruthValue luk_disj(const TruthValue& v1, const TruthValue& v2);

TruthValue min_conj(const TruthValue& v1, const TruthValue& v2);
TruthValue max_disj(const TruthValue& v1, const TruthValue& v2);

/// Classical exclusive or. Throws NonCrispOperand unless both operands
/// are exactly 0 or 1; no many-valued extension is defined.
TruthValue xor_crisp(const TruthValue& v1, const TruthValue& v2);

/// Left fold of xor_crisp; the empty fold is 0. The result is 1 iff an
/// odd number of inputs are 1.
TruthValue xor_fold(std::span<const TruthValue> values);

/// Membership of a man with `hair_count` hairs in the set of bald men:
/// 1 up to 100 hairs, 0 from 1000 on, linear (1000 - N)/900 in between.
TruthValue bald_membership(std::uint64_t hair_count);

}  // namespace lukq
