#include "lukq/truth_value.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

namespace lukq {

namespace {

using boost::multiprecision::cpp_int;

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isdigit(c) != 0;
  });
}

cpp_int parse_integer(std::string_view digits) {
  return cpp_int(std::string(digits));
}

[[noreturn]] void bad_literal(std::string_view text, const std::string& why) {
  throw ValidationError("invalid truth value \"" + std::string(text) +
                        "\": " + why);
}

}  // namespace

TruthValue::TruthValue(Rational value) : value_(std::move(value)) {
  if (value_ < 0 || value_ > 1) {
    throw OutOfRange("truth value " + value_.str() + " is outside [0,1]");
  }
}

TruthValue::TruthValue(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw ValidationError("zero denominator");
  *this = TruthValue(Rational(numerator, denominator));
}

TruthValue TruthValue::one() { return TruthValue(Rational(1)); }

TruthValue TruthValue::parse(std::string_view text) {
  if (text.empty()) bad_literal(text, "empty literal");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = text.substr(0, slash);
    auto den = text.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
      bad_literal(text, "expected n/d with non-negative integers");
    }
    cpp_int d = parse_integer(den);
    if (d == 0) bad_literal(text, "zero denominator");
    return TruthValue(Rational(parse_integer(num), d));
  }

  auto dot = text.find('.');
  auto whole = text.substr(0, dot);
  if (dot == std::string_view::npos) {
    if (!all_digits(whole)) bad_literal(text, "not a number");
    return TruthValue(Rational(parse_integer(whole)));
  }
  auto frac = text.substr(dot + 1);
  if (whole.empty()) whole = "0";
  if (!all_digits(whole) || !all_digits(frac)) {
    bad_literal(text, "not a decimal");
  }
  if (frac.size() > 9) bad_literal(text, "more than 9 fractional digits");
  cpp_int scale = boost::multiprecision::pow(cpp_int(10),
                                             static_cast<unsigned>(frac.size()));
  return TruthValue(
      Rational(parse_integer(whole) * scale + parse_integer(frac), scale));
}

TruthValue TruthValue::from_double(double value, double tolerance) {
  if (!std::isfinite(value)) {
    throw OutOfRange("truth value is not finite");
  }
  if (value < 0.0 && value >= -tolerance) value = 0.0;
  if (value > 1.0 && value <= 1.0 + tolerance) value = 1.0;
  return TruthValue(Rational(value));
}

double TruthValue::to_double() const { return value_.convert_to<double>(); }

std::string TruthValue::str() const { return value_.str(); }

TruthValue luk_neg(const TruthValue& v) {
  return TruthValue(Rational(1) - v.value());
}

TruthValue luk_conj(const TruthValue& v1, const TruthValue& v2) {
  Rational s = v1.value() + v2.value() - 1;
  return TruthValue(s > 0 ? s : Rational(0));
}

TruthValue luk_disj(const TruthValue& v1, const TruthValue& v2) {
  Rational s = v1.value() + v2.value();
  return TruthValue(s < 1 ? s : Rational(1));
}

TruthValue min_conj(const TruthValue& v1, const TruthValue& v2) {
  return std::min(v1, v2);
}

TruthValue max_disj(const TruthValue& v1, const TruthValue& v2) {
  return std::max(v1, v2);
}

TruthValue xor_crisp(const TruthValue& v1, const TruthValue& v2) {
  for (const auto* v : {&v1, &v2}) {
    if (!v->is_crisp()) {
      throw NonCrispOperand("XOR applied to non-crisp truth value " +
                            v->str());
    }
  }
  return v1.is_one() != v2.is_one() ? TruthValue::one() : TruthValue::zero();
}

TruthValue xor_fold(std::span<const TruthValue> values) {
  TruthValue acc;
  for (const auto& v : values) acc = xor_crisp(acc, v);
  return acc;
}

TruthValue bald_membership(std::uint64_t hair_count) {
  if (hair_count <= 100) return TruthValue::one();
  if (hair_count >= 1000) return TruthValue::zero();
  return TruthValue(Rational(1000 - static_cast<std::int64_t>(hair_count), 900));
}

}  // namespace lukq
