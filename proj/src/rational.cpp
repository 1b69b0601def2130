#include "aoc/rational.hpp"


#include "aoc/error.hpp"

namespace aoc {

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }

}  // namespace

Rational parse_rational(std::string_view text) {
  std::size_t pos = 0;
  if (pos < text.size() && text[pos] == '-') ++pos;
  const std::size_t num_begin = pos;
  while (pos < text.size() && is_digit(text[pos])) ++pos;
  if (pos == num_begin) throw ParseError(pos, "expected digit");
  const std::string numerator(text.substr(0, pos));

  std::string denominator = "1";
  if (pos < text.size()) {
    if (text[pos] != '/') throw ParseError(pos, "unexpected character");
    ++pos;
    if (pos >= text.size()) throw ParseError(pos, "expected denominator");
    if (text[pos] == '0') throw ParseError(pos, "denominator must start with 1-9");
    if (!is_digit(text[pos])) throw ParseError(pos, "expected digit");
    const std::size_t den_begin = pos;
    while (pos < text.size() && is_digit(text[pos])) ++pos;
    if (pos != text.size()) throw ParseError(pos, "unexpected character");
    denominator = std::string(text.substr(den_begin));
  }

  Rational value(mpz_class(numerator, 10), mpz_class(denominator, 10));
  value.canonicalize();
  return value;
}

std::string format_rational(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rational make_rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
  Rational value(mpz_class(std::to_string(num), 10), mpz_class(std::to_string(den), 10));
  value.canonicalize();
  return value;
}

Rational power(const Rational& base, std::int64_t exponent) {
  if (exponent < 0 && base == 0) {
    throw Error(ErrorCode::InvalidArgument, "zero base with negative exponent");
  }
  const auto magnitude = static_cast<unsigned long>(exponent < 0 ? -exponent : exponent);
  mpz_class num;
  mpz_class den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), magnitude);
  mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), magnitude);
  Rational result = exponent < 0 ? Rational(den, num) : Rational(num, den);
  result.canonicalize();
  return result;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw Error(ErrorCode::Overflow, "integer overflow in addition");
  return out;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_sub_overflow(a, b, &out)) throw Error(ErrorCode::Overflow, "integer overflow in subtraction");
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw Error(ErrorCode::Overflow, "integer overflow in multiplication");
  return out;
}

}  // namespace aoc
