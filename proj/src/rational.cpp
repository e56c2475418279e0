#include "qcn/rational.hpp"

#include <cctype>

#include "qcn/error.hpp"

namespace qcn {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

BigInt pow10(int n) {
  BigInt p = 1;
  for (int i = 0; i < n; ++i) p *= 10;
  return p;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  Rational value;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = s.substr(0, slash);
    auto den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) throw Error("malformed rational '" + std::string(text) + "'");
    BigInt d{std::string(den)};
    if (d == 0) throw Error("zero denominator in '" + std::string(text) + "'");
    value = Rational(BigInt{std::string(num)}, d);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    auto whole = s.substr(0, dot);
    auto frac = s.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)) ||
        (whole.empty() && frac.empty()))
      throw Error("malformed rational '" + std::string(text) + "'");
    BigInt w = whole.empty() ? BigInt(0) : BigInt(std::string(whole));
    BigInt f = frac.empty() ? BigInt(0) : BigInt(std::string(frac));
    BigInt scale = pow10(static_cast<int>(frac.size()));
    value = Rational(w * scale + f, scale);
  } else {
    if (!all_digits(s)) throw Error("malformed rational '" + std::string(text) + "'");
    value = Rational(BigInt(std::string(s)));
  }
  return negative ? Rational(-value) : value;
}

std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    out.push_back(parse_rational(piece));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

Rational round_half_even(const Rational& value, int digits) {
  BigInt scale = pow10(digits);
  Rational scaled = Rational(value * scale);
  BigInt num = boost::multiprecision::numerator(scaled);
  BigInt den = boost::multiprecision::denominator(scaled);
  // floor division for possibly negative numerators
  BigInt q = num / den;
  if (num < 0 && q * den != num) q -= 1;
  Rational frac = scaled - Rational(q);
  Rational half(1, 2);
  if (frac > half || (frac == half && q % 2 != 0)) q += 1;
  return Rational(q, scale);
}

std::string to_decimal(const Rational& value, int digits) {
  Rational r = round_half_even(value, digits);
  BigInt scaled = boost::multiprecision::numerator(Rational(r * pow10(digits)));
  bool negative = scaled < 0;
  if (negative) scaled = -scaled;
  std::string s = scaled.str();
  if (digits > 0) {
    if (static_cast<int>(s.size()) <= digits) s.insert(0, digits + 1 - s.size(), '0');
    s.insert(s.size() - digits, ".");
  }
  return negative ? "-" + s : s;
}

std::string to_string(const Rational& value) { return value.str(); }

double to_double(const Rational& value) { return value.convert_to<double>(); }

BigInt denominator_lcm(std::span<const Rational> values) {
  BigInt l = 1;
  for (const auto& v : values) l = boost::multiprecision::lcm(l, BigInt(boost::multiprecision::denominator(v)));
  return l;
}

}  // namespace qcn
