#include <secular/error.hpp>
#include <secular/rational.hpp>

#include <cctype>
#include <cmath>
#include <string>

namespace secular {
namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

BigInt parse_int(std::string_view s) {
  std::string text(s);
  if (!text.empty() && text[0] == '+') text.erase(0, 1);
  return BigInt(text, 10);
}

}  // namespace

Rat parse_rat(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = text.substr(0, slash);
    auto den = text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den))
      throw ParseError("malformed rational literal: '" + std::string(text) + "'");
    BigInt d = parse_int(den);
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    Rat r(parse_int(num), d);
    r.canonicalize();
    return r;
  }
  if (is_integer_literal(text)) return Rat(parse_int(text));

  // scientific: mantissa e exponent
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos && e > 0) {
    auto exponent = text.substr(e + 1);
    if (!is_integer_literal(exponent) || exponent.size() > 6)
      throw ParseError("malformed rational literal: '" + std::string(text) + "'");
    Rat mantissa = parse_rat(text.substr(0, e));
    const long k = std::stol(std::string(exponent));
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(k < 0 ? -k : k));
    Rat r = k < 0 ? Rat(mantissa / scale) : Rat(mantissa * scale);
    r.canonicalize();
    return r;
  }

  // decimal: [-]digits.digits
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    auto whole = text.substr(0, dot);
    auto frac = text.substr(dot + 1);
    bool negative = !whole.empty() && whole[0] == '-';
    if (!whole.empty() && (whole[0] == '-' || whole[0] == '+')) whole.remove_prefix(1);
    bool ok = !(whole.empty() && frac.empty());
    for (char c : whole) ok = ok && std::isdigit(static_cast<unsigned char>(c));
    for (char c : frac) ok = ok && std::isdigit(static_cast<unsigned char>(c));
    if (ok) {
      std::string digits = std::string(whole) + std::string(frac);
      BigInt den;
      mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
      Rat r(BigInt(digits.empty() ? "0" : digits, 10), den);
      r.canonicalize();
      return negative ? Rat(-r) : r;
    }
  }
  throw ParseError("malformed rational literal: '" + std::string(text) + "'");
}

std::string format_rat(const Rat& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rat rat_from_double(double value) {
  if (!std::isfinite(value)) throw PreconditionError("non-finite value has no rational form");
  return Rat(value);
}

Rat pow(const Rat& base, unsigned exponent) {
  Rat result(1);
  for (unsigned i = 0; i < exponent; ++i) result *= base;
  return result;
}

}  // namespace secular
