#include "eqcoh/scalar.hpp"

#include <cctype>

namespace eqcoh {

std::string to_string(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

std::string to_string(const Scalar& s) {
  if (s.is_zero()) return "0";
  std::string out;
  if (s.re != 0) out = to_string(s.re);
  if (s.im != 0) {
    std::string im = to_string(s.im);
    if (!out.empty() && im[0] != '-') out += "+";
    out += im + "*I";
  }
  return out;
}

namespace {

// Splits "a+b*I" / "a-b*I" at the top-level sign separating the two parts.
// A sign at position 0 or right after '/' belongs to the number itself.
size_t find_split(const std::string& t) {
  for (size_t p = 1; p < t.size(); ++p) {
    if ((t[p] == '+' || t[p] == '-') && t[p - 1] != '/') return p;
  }
  return std::string::npos;
}

Rational parse_plain_rational(const std::string& t) {
  if (t.empty()) throw std::invalid_argument("empty rational literal");
  try {
    size_t slash = t.find('/');
    if (slash == std::string::npos) return Rational(Int(t));
    Int num(t.substr(0, slash));
    Int den(t.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("bad rational literal: " + t);
  }
}

// One part: either a rational or "<rational>*I" / "I" / "-I".
Scalar parse_part(const std::string& t) {
  if (t == "I") return Scalar::i();
  if (t == "-I" || t == "+I") return t[0] == '-' ? -Scalar::i() : Scalar::i();
  size_t star = t.rfind("*I");
  if (star != std::string::npos && star + 2 == t.size())
    return Scalar(Rational(0), parse_plain_rational(t.substr(0, star)));
  return Scalar(parse_plain_rational(t));
}

}  // namespace

Rational parse_rational(const std::string& text) {
  return parse_plain_rational(text);
}

Scalar parse_scalar(const std::string& text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.empty()) throw std::invalid_argument("empty scalar literal");
  size_t split = find_split(t);
  if (split == std::string::npos) return parse_part(t);
  Scalar a = parse_part(t.substr(0, split));
  std::string rest = t.substr(split);
  if (rest[0] == '+') rest = rest.substr(1);
  Scalar b = parse_part(rest);
  if ((a.im != 0) == (b.im != 0))
    throw std::invalid_argument("bad scalar literal: " + text);
  return a + b;
}

}  // namespace eqcoh
