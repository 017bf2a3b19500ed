#include "trop/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace trop {

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

static bool is_integer_text(const std::string& s) {
  size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!is_integer_text(num) || !is_integer_text(den) || den[0] == '-' || den[0] == '+')
    throw std::invalid_argument("not a rational: '" + s + "'");
  if (num[0] == '+') num = num.substr(1);
  mpz_class d(den);
  if (d == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
  Rational r(mpz_class(num), d);
  r.canonicalize();
  return r;
}

std::string to_string(const std::vector<Rational>& v) {
  std::string out = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += to_string(v[i]);
  }
  return out + ")";
}

}  // namespace trop
