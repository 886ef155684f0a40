#include "qfe/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace qfe {

namespace {

bool is_decimal(std::string_view s, bool allow_sign) {
  if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+'))
    s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!is_decimal(num, true) || !is_decimal(den, false))
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  std::string n(num);
  if (n.front() == '+') n.erase(0, 1);
  Integer d(std::string(den), 10);
  if (d == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  Rational r(Integer(n, 10), d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

}  // namespace qfe
