#include "cliffcheck/rational.hpp"

#include <cctype>

namespace rat {

namespace {

bool is_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const auto bad = [&] {
    throw std::invalid_argument("not a rational literal: '" + text + "'");
  };

  if (auto slash = text.find('/'); slash != std::string::npos) {
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    if (!is_integer_token(num) || !is_integer_token(den)) bad();
    boost::multiprecision::cpp_int d(den);
    if (d == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
    return Rational(boost::multiprecision::cpp_int(num), d);
  }

  if (auto dot = text.find('.'); dot != std::string::npos) {
    std::string head = text.substr(0, dot);
    const std::string frac = text.substr(dot + 1);
    bool negative = !head.empty() && head[0] == '-';
    if (!head.empty() && (head[0] == '+' || head[0] == '-')) head = head.substr(1);
    if (head.empty()) head = "0";
    if (frac.empty() || !is_integer_token(head) || !is_integer_token(frac)) bad();
    boost::multiprecision::cpp_int scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    boost::multiprecision::cpp_int n =
        boost::multiprecision::cpp_int(head) * scale + boost::multiprecision::cpp_int(frac);
    Rational r(n, scale);
    return negative ? -r : r;
  }

  if (!is_integer_token(text)) bad();
  return Rational(boost::multiprecision::cpp_int(text));
}

std::string to_string(const Rational& r) {
  if (boost::multiprecision::denominator(r) == 1)
    return boost::multiprecision::numerator(r).str();
  return boost::multiprecision::numerator(r).str() + "/" +
         boost::multiprecision::denominator(r).str();
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace rat
