#include "tdm/rational.hpp"

#include <stdexcept>

namespace tdm {

Integer floor_int(const Rational& q) {
  Integer n = num(q), d = den(q);
  Integer r = n / d;  // truncates toward zero
  if (n < 0 && r * d != n) r -= 1;
  return r;
}

Integer ceil_int(const Rational& q) {
  Integer n = num(q), d = den(q);
  Integer r = n / d;
  if (n > 0 && r * d != n) r += 1;
  return r;
}

Rational floor_q(const Rational& q) { return Rational(floor_int(q)); }
Rational ceil_q(const Rational& q) { return Rational(ceil_int(q)); }

std::int64_t to_i64(const Integer& z) {
  if (z > Integer(INT64_MAX) || z < Integer(INT64_MIN))
    throw std::overflow_error("integer does not fit in 64 bits");
  return z.convert_to<std::int64_t>();
}

std::int64_t to_i64(const Rational& q) {
  if (!is_integral(q)) throw std::domain_error("value is not integral: " + to_string(q));
  return to_i64(num(q));
}

std::string to_string(const Integer& z) { return z.str(); }

std::string to_string(const Rational& q) {
  return num(q).str() + "/" + den(q).str();
}

Rational parse_rational(std::string_view s) {
  std::string t(s);
  if (t.empty()) throw std::invalid_argument("empty rational");
  auto valid_int = [](const std::string& x) {
    std::size_t i = (!x.empty() && (x[0] == '-' || x[0] == '+')) ? 1 : 0;
    if (i == x.size()) return false;
    for (; i < x.size(); ++i)
      if (x[i] < '0' || x[i] > '9') return false;
    return true;
  };
  auto strip_plus = [](std::string x) { return (!x.empty() && x[0] == '+') ? x.substr(1) : x; };
  if (auto slash = t.find('/'); slash != std::string::npos) {
    std::string p = t.substr(0, slash), d = t.substr(slash + 1);
    if (!valid_int(p) || !valid_int(d)) throw std::invalid_argument("bad rational: " + t);
    Integer den_v(strip_plus(d));
    if (den_v == 0) throw std::invalid_argument("zero denominator: " + t);
    return Rational(Integer(strip_plus(p)), den_v);
  }
  if (auto dot_pos = t.find('.'); dot_pos != std::string::npos) {
    std::string ip = t.substr(0, dot_pos), fp = t.substr(dot_pos + 1);
    bool neg = !ip.empty() && ip[0] == '-';
    std::string ip_digits = (neg || (!ip.empty() && ip[0] == '+')) ? ip.substr(1) : ip;
    if (ip_digits.empty()) ip_digits = "0";
    if (!valid_int(ip_digits) || (!fp.empty() && !valid_int(fp)) || fp.find('-') != std::string::npos)
      throw std::invalid_argument("bad rational: " + t);
    Integer scale = 1;
    for (std::size_t i = 0; i < fp.size(); ++i) scale *= 10;
    Integer whole(ip_digits + fp);
    Rational r(whole, scale);
    return neg ? Rational(-r) : r;
  }
  if (!valid_int(t)) throw std::invalid_argument("bad rational: " + t);
  return Rational(Integer(strip_plus(t)));
}

RVec to_rvec(const IVec& v) {
  RVec out;
  out.reserve(v.size());
  for (auto x : v) out.emplace_back(x);
  return out;
}

Rational dot(const RVec& a, const RVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
  return s;
}

}  // namespace tdm
