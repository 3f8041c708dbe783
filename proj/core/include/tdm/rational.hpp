#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace tdm {

// GMP-backed; mpq keeps values canonical (lowest terms, positive denominator).
using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

using RVec = std::vector<Rational>;
using IVec = std::vector<std::int64_t>;

inline Integer num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer den(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integral(const Rational& q) { return den(q) == 1; }

Integer floor_int(const Rational& q);
Integer ceil_int(const Rational& q);
Rational floor_q(const Rational& q);
Rational ceil_q(const Rational& q);

// Throws std::overflow_error when the value does not fit.
std::int64_t to_i64(const Integer& z);
std::int64_t to_i64(const Rational& q);

// "p/q", always with an explicit denominator.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

// Accepts "p", "p/q", "-p/q" and decimal "1.25".
Rational parse_rational(std::string_view s);

RVec to_rvec(const IVec& v);

Rational dot(const RVec& a, const RVec& b);

}  // namespace tdm
