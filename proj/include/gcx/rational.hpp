#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <string>

namespace gcx {

// All arithmetic in this project is exact. There is no floating-point
// code path anywhere in the verification pipeline.
using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

inline std::string to_string(const Rational& q) { return q.str(); }

inline Rational parse_rational(const std::string& s) { return Rational(s); }

// Sign of a permutation given as a vector of distinct values.
template <typename T>
int permutation_sign(const std::vector<T>& p) {
  int sign = 1;
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) sign = -sign;
  return sign;
}

}  // namespace gcx
