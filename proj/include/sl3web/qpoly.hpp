#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <string>

namespace sl3web {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Laurent polynomial in s = q^{1/2} with arbitrary-precision integer
// coefficients.  Exponents are powers of s, so q^k sits in degree 2k.
// Closed diagram invariants always land in the even (integral q-power)
// part; callers assert that via even_q_powers().
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(Int constant);
  explicit LaurentPoly(long constant) : LaurentPoly(Int(constant)) {}

  static LaurentPoly zero() { return LaurentPoly(); }
  static LaurentPoly one() { return LaurentPoly(Int(1)); }
  static LaurentPoly s(int exponent);  // s^exponent
  static LaurentPoly q(int exponent);  // q^exponent = s^{2*exponent}

  bool is_zero() const { return terms_.empty(); }
  // s-exponent -> coefficient, no zero entries.
  const std::map<int, Int>& terms() const { return terms_; }
  Int coefficient_s(int s_exponent) const;
  Int coefficient_q(int q_exponent) const { return coefficient_s(2 * q_exponent); }
  bool even_q_powers() const;
  bool nonnegative() const;  // all coefficients >= 0

  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const Int& scalar);

  LaurentPoly pow(unsigned exponent) const;
  LaurentPoly shifted_q(int q_exponent) const;  // this * q^{q_exponent}
  LaurentPoly shifted_s(int s_exponent) const;

  bool operator==(const LaurentPoly& rhs) const = default;

  // Human rendering: integral powers as "q^k", half powers as "q^(k/2)",
  // terms in decreasing degree, e.g. "q^2 + 1 + q^-2".
  std::string to_string() const;

 private:
  std::map<int, Int> terms_;

  void add_term(int s_exponent, const Int& coefficient);
  friend LaurentPoly bar_involution(const LaurentPoly&);
};

LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs);
LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs);
LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs);
LaurentPoly operator*(const Int& scalar, LaurentPoly p);

// Quantum integer [n] = q^{n-1} + q^{n-3} + ... + q^{1-n}.  Rejects n < 1.
LaurentPoly quantum_integer(int n);

// Sum of coefficients; a ring homomorphism onto the integers.
Int eval_at_one(const LaurentPoly& p);

// The bar involution q -> q^{-1} (negates every s-exponent).
LaurentPoly bar_involution(const LaurentPoly& p);

}  // namespace sl3web
