#ifndef VBRAID_LAURENT_HPP
#define VBRAID_LAURENT_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>

#include "core/error.hpp"

namespace vb {

using Rat = boost::multiprecision::cpp_rational;

// Exact Laurent polynomial in a single variable ('A' or 'q') with rational
// coefficients. A polynomial with no terms of nonzero exponent carries no
// variable; the variable is fixed on first mixed operation.
class Laurent {
public:
  Laurent() = default;
  Laurent(long v) { if (v != 0) terms_[0] = Rat(v); }
  explicit Laurent(const Rat& v) { if (v != 0) terms_[0] = v; }

  static Laurent monomial(char var, int exp, Rat coeff = Rat(1));
  static Laurent zero() { return Laurent(); }
  static Laurent one() { return Laurent(1); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0); }
  bool is_one() const { return is_constant() && constant_value() == 1; }
  Rat constant_value() const { return terms_.empty() ? Rat(0) : terms_.begin()->second; }
  char var() const { return var_; }

  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  Laurent operator-() const;
  friend Laurent operator+(Laurent a, const Laurent& b) { a += b; return a; }
  friend Laurent operator-(Laurent a, const Laurent& b) { a -= b; return a; }
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  Laurent& operator*=(const Laurent& o) { *this = *this * o; return *this; }

  bool operator==(const Laurent& o) const;
  bool operator!=(const Laurent& o) const { return !(*this == o); }

  // Exact division; returns false when o does not divide *this in the
  // Laurent ring.
  bool try_divide(const Laurent& o, Laurent& out) const;

  // Multiplicative inverse, defined only for monomials.
  bool try_invert(Laurent& out) const;

  Laurent pow(int e) const; // e >= 0

  // Canonical form: terms in ascending exponent order joined by " + ",
  // e.g. "A^-2 + -1*A^2". Zero prints as "0".
  std::string str() const;
  static Laurent parse(const std::string& text, char expected_var = 0);

  const std::map<int, Rat>& terms() const { return terms_; }

private:
  void set_var_from(const Laurent& o);
  void normalize();
  char var_ = 0; // 0 until a nonzero-exponent term exists
  std::map<int, Rat> terms_;
};

// Quotient of Laurent polynomials, used where exact division is not
// available (normalized traces). Compared by cross-multiplication.
struct LaurentFraction {
  Laurent num;
  Laurent den = Laurent::one();

  static LaurentFraction of(Laurent n) { return {std::move(n), Laurent::one()}; }
  bool operator==(const LaurentFraction& o) const { return num * o.den == o.num * den; }
  bool operator!=(const LaurentFraction& o) const { return !(*this == o); }
  LaurentFraction operator*(const LaurentFraction& o) const { return {num * o.num, den * o.den}; }
  std::string str() const;
};

} // namespace vb

#endif
