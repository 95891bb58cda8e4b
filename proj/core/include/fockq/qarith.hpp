#pragma once

// Exact scalar arithmetic: Laurent polynomials in q with rational coefficients,
// q-integers, q-factorials and evaluation at numeric q.

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace fockq {

using Rational = mpq_class;
using Complex = std::complex<double>;

/// Element of Q[q, q^-1]. Terms are kept sorted by ascending exponent and no
/// stored coefficient is ever zero, so equality is structural.
class LaurentPoly {
 public:
  struct Term {
    int exponent;
    Rational coeff;
  };

  LaurentPoly() = default;
  explicit LaurentPoly(const Rational& constant);
  explicit LaurentPoly(long constant) : LaurentPoly(Rational(constant)) {}

  static LaurentPoly monomial(int exponent, const Rational& coeff = 1);
  /// Accepts terms in any order, with duplicates and zeros.
  static LaurentPoly from_terms(std::vector<Term> terms);

  bool is_zero() const noexcept { return terms_.empty(); }
  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }
  Rational coefficient(int exponent) const;
  /// Only meaningful for non-zero polynomials.
  int min_exponent() const { return terms_.front().exponent; }
  int max_exponent() const { return terms_.back().exponent; }
  bool is_monomial() const noexcept { return terms_.size() == 1; }
  /// True when every coefficient is an integer.
  bool has_integer_coefficients() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const Rational& rhs);

  friend LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs += rhs; }
  friend LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs -= rhs; }
  friend LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs);
  friend bool operator==(const LaurentPoly& lhs, const LaurentPoly& rhs);

  /// Multiplication by q^shift.
  LaurentPoly shifted(int shift) const;

 private:
  void canonicalize();
  std::vector<Term> terms_;
};

/// [x] = (q^x - q^-x)/(q - q^-1), i.e. q^{x-1} + q^{x-3} + ... + q^{1-x}.
LaurentPoly qint(long x);

/// [1][2]...[x]; throws ArgumentError for negative x.
LaurentPoly qfactorial(long x);

/// Quotient of an exact division in the Laurent ring. Throws InexactDivision
/// when den does not divide num, ArgumentError when den is zero.
LaurentPoly divide_exact(const LaurentPoly& num, const LaurentPoly& den);

/// Evaluation at q. q = 0 is an ArgumentError.
Rational evaluate(const LaurentPoly& poly, const Rational& q);
Complex evaluate(const LaurentPoly& poly, Complex q);
double evaluate(const LaurentPoly& poly, double q);

/// Nearest double when numerator and denominator fit in 53 bits, otherwise
/// truncated toward zero.
double to_double(const Rational& value);

/// "num/den", always with the denominator.
std::string rational_to_string(const Rational& value);
/// Parses "a", "a/b" or a plain decimal such as "-0.125" into an exact rational.
Rational parse_rational(const std::string& text);

/// Human-readable form, e.g. "q^2 + 1 + q^-2".
std::string to_string(const LaurentPoly& poly);
std::ostream& operator<<(std::ostream& os, const LaurentPoly& poly);

/// {"2":"1/1","0":"1/1","-2":"1/1"}: exponent strings to rationals, descending exponent.
nlohmann::ordered_json to_json(const LaurentPoly& poly);
LaurentPoly laurent_from_json(const nlohmann::json& j);

}  // namespace fockq
