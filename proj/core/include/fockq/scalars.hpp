#pragma once

// Scalar rings the representation matrices can live over. Each ring knows how
// to produce q-powers and q-integers in its own value type, so operator
// builders are written once and instantiated per ring:
//
//   ExactRing      Laurent polynomials in q (symbolic q, exact)
//   ClassicalRing  rationals, q = 1 (the undeformed superalgebra)
//   NumericRing    complex doubles at a fixed numeric q

#include <cmath>
#include <complex>
#include <string>

#include "fockq/errors.hpp"
#include "fockq/qarith.hpp"

namespace fockq {

enum class Convention {
  Orthonormal,   // verbatim matrix elements, with square roots of q-integers
  Unnormalized,  // square-root-free rescaling of the same basis
};

std::string to_string(Convention c);

struct ExactRing {
  using value_type = LaurentPoly;
  static constexpr bool is_exact = true;
  static constexpr bool has_sqrt = false;

  value_type zero() const { return {}; }
  value_type integer(long v) const { return LaurentPoly(v); }
  value_type q_power(int k) const { return LaurentPoly::monomial(k); }
  value_type q_int(long x) const { return fockq::qint(x); }
  value_type divide(const value_type& a, const value_type& b) const { return divide_exact(a, b); }
  std::string name() const { return "exact"; }
};

/// The q = 1 specialization. Values are obtained by evaluating the exact
/// Laurent expressions at q = 1, where they are all finite.
struct ClassicalRing {
  using value_type = Rational;
  static constexpr bool is_exact = true;
  static constexpr bool has_sqrt = false;

  value_type zero() const { return 0; }
  value_type integer(long v) const { return v; }
  value_type q_power(int) const { return 1; }
  value_type q_int(long x) const { return evaluate(fockq::qint(x), Rational(1)); }
  value_type divide(const value_type& a, const value_type& b) const {
    if (sgn(b) == 0) throw ArgumentError("ClassicalRing::divide: zero divisor");
    Rational r = a / b;
    r.canonicalize();
    return r;
  }
  std::string name() const { return "classical"; }
};

class NumericRing {
 public:
  using value_type = Complex;
  static constexpr bool is_exact = false;
  static constexpr bool has_sqrt = true;

  /// q must avoid 0, 1 and -1 (q - 1/q appears as a divisor).
  explicit NumericRing(Complex q);
  /// For building matrices only: also admits q = 1 and q = -1, where the
  /// matrix elements are finite but relations dividing by q - 1/q are not.
  static NumericRing for_construction(Complex q);

  Complex q() const { return q_; }
  value_type zero() const { return {0.0, 0.0}; }
  value_type integer(long v) const { return {static_cast<double>(v), 0.0}; }
  value_type q_power(int k) const { return std::pow(q_, k); }
  value_type q_int(long x) const { return evaluate(fockq::qint(x), q_); }
  value_type divide(const value_type& a, const value_type& b) const { return a / b; }
  /// Principal branch.
  value_type sqrt(const value_type& v) const { return std::sqrt(v); }
  std::string name() const { return "numeric"; }

 private:
  struct Unchecked {};
  NumericRing(Complex q, Unchecked) : q_(q) {}
  Complex q_;
};

inline bool is_zero_value(const LaurentPoly& v) { return v.is_zero(); }
inline bool is_zero_value(const Rational& v) { return sgn(v) == 0; }
inline bool is_zero_value(const Complex& v) { return v == Complex(0.0, 0.0); }
inline bool is_zero_value(double v) { return v == 0.0; }

inline double magnitude(const Complex& v) { return std::abs(v); }
inline double magnitude(double v) { return std::abs(v); }
inline double magnitude(const Rational& v) { return std::abs(to_double(v)); }

}  // namespace fockq
