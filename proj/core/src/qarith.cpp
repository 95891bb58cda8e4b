#include "fockq/qarith.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>

#include "fockq/errors.hpp"

namespace fockq {

LaurentPoly::LaurentPoly(const Rational& constant) {
  if (sgn(constant) != 0) terms_.push_back({0, constant});
  if (!terms_.empty()) terms_.front().coeff.canonicalize();
}

LaurentPoly LaurentPoly::monomial(int exponent, const Rational& coeff) {
  LaurentPoly p;
  if (sgn(coeff) != 0) p.terms_.push_back({exponent, coeff});
  return p;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  LaurentPoly p;
  p.terms_ = std::move(terms);
  p.canonicalize();
  return p;
}

void LaurentPoly::canonicalize() {
  std::stable_sort(terms_.begin(), terms_.end(),
                   [](const Term& a, const Term& b) { return a.exponent < b.exponent; });
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().exponent == t.exponent) {
      merged.back().coeff += t.coeff;
    } else {
      merged.push_back(std::move(t));
    }
  }
  std::erase_if(merged, [](const Term& t) { return sgn(t.coeff) == 0; });
  for (auto& t : merged) t.coeff.canonicalize();
  terms_ = std::move(merged);
}

Rational LaurentPoly::coefficient(int exponent) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                             [](const Term& t, int e) { return t.exponent < e; });
  if (it != terms_.end() && it->exponent == exponent) return it->coeff;
  return 0;
}

bool LaurentPoly::has_integer_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const Term& t) { return t.coeff.get_den() == 1; });
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

namespace {

// Merge of two sorted term lists; sign = +1 for addition, -1 for subtraction.
std::vector<LaurentPoly::Term> merge_terms(std::span<const LaurentPoly::Term> a,
                                           std::span<const LaurentPoly::Term> b, int sign) {
  std::vector<LaurentPoly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].exponent < b[j].exponent)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].exponent < a[i].exponent) {
      out.push_back({b[j].exponent, sign > 0 ? Rational(b[j].coeff) : Rational(-b[j].coeff)});
      ++j;
    } else {
      Rational c = sign > 0 ? Rational(a[i].coeff + b[j].coeff) : Rational(a[i].coeff - b[j].coeff);
      if (sgn(c) != 0) out.push_back({a[i].exponent, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  if (rhs.is_zero()) return *this;
  terms_ = merge_terms(terms_, rhs.terms_, +1);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  if (rhs.is_zero()) return *this;
  terms_ = merge_terms(terms_, rhs.terms_, -1);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs) {
  LaurentPoly out;
  if (lhs.is_zero() || rhs.is_zero()) return out;
  if (rhs.is_monomial()) {
    const auto& m = rhs.terms_.front();
    out.terms_.reserve(lhs.terms_.size());
    for (const auto& t : lhs.terms_) out.terms_.push_back({t.exponent + m.exponent, t.coeff * m.coeff});
    return out;
  }
  if (lhs.is_monomial()) return rhs * lhs;
  // Dense accumulation over the exponent window of the product.
  const int lo = lhs.min_exponent() + rhs.min_exponent();
  const int hi = lhs.max_exponent() + rhs.max_exponent();
  std::vector<Rational> acc(static_cast<std::size_t>(hi - lo + 1));
  for (const auto& a : lhs.terms_) {
    for (const auto& b : rhs.terms_) {
      acc[static_cast<std::size_t>(a.exponent + b.exponent - lo)] += a.coeff * b.coeff;
    }
  }
  for (std::size_t k = 0; k < acc.size(); ++k) {
    if (sgn(acc[k]) != 0) out.terms_.push_back({lo + static_cast<int>(k), std::move(acc[k])});
  }
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& rhs) {
  if (sgn(rhs) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= rhs;
  return *this;
}

bool operator==(const LaurentPoly& lhs, const LaurentPoly& rhs) {
  if (lhs.terms_.size() != rhs.terms_.size()) return false;
  for (std::size_t k = 0; k < lhs.terms_.size(); ++k) {
    if (lhs.terms_[k].exponent != rhs.terms_[k].exponent) return false;
    if (lhs.terms_[k].coeff != rhs.terms_[k].coeff) return false;
  }
  return true;
}

LaurentPoly LaurentPoly::shifted(int shift) const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.exponent += shift;
  return r;
}

LaurentPoly qint(long x) {
  if (x == 0) return {};
  if (x < 0) return -qint(-x);
  std::vector<LaurentPoly::Term> terms;
  terms.reserve(static_cast<std::size_t>(x));
  for (long k = 0; k < x; ++k) terms.push_back({static_cast<int>(1 - x + 2 * k), Rational(1)});
  return LaurentPoly::from_terms(std::move(terms));
}

LaurentPoly qfactorial(long x) {
  if (x < 0) throw ArgumentError("qfactorial: negative argument " + std::to_string(x));
  LaurentPoly r(1L);
  for (long k = 2; k <= x; ++k) r *= qint(k);
  return r;
}

LaurentPoly divide_exact(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw ArgumentError("divide_exact: zero divisor");
  if (num.is_zero()) return {};

  // Shift both to ordinary polynomials with non-zero constant term. The divisor
  // then divides in the Laurent ring iff it divides as a polynomial.
  const int num_lo = num.min_exponent();
  const int den_lo = den.min_exponent();
  const auto num_deg = static_cast<std::size_t>(num.max_exponent() - num_lo);
  const auto den_deg = static_cast<std::size_t>(den.max_exponent() - den_lo);
  if (num_deg < den_deg) {
    throw InexactDivision("divide_exact: " + to_string(den) + " does not divide " + to_string(num));
  }

  std::vector<Rational> rem(num_deg + 1);
  for (const auto& t : num.terms()) rem[static_cast<std::size_t>(t.exponent - num_lo)] = t.coeff;
  std::vector<Rational> dv(den_deg + 1);
  for (const auto& t : den.terms()) dv[static_cast<std::size_t>(t.exponent - den_lo)] = t.coeff;

  const Rational lead = dv.back();
  std::vector<Rational> quot(num_deg - den_deg + 1);
  for (std::size_t k = num_deg - den_deg + 1; k-- > 0;) {
    Rational c = rem[k + den_deg] / lead;
    if (sgn(c) == 0) continue;
    for (std::size_t d = 0; d <= den_deg; ++d) rem[k + d] -= c * dv[d];
    quot[k] = std::move(c);
  }
  if (std::any_of(rem.begin(), rem.end(), [](const Rational& r) { return sgn(r) != 0; })) {
    throw InexactDivision("divide_exact: " + to_string(den) + " does not divide " + to_string(num));
  }

  std::vector<LaurentPoly::Term> terms;
  for (std::size_t k = 0; k < quot.size(); ++k) {
    if (sgn(quot[k]) != 0) terms.push_back({num_lo - den_lo + static_cast<int>(k), std::move(quot[k])});
  }
  return LaurentPoly::from_terms(std::move(terms));
}

Rational evaluate(const LaurentPoly& poly, const Rational& q) {
  if (sgn(q) == 0) throw ArgumentError("evaluate: q = 0");
  Rational sum = 0;
  for (const auto& t : poly.terms()) {
    const unsigned long e = static_cast<unsigned long>(t.exponent < 0 ? -t.exponent : t.exponent);
    mpz_class num_pow, den_pow;
    mpz_pow_ui(num_pow.get_mpz_t(), q.get_num_mpz_t(), e);
    mpz_pow_ui(den_pow.get_mpz_t(), q.get_den_mpz_t(), e);
    Rational power = t.exponent < 0 ? Rational(den_pow, num_pow) : Rational(num_pow, den_pow);
    power.canonicalize();
    sum += t.coeff * power;
  }
  sum.canonicalize();
  return sum;
}

Complex evaluate(const LaurentPoly& poly, Complex q) {
  if (q == Complex(0.0, 0.0)) throw ArgumentError("evaluate: q = 0");
  Complex sum(0.0, 0.0);
  for (const auto& t : poly.terms()) sum += to_double(t.coeff) * std::pow(q, t.exponent);
  return sum;
}

double evaluate(const LaurentPoly& poly, double q) {
  if (q == 0.0) throw ArgumentError("evaluate: q = 0");
  double sum = 0.0;
  for (const auto& t : poly.terms()) sum += to_double(t.coeff) * std::pow(q, t.exponent);
  return sum;
}

double to_double(const Rational& value) {
  // Both operands are exact doubles, so IEEE division rounds correctly.
  if (mpz_sizeinbase(value.get_num_mpz_t(), 2) <= 53 && mpz_sizeinbase(value.get_den_mpz_t(), 2) <= 53) {
    return value.get_num().get_d() / value.get_den().get_d();
  }
  return value.get_d();
}

std::string rational_to_string(const Rational& value) {
  Rational v = value;
  v.canonicalize();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw ArgumentError("parse_rational: empty string");

  auto digits_only = [](const std::string& part) {
    return !part.empty() &&
           std::all_of(part.begin(), part.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
  };

  bool negative = false;
  std::string body = s;
  if (body[0] == '+' || body[0] == '-') {
    negative = body[0] == '-';
    body = body.substr(1);
  }

  Rational result;
  if (auto slash = body.find('/'); slash != std::string::npos) {
    const std::string a = body.substr(0, slash), b = body.substr(slash + 1);
    if (!digits_only(a) || !digits_only(b)) throw ArgumentError("parse_rational: malformed '" + text + "'");
    mpz_class den(b, 10);
    if (den == 0) throw ArgumentError("parse_rational: zero denominator in '" + text + "'");
    result = Rational(mpz_class(a, 10), den);
  } else {
    // Decimal with optional fraction part and exponent, converted exactly.
    std::string mantissa = body;
    long exp10 = 0;
    if (auto e = mantissa.find_first_of("eE"); e != std::string::npos) {
      std::string ex = mantissa.substr(e + 1);
      mantissa = mantissa.substr(0, e);
      bool ex_neg = false;
      if (!ex.empty() && (ex[0] == '+' || ex[0] == '-')) {
        ex_neg = ex[0] == '-';
        ex = ex.substr(1);
      }
      if (!digits_only(ex) || ex.size() > 6) throw ArgumentError("parse_rational: malformed '" + text + "'");
      exp10 = std::stol(ex) * (ex_neg ? -1 : 1);
    }
    std::string int_part = mantissa, frac_part;
    if (auto dot = mantissa.find('.'); dot != std::string::npos) {
      int_part = mantissa.substr(0, dot);
      frac_part = mantissa.substr(dot + 1);
    }
    if (int_part.empty() && frac_part.empty()) throw ArgumentError("parse_rational: malformed '" + text + "'");
    if ((!int_part.empty() && !digits_only(int_part)) || (!frac_part.empty() && !digits_only(frac_part))) {
      throw ArgumentError("parse_rational: malformed '" + text + "'");
    }
    mpz_class num((int_part.empty() ? std::string("0") : int_part) + frac_part, 10);
    exp10 -= static_cast<long>(frac_part.size());
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exp10 < 0 ? -exp10 : exp10));
    result = exp10 < 0 ? Rational(num, scale) : Rational(num * scale, 1);
  }
  result.canonicalize();
  if (negative) result = -result;
  return result;
}

std::string to_string(const LaurentPoly& poly) {
  if (poly.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest power first reads most naturally.
  for (auto it = poly.terms().rbegin(); it != poly.terms().rend(); ++it) {
    Rational c = it->coeff;
    const bool neg = sgn(c) < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    const bool unit = c == 1;
    if (it->exponent == 0) {
      os << c.get_str();
      continue;
    }
    if (!unit) os << c.get_str() << "*";
    os << "q";
    if (it->exponent != 1) os << "^" << it->exponent;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& poly) { return os << to_string(poly); }

nlohmann::ordered_json to_json(const LaurentPoly& poly) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (auto it = poly.terms().rbegin(); it != poly.terms().rend(); ++it) {
    j[std::to_string(it->exponent)] = rational_to_string(it->coeff);
  }
  return j;
}

LaurentPoly laurent_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ArgumentError("laurent_from_json: expected an object");
  std::vector<LaurentPoly::Term> terms;
  for (const auto& [key, value] : j.items()) {
    std::size_t used = 0;
    int exponent = 0;
    try {
      exponent = std::stoi(key, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != key.size() || key.empty()) throw ArgumentError("laurent_from_json: bad exponent '" + key + "'");
    if (!value.is_string()) throw ArgumentError("laurent_from_json: coefficient must be a string");
    terms.push_back({exponent, parse_rational(value.get<std::string>())});
  }
  return LaurentPoly::from_terms(std::move(terms));
}

}  // namespace fockq
