#pragma once

// Seeded random generators for property tests.

#include <random>
#include <vector>

#include "fockq/fockspace.hpp"
#include "fockq/graded_matrix.hpp"
#include "fockq/qarith.hpp"

namespace gen {

class Source {
 public:
  explicit Source(unsigned seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin() { return uniform(0, 1) == 1; }

  fockq::Rational rational(int bound = 9) {
    fockq::Rational r(uniform(-bound, bound), uniform(1, bound));
    r.canonicalize();
    return r;
  }

  fockq::LaurentPoly laurent(int max_terms = 4, int span = 5) {
    std::vector<fockq::LaurentPoly::Term> terms;
    const int count = uniform(0, max_terms);
    for (int k = 0; k < count; ++k) terms.push_back({uniform(-span, span), rational()});
    return fockq::LaurentPoly::from_terms(std::move(terms));
  }

  fockq::LaurentPoly nonzero_laurent() {
    fockq::LaurentPoly p;
    while (p.is_zero()) p = laurent();
    return p;
  }

  /// n + m in [1, max_rank], p in [0, max_p].
  fockq::Signature signature(int max_rank, int max_p) {
    const int rank = uniform(1, max_rank);
    const int n = uniform(0, rank);
    return fockq::Signature(n, rank - n, uniform(0, max_p));
  }

  fockq::GradedMatrix<fockq::Rational> matrix(std::size_t dim, fockq::Parity degree, int fill_percent = 40) {
    std::vector<fockq::GradedMatrix<fockq::Rational>::Entry> entries;
    for (std::size_t r = 0; r < dim; ++r)
      for (std::size_t c = 0; c < dim; ++c)
        if (uniform(1, 100) <= fill_percent) entries.push_back({r, c, rational()});
    return fockq::GradedMatrix<fockq::Rational>::from_entries(dim, degree, std::move(entries));
  }

  fockq::Parity parity() { return coin() ? fockq::Parity::Odd : fockq::Parity::Even; }

 private:
  std::mt19937 rng_;
};

}  // namespace gen
