#include "fockq/operators.hpp"

#include <cmath>
#include <string>

namespace fockq {

namespace {

void require_slot(const Signature& sig, int i, const char* what) {
  if (i < 1 || i > sig.rank()) {
    throw ArgumentError(std::string(what) + ": index " + std::to_string(i) + " outside [1;" +
                        std::to_string(sig.rank()) + "]");
  }
}

template <class Ring>
void require_convention(Convention convention, const char* what) {
  if constexpr (!Ring::has_sqrt) {
    if (convention == Convention::Orthonormal) {
      throw ArgumentError(std::string(what) + ": the orthonormal convention needs square roots; use numeric mode");
    }
  }
}

int partial_total(const OccupationVector& r, int i) {
  int s = 0;
  for (int l = 1; l < i; ++l) s += r(l);
  return s;
}

// sqrt([a][b]) taken as sqrt([a]) * sqrt([b]) so both CAO directions use the
// same branch for each factor.
template <class Ring>
typename Ring::value_type sqrt_qint_product(const Ring& ring, long a, long b) {
  if constexpr (Ring::has_sqrt) {
    return ring.sqrt(ring.q_int(a)) * ring.sqrt(ring.q_int(b));
  } else {
    (void)ring;
    (void)a;
    (void)b;
    throw ArgumentError("square roots are not available in this ring");
  }
}

template <class Ring>
MatrixOver<Ring> diagonal_from_h(const FockBasis& basis, int i, const char* what,
                                 auto&& value_of_h) {
  require_slot(basis.signature(), i, what);
  std::vector<typename Ring::value_type> diag;
  diag.reserve(basis.size());
  for (const auto& r : basis.states()) diag.push_back(value_of_h(h_eigenvalue(basis.signature(), i, r)));
  return MatrixOver<Ring>::diagonal(Parity::Even, std::move(diag));
}

}  // namespace

int cao_phase(const Signature& sig, int i, const OccupationVector& r) {
  if (theta(sig, i) == Parity::Even) return 1;
  int odd = 0;
  for (int l = sig.n() + 1; l < i; ++l) odd += r(l);
  return (odd % 2) ? -1 : 1;
}

template <class Ring>
MatrixOver<Ring> build_a_plus(const FockBasis& basis, int i, const Ring& ring, Convention convention) {
  const Signature& sig = basis.signature();
  require_slot(sig, i, "build_a_plus");
  require_convention<Ring>(convention, "build_a_plus");
  const bool fermionic = theta(sig, i) == Parity::Odd;
  const int p = sig.p();

  using T = typename Ring::value_type;
  std::vector<typename MatrixOver<Ring>::Entry> entries;
  entries.reserve(basis.size());
  for (std::size_t col = 0; col < basis.size(); ++col) {
    const OccupationVector& r = basis.state(col);
    if (fermionic && r(i) == 1) continue;
    const auto target = basis.index_of(r.shifted(i, +1));
    if (!target) continue;
    T value = ring.q_power(-partial_total(r, i));
    if (cao_phase(sig, i, r) < 0) value = -value;
    if (convention == Convention::Orthonormal) value *= sqrt_qint_product(ring, r(i) + 1, p - r.total());
    entries.push_back({*target, col, std::move(value)});
  }
  return MatrixOver<Ring>::from_entries(basis.size(), theta(sig, i), std::move(entries));
}

template <class Ring>
MatrixOver<Ring> build_a_minus(const FockBasis& basis, int i, const Ring& ring, Convention convention) {
  const Signature& sig = basis.signature();
  require_slot(sig, i, "build_a_minus");
  require_convention<Ring>(convention, "build_a_minus");
  const int p = sig.p();

  using T = typename Ring::value_type;
  std::vector<typename MatrixOver<Ring>::Entry> entries;
  entries.reserve(basis.size());
  for (std::size_t col = 0; col < basis.size(); ++col) {
    const OccupationVector& r = basis.state(col);
    if (r(i) == 0) continue;
    const auto target = basis.index_of(r.shifted(i, -1));
    T value = ring.q_power(partial_total(r, i));
    if (cao_phase(sig, i, r) < 0) value = -value;
    if (convention == Convention::Orthonormal) {
      value *= sqrt_qint_product(ring, r(i), p - r.total() + 1);
    } else {
      value *= ring.q_int(r(i)) * ring.q_int(p - r.total() + 1);
    }
    entries.push_back({*target, col, std::move(value)});
  }
  return MatrixOver<Ring>::from_entries(basis.size(), theta(sig, i), std::move(entries));
}

template <class Ring>
MatrixOver<Ring> build_H(const FockBasis& basis, int i, const Ring& ring) {
  return diagonal_from_h<Ring>(basis, i, "build_H", [&](long h) { return ring.integer(h); });
}

template <class Ring>
MatrixOver<Ring> build_L(const FockBasis& basis, int i, const Ring& ring) {
  return diagonal_from_h<Ring>(basis, i, "build_L", [&](long h) { return ring.q_power(static_cast<int>(h)); });
}

template <class Ring>
MatrixOver<Ring> build_Lbar(const FockBasis& basis, int i, const Ring& ring) {
  return diagonal_from_h<Ring>(basis, i, "build_Lbar", [&](long h) { return ring.q_power(static_cast<int>(-h)); });
}

template <class Ring>
CaoSet<typename Ring::value_type> build_cao_set(const FockBasis& basis, const Ring& ring, Convention convention) {
  CaoSet<typename Ring::value_type> set;
  const int rank = basis.signature().rank();
  for (int i = 1; i <= rank; ++i) {
    set.plus.push_back(build_a_plus(basis, i, ring, convention));
    set.minus.push_back(build_a_minus(basis, i, ring, convention));
    set.cartan.push_back(build_H(basis, i, ring));
    set.L.push_back(build_L(basis, i, ring));
    set.Lbar.push_back(build_Lbar(basis, i, ring));
  }
  return set;
}

#define FOCKQ_INSTANTIATE_BUILDERS(Ring)                                                              \
  template MatrixOver<Ring> build_a_plus<Ring>(const FockBasis&, int, const Ring&, Convention);        \
  template MatrixOver<Ring> build_a_minus<Ring>(const FockBasis&, int, const Ring&, Convention);       \
  template MatrixOver<Ring> build_H<Ring>(const FockBasis&, int, const Ring&);                         \
  template MatrixOver<Ring> build_L<Ring>(const FockBasis&, int, const Ring&);                         \
  template MatrixOver<Ring> build_Lbar<Ring>(const FockBasis&, int, const Ring&);                      \
  template CaoSet<typename Ring::value_type> build_cao_set<Ring>(const FockBasis&, const Ring&, Convention);

FOCKQ_INSTANTIATE_BUILDERS(ExactRing)
FOCKQ_INSTANTIATE_BUILDERS(ClassicalRing)
FOCKQ_INSTANTIATE_BUILDERS(NumericRing)

#undef FOCKQ_INSTANTIATE_BUILDERS

double change_of_basis_check(const FockBasis& basis, double q) {
  if (!(q > 0.0) || !std::isfinite(q)) throw ArgumentError("change_of_basis_check: q must be real and positive");
  const Signature& sig = basis.signature();
  const NumericRing ring = NumericRing::for_construction(Complex(q, 0.0));

  // Scale of basis vector r: sqrt([p]! prod_l [r_l]! / [p - |r|]!), as a product
  // of per-factor square roots.
  auto sqrt_qfact = [&](int x) {
    Complex v(1.0, 0.0);
    for (int k = 1; k <= x; ++k) v *= ring.sqrt(ring.q_int(k));
    return v;
  };
  std::vector<Complex> scale;
  scale.reserve(basis.size());
  for (const auto& r : basis.states()) {
    Complex d = sqrt_qfact(sig.p()) / sqrt_qfact(sig.p() - r.total());
    for (int v : r.values()) d *= sqrt_qfact(v);
    scale.push_back(d);
  }

  double worst = 0.0;
  auto compare = [&](const GradedMatrix<Complex>& unnormalized, const GradedMatrix<Complex>& orthonormal) {
    std::vector<GradedMatrix<Complex>::Entry> conj;
    unnormalized.for_each([&](std::size_t row, std::size_t col, const Complex& v) {
      conj.push_back({row, col, scale[row] * v / scale[col]});
    });
    const auto conjugated = GradedMatrix<Complex>::from_entries(basis.size(), unnormalized.degree(), std::move(conj));
    const auto diff = conjugated - orthonormal;
    worst = std::max(worst, diff.max_magnitude());
  };
  for (int i = 1; i <= sig.rank(); ++i) {
    compare(build_a_plus(basis, i, ring, Convention::Unnormalized), build_a_plus(basis, i, ring, Convention::Orthonormal));
    compare(build_a_minus(basis, i, ring, Convention::Unnormalized),
            build_a_minus(basis, i, ring, Convention::Orthonormal));
  }
  return worst;
}

std::vector<std::vector<int>> cartan_matrix(const Signature& sig) {
  const int rank = sig.rank();
  std::vector<std::vector<int>> alpha(static_cast<std::size_t>(rank), std::vector<int>(static_cast<std::size_t>(rank)));
  for (int i = 1; i <= rank; ++i) {
    // (-1)^{theta_{i-1,i}}
    const int s = sign_of_product(theta(sig, i - 1) + theta(sig, i), Parity::Odd);
    for (int j = 1; j <= rank; ++j) {
      int v = 0;
      if (i == j) v += 1 + s;
      if (i == j - 1) v -= s;
      if (i - 1 == j) v -= 1;
      alpha[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = v;
    }
  }
  return alpha;
}

ChevalleySet build_chevalley(const FockBasis& basis) {
  return build_chevalley(basis, build_cao_set(basis, ClassicalRing{}));
}

ChevalleySet build_chevalley(const FockBasis& basis, const CaoSet<Rational>& a) {
  ChevalleySet set;
  set.cartan = cartan_matrix(basis.signature());
  const int rank = basis.signature().rank();
  for (int i = 1; i <= rank; ++i) {
    if (i == 1) {
      set.e.push_back(a.a(-1, 1));
      set.f.push_back(a.a(+1, 1));
    } else {
      set.e.push_back(bracket(a.a(+1, i - 1), a.a(-1, i)));
      set.f.push_back(bracket(a.a(+1, i), a.a(-1, i - 1)));
    }
    set.h.push_back(bracket(set.e.back(), set.f.back()));
  }
  return set;
}

GlGenerators::GlGenerators(const FockBasis& basis) : GlGenerators(basis, build_cao_set(basis, ClassicalRing{})) {}

GlGenerators::GlGenerators(const FockBasis& basis, const CaoSet<Rational>& a) : rank_(basis.signature().rank()) {
  const Signature& sig = basis.signature();
  std::vector<Rational> diag;
  for (const auto& r : basis.states()) diag.emplace_back(sig.p() - r.total());
  const auto e00 = GradedMatrix<Rational>::diagonal(Parity::Even, std::move(diag));

  const auto width = static_cast<std::size_t>(rank_ + 1);
  grid_.resize(width * width);
  for (int i = 0; i <= rank_; ++i) {
    for (int j = 0; j <= rank_; ++j) {
      GradedMatrix<Rational> g;
      if (i == 0 && j == 0) {
        g = e00;
      } else if (j == 0) {
        g = a.a(+1, i);
      } else if (i == 0) {
        g = a.a(-1, j);
      } else {
        g = bracket(a.a(+1, i), a.a(-1, j));
        if (i == j) g = theta(sig, i) == Parity::Even ? g + e00 : g - e00;
      }
      grid_[static_cast<std::size_t>(i) * width + static_cast<std::size_t>(j)] =
          g.with_degree(theta(sig, i) + theta(sig, j));
    }
  }
}

const GradedMatrix<Rational>& GlGenerators::operator()(int i, int j) const {
  if (i < 0 || j < 0 || i > rank_ || j > rank_) {
    throw ArgumentError("GlGenerators: index outside [0;" + std::to_string(rank_) + "]");
  }
  const auto width = static_cast<std::size_t>(rank_ + 1);
  return grid_[static_cast<std::size_t>(i) * width + static_cast<std::size_t>(j)];
}

GradedMatrix<Rational> build_gl_generator(const FockBasis& basis, int i, int j) {
  const int rank = basis.signature().rank();
  if (i < 0 || j < 0 || i > rank || j > rank) {
    throw ArgumentError("build_gl_generator: index outside [0;" + std::to_string(rank) + "]");
  }
  return GlGenerators(basis)(i, j);
}

}  // namespace fockq
