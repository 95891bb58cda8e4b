#pragma once

// Representation matrices on W_p: creation/annihilation operators a_i^{+/-},
// Cartan elements H_i, L_i = q^{H_i}, Lbar_i = q^{-H_i}, and at q = 1 the
// reconstructed Chevalley and gl(n+1|m) generators.
//
// Basis conventions. Orthonormal uses the matrix elements
//   a_i^- |r) = s_i(r) q^{r_1+...+r_{i-1}} sqrt([r_i][p - |r| + 1]) |r - e_i)
//   a_i^+ |r) = s_i(r) q^{-(r_1+...+r_{i-1})} (1 - theta_i r_i) sqrt([r_i + 1][p - |r|]) |r + e_i)
// with s_i(r) = (-1)^{theta_i (theta_1 r_1 + ... + theta_{i-1} r_{i-1})}. Unnormalized
// rescales basis vector |r) by sqrt([p]! prod [r_l]! / [p - |r|]!), which clears
// every square root:
//   a_i^+ |r> = s_i(r) q^{-(r_1+...+r_{i-1})} (1 - theta_i r_i) |r + e_i>
//   a_i^- |r> = s_i(r) q^{r_1+...+r_{i-1}} [r_i][p - |r| + 1] |r - e_i>
// Exact and classical rings support only Unnormalized.

#include <vector>

#include "fockq/fockspace.hpp"
#include "fockq/graded_matrix.hpp"
#include "fockq/scalars.hpp"

namespace fockq {

template <class Ring>
using MatrixOver = GradedMatrix<typename Ring::value_type>;

/// (-1)^{theta_i (theta_1 r_1 + ... + theta_{i-1} r_{i-1})}, counting fermionic slots only.
int cao_phase(const Signature& sig, int i, const OccupationVector& r);

template <class Ring>
MatrixOver<Ring> build_a_plus(const FockBasis& basis, int i, const Ring& ring,
                              Convention convention = Convention::Unnormalized);
template <class Ring>
MatrixOver<Ring> build_a_minus(const FockBasis& basis, int i, const Ring& ring,
                               Convention convention = Convention::Unnormalized);
/// Diagonal, entries h_eigenvalue(i, r).
template <class Ring>
MatrixOver<Ring> build_H(const FockBasis& basis, int i, const Ring& ring);
template <class Ring>
MatrixOver<Ring> build_L(const FockBasis& basis, int i, const Ring& ring);
template <class Ring>
MatrixOver<Ring> build_Lbar(const FockBasis& basis, int i, const Ring& ring);

/// All CAOs and Cartan elements of one representation, indexed 1..n+m.
template <class T>
struct CaoSet {
  std::vector<GradedMatrix<T>> plus;
  std::vector<GradedMatrix<T>> minus;
  std::vector<GradedMatrix<T>> cartan;
  std::vector<GradedMatrix<T>> L;
  std::vector<GradedMatrix<T>> Lbar;

  int rank() const { return static_cast<int>(plus.size()); }
  /// sign = +1 for a_i^+, -1 for a_i^-.
  const GradedMatrix<T>& a(int sign, int i) const { return (sign > 0 ? plus : minus).at(idx(i)); }
  const GradedMatrix<T>& H(int i) const { return cartan.at(idx(i)); }
  /// L_i^{power} for power = +1 / -1.
  const GradedMatrix<T>& L_pow(int power, int i) const { return (power > 0 ? L : Lbar).at(idx(i)); }

 private:
  static std::size_t idx(int i) { return static_cast<std::size_t>(i - 1); }
};

template <class Ring>
CaoSet<typename Ring::value_type> build_cao_set(const FockBasis& basis, const Ring& ring,
                                                Convention convention = Convention::Unnormalized);

/// Conjugates the unnormalized CAO matrices by the diagonal normalization map
/// and returns the largest deviation from the orthonormal matrices, over all
/// a_i^{+/-}. q must be real and positive.
double change_of_basis_check(const FockBasis& basis, double q);

/// Cartan matrix alpha_{ij}, i, j in [1; n+m], stored 0-based.
std::vector<std::vector<int>> cartan_matrix(const Signature& sig);

/// Chevalley generators at q = 1, reconstructed from the CAOs:
///   e_1 = a_1^-, f_1 = a_1^+, e_i = [[a_{i-1}^+, a_i^-]], f_i = [[a_i^+, a_{i-1}^-]], h_i = [[e_i, f_i]].
struct ChevalleySet {
  std::vector<GradedMatrix<Rational>> e;
  std::vector<GradedMatrix<Rational>> f;
  std::vector<GradedMatrix<Rational>> h;
  std::vector<std::vector<int>> cartan;

  int rank() const { return static_cast<int>(e.size()); }
  const GradedMatrix<Rational>& e_hat(int i) const { return e.at(static_cast<std::size_t>(i - 1)); }
  const GradedMatrix<Rational>& f_hat(int i) const { return f.at(static_cast<std::size_t>(i - 1)); }
  const GradedMatrix<Rational>& h_hat(int i) const { return h.at(static_cast<std::size_t>(i - 1)); }
  int alpha(int i, int j) const { return cartan.at(static_cast<std::size_t>(i - 1)).at(static_cast<std::size_t>(j - 1)); }
};

ChevalleySet build_chevalley(const FockBasis& basis);
ChevalleySet build_chevalley(const FockBasis& basis, const CaoSet<Rational>& classical);

/// gl(n+1|m) generators E_{ij}, i, j in [0; n+m], at q = 1:
///   E_{i0} = a_i^+, E_{0i} = a_i^-, E_{00} = diag(p - |r|),
///   E_{ij} = [[a_i^+, a_j^-]] + (-1)^{theta_i} delta_{ij} E_{00}.
class GlGenerators {
 public:
  explicit GlGenerators(const FockBasis& basis);
  GlGenerators(const FockBasis& basis, const CaoSet<Rational>& classical);

  int rank() const { return rank_; }
  const GradedMatrix<Rational>& operator()(int i, int j) const;

 private:
  int rank_;
  std::vector<GradedMatrix<Rational>> grid_;
};

GradedMatrix<Rational> build_gl_generator(const FockBasis& basis, int i, int j);

#define FOCKQ_DECLARE_BUILDERS(Ring)                                                                         \
  extern template MatrixOver<Ring> build_a_plus<Ring>(const FockBasis&, int, const Ring&, Convention);        \
  extern template MatrixOver<Ring> build_a_minus<Ring>(const FockBasis&, int, const Ring&, Convention);       \
  extern template MatrixOver<Ring> build_H<Ring>(const FockBasis&, int, const Ring&);                         \
  extern template MatrixOver<Ring> build_L<Ring>(const FockBasis&, int, const Ring&);                         \
  extern template MatrixOver<Ring> build_Lbar<Ring>(const FockBasis&, int, const Ring&);                      \
  extern template CaoSet<typename Ring::value_type> build_cao_set<Ring>(const FockBasis&, const Ring&, Convention);

FOCKQ_DECLARE_BUILDERS(ExactRing)
FOCKQ_DECLARE_BUILDERS(ClassicalRing)
FOCKQ_DECLARE_BUILDERS(NumericRing)

#undef FOCKQ_DECLARE_BUILDERS

}  // namespace fockq
