#pragma once

// Exhaustive verification of the algebra relations on the Fock representation.
// Every relation is instantiated over all admissible index tuples and checked
// as a matrix identity LHS = RHS: structurally in exact/classical rings, up to
// a relative residual in the numeric ring.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

#include <nlohmann/json.hpp>

#include "fockq/fockspace.hpp"
#include "fockq/graded_matrix.hpp"
#include "fockq/operators.hpp"
#include "fockq/scalars.hpp"

namespace fockq {

/// Tags name the relation families:
///   R19a [H_i,H_j] = 0                      R19b [H_i,a_j^+-] = -+(1+(-1)^theta_i d_ij) a_j^+-
///   R19c [[a_i^-,a_i^+]] = (L_i-Lbar_i)/(q-1/q)
///   R19d triple relation with j = i + xi    R19e [[a_1,a_2]]_q = 0, [[a_1,a_1]] = 0
///   R21  [[a_i,a_j]]_q = 0 for i < j (same-sign CAOs)
///   R24  L-relations                        R25  R19c together with R21
///   R26a/R26b the two printed forms of the general triple relation
///   R15  classical triple relations         R16  the |i-j| <= 1 sub-family
///   R7   gl(n+1|m) relations                R11  Cartan-Kac relations
///   R12a..R12e Serre relations              R20  vacuum conditions
///   R33  [H, b_i^+-] = +-eps_i b_i^+-, same for f (statistics Hamiltonian)
enum class RelationId {
  R19a, R19b, R19c, R19d, R19e, R21, R24, R25, R26a, R26b,
  R15, R16, R7, R11, R12a, R12b, R12c, R12d, R12e, R20, R33,
};

std::string_view to_string(RelationId id);

enum class Status {
  ExactZero,  // exact/classical difference is the zero matrix
  Residual,   // numeric, relative residual below tolerance
  Failed,
  Skipped,    // index window does not exist at this rank
};

std::string_view to_string(Status s);

struct RelationReport {
  RelationId relation = RelationId::R19a;
  std::string variant;
  std::vector<int> indices;
  std::vector<int> signs;
  Status status = Status::Skipped;
  std::optional<double> residual;

  bool passed() const { return status == Status::ExactZero || status == Status::Residual; }
};

struct SuiteOptions {
  /// Relative residual bound in numeric mode.
  double tolerance = 1e-9;
  /// 0 = hardware concurrency.
  unsigned workers = 1;
};

struct SuiteSummary {
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;
  bool ok() const { return failed == 0; }
};

SuiteSummary summarize(const std::vector<RelationReport>& reports);

/// Worst case per relation tag, ordered by tag.
struct RelationAggregate {
  RelationId relation = RelationId::R19a;
  std::size_t instances = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;
  std::optional<double> worst_residual;
};
std::vector<RelationAggregate> aggregate(const std::vector<RelationReport>& reports);

nlohmann::ordered_json to_json(const RelationReport& report);
nlohmann::ordered_json to_json(const std::vector<RelationReport>& reports);
nlohmann::ordered_json to_json(const RelationAggregate& agg);

/// epsilon(j,k,i): 1 if j > k > i, -1 if j < k < i, 0 otherwise.
int order_sign(int j, int k, int i);

/// Compares two sides. Exact entry types must agree structurally; floating
/// types are judged by max|lhs - rhs| / scale < tolerance, with scale the
/// largest of max|lhs|, max|rhs| and `scale_hint`. Callers whose sides cancel
/// pass the magnitude of the uncancelled terms as the hint.
template <class T>
RelationReport judge_relation(RelationReport meta, const GradedMatrix<T>& lhs, const GradedMatrix<T>& rhs,
                              double tolerance, double scale_hint = 0.0) {
  constexpr bool floating = std::is_same_v<T, Complex> || std::is_same_v<T, double>;
  GradedMatrix<T> diff;
  try {
    diff = lhs - rhs;
  } catch (const ArgumentError&) {
    // Inhomogeneous difference: the two sides disagree in degree.
    meta.status = Status::Failed;
    return meta;
  }
  if constexpr (floating) {
    const double scale = std::max({lhs.max_magnitude(), rhs.max_magnitude(), scale_hint});
    const double residual = scale > 0.0 ? diff.max_magnitude() / scale : diff.max_magnitude();
    meta.residual = residual;
    meta.status = residual < tolerance ? Status::Residual : Status::Failed;
  } else {
    (void)tolerance;
    (void)scale_hint;
    meta.status = diff.is_zero() ? Status::ExactZero : Status::Failed;
  }
  return meta;
}

/// Deformed defining relations: R19a-e and R21. Ring is ExactRing or NumericRing.
template <class Ring>
std::vector<RelationReport> verify_deformed_defining(const CaoSet<typename Ring::value_type>& ops, const Ring& ring,
                                                     const SuiteOptions& options = {});
template <class Ring>
std::vector<RelationReport> verify_deformed_defining(const FockBasis& basis, const Ring& ring, Convention convention,
                                                     const SuiteOptions& options = {});

/// Cartan-Weyl relations: R24, R25, R26a, R26b (including agreement of the two forms).
template <class Ring>
std::vector<RelationReport> verify_cartan_weyl(const CaoSet<typename Ring::value_type>& ops, const Ring& ring,
                                               const SuiteOptions& options = {});
template <class Ring>
std::vector<RelationReport> verify_cartan_weyl(const FockBasis& basis, const Ring& ring, Convention convention,
                                               const SuiteOptions& options = {});

/// Vacuum conditions, aggregated into one R20 report.
template <class Ring>
RelationReport verify_vacuum(const CaoSet<typename Ring::value_type>& ops, const Ring& ring, int p,
                             const SuiteOptions& options = {});
template <class Ring>
RelationReport verify_vacuum(const FockBasis& basis, const Ring& ring, Convention convention,
                             const SuiteOptions& options = {});

/// Classical triple relations at q = 1 (R15, with the R16 sub-family).
std::vector<RelationReport> verify_classical(const FockBasis& basis, const SuiteOptions& options = {});
std::vector<RelationReport> verify_classical(const FockBasis& basis, const CaoSet<Rational>& ops,
                                             const SuiteOptions& options = {});
/// Cartan-Kac and Serre relations on the reconstructed Chevalley generators (R11, R12a-e).
std::vector<RelationReport> verify_serre(const FockBasis& basis, const SuiteOptions& options = {});
std::vector<RelationReport> verify_serre(const FockBasis& basis, const ChevalleySet& chevalley,
                                         const SuiteOptions& options = {});
/// gl(n+1|m) relations on all (n+m+1)^4 index quadruples (R7).
std::vector<RelationReport> verify_gl(const FockBasis& basis, const SuiteOptions& options = {});

#define FOCKQ_DECLARE_SUITES(Ring)                                                                                   \
  extern template std::vector<RelationReport> verify_deformed_defining<Ring>(                                        \
      const CaoSet<Ring::value_type>&, const Ring&, const SuiteOptions&);                                            \
  extern template std::vector<RelationReport> verify_deformed_defining<Ring>(const FockBasis&, const Ring&,          \
                                                                             Convention, const SuiteOptions&);      \
  extern template std::vector<RelationReport> verify_cartan_weyl<Ring>(const CaoSet<Ring::value_type>&, const Ring&, \
                                                                       const SuiteOptions&);                        \
  extern template std::vector<RelationReport> verify_cartan_weyl<Ring>(const FockBasis&, const Ring&, Convention,    \
                                                                       const SuiteOptions&);

FOCKQ_DECLARE_SUITES(ExactRing)
FOCKQ_DECLARE_SUITES(NumericRing)
#undef FOCKQ_DECLARE_SUITES

extern template RelationReport verify_vacuum<ExactRing>(const CaoSet<LaurentPoly>&, const ExactRing&, int,
                                                        const SuiteOptions&);
extern template RelationReport verify_vacuum<NumericRing>(const CaoSet<Complex>&, const NumericRing&, int,
                                                          const SuiteOptions&);
extern template RelationReport verify_vacuum<ClassicalRing>(const CaoSet<Rational>&, const ClassicalRing&, int,
                                                            const SuiteOptions&);
extern template RelationReport verify_vacuum<ExactRing>(const FockBasis&, const ExactRing&, Convention,
                                                        const SuiteOptions&);
extern template RelationReport verify_vacuum<NumericRing>(const FockBasis&, const NumericRing&, Convention,
                                                          const SuiteOptions&);
extern template RelationReport verify_vacuum<ClassicalRing>(const FockBasis&, const ClassicalRing&, Convention,
                                                            const SuiteOptions&);

}  // namespace fockq
