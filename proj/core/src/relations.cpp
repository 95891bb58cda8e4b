#include "fockq/relations.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>

#include "fockq/parallel.hpp"

namespace fockq {

std::string_view to_string(RelationId id) {
  switch (id) {
    case RelationId::R19a: return "R19a";
    case RelationId::R19b: return "R19b";
    case RelationId::R19c: return "R19c";
    case RelationId::R19d: return "R19d";
    case RelationId::R19e: return "R19e";
    case RelationId::R21: return "R21";
    case RelationId::R24: return "R24";
    case RelationId::R25: return "R25";
    case RelationId::R26a: return "R26a";
    case RelationId::R26b: return "R26b";
    case RelationId::R15: return "R15";
    case RelationId::R16: return "R16";
    case RelationId::R7: return "R7";
    case RelationId::R11: return "R11";
    case RelationId::R12a: return "R12a";
    case RelationId::R12b: return "R12b";
    case RelationId::R12c: return "R12c";
    case RelationId::R12d: return "R12d";
    case RelationId::R12e: return "R12e";
    case RelationId::R20: return "R20";
    case RelationId::R33: return "R33";
  }
  return "?";
}

std::string_view to_string(Status s) {
  switch (s) {
    case Status::ExactZero: return "ExactZero";
    case Status::Residual: return "Residual";
    case Status::Failed: return "Failed";
    case Status::Skipped: return "Skipped";
  }
  return "?";
}

SuiteSummary summarize(const std::vector<RelationReport>& reports) {
  SuiteSummary s;
  for (const auto& r : reports) {
    if (r.status == Status::Skipped) {
      ++s.skipped;
    } else if (r.passed()) {
      ++s.passed;
    } else {
      ++s.failed;
    }
  }
  return s;
}

std::vector<RelationAggregate> aggregate(const std::vector<RelationReport>& reports) {
  std::map<RelationId, RelationAggregate> by_id;
  for (const auto& r : reports) {
    auto& agg = by_id.try_emplace(r.relation).first->second;
    agg.relation = r.relation;
    ++agg.instances;
    if (r.status == Status::Skipped) ++agg.skipped;
    if (r.status == Status::Failed) ++agg.failed;
    if (r.residual) agg.worst_residual = std::max(agg.worst_residual.value_or(0.0), *r.residual);
  }
  std::vector<RelationAggregate> out;
  for (auto& [id, agg] : by_id) out.push_back(agg);
  return out;
}

nlohmann::ordered_json to_json(const RelationReport& report) {
  nlohmann::ordered_json j;
  j["relation"] = std::string(to_string(report.relation));
  j["variant"] = report.variant;
  j["indices"] = report.indices;
  j["signs"] = report.signs;
  j["status"] = std::string(to_string(report.status));
  j["residual"] = report.residual ? nlohmann::ordered_json(*report.residual) : nlohmann::ordered_json(nullptr);
  return j;
}

nlohmann::ordered_json to_json(const std::vector<RelationReport>& reports) {
  auto j = nlohmann::ordered_json::array();
  for (const auto& r : reports) j.push_back(to_json(r));
  return j;
}

nlohmann::ordered_json to_json(const RelationAggregate& agg) {
  nlohmann::ordered_json j;
  j["relation"] = std::string(to_string(agg.relation));
  j["instances"] = agg.instances;
  j["failed"] = agg.failed;
  j["skipped"] = agg.skipped;
  j["worst_residual"] = agg.worst_residual ? nlohmann::ordered_json(*agg.worst_residual) : nlohmann::ordered_json(nullptr);
  return j;
}

int order_sign(int j, int k, int i) {
  if (j > k && k > i) return 1;
  if (j < k && k < i) return -1;
  return 0;
}

namespace {

// One task yields one or more reports; tasks are evaluated independently and
// flattened in generation order, which is the canonical order.
using Task = std::function<std::vector<RelationReport>()>;

std::vector<RelationReport> run_tasks(const std::vector<Task>& tasks, const SuiteOptions& options) {
  auto chunks = parallel_map(tasks.size(), options.workers, [&](std::size_t k) { return tasks[k](); });
  std::vector<RelationReport> out;
  for (auto& chunk : chunks) {
    for (auto& r : chunk) out.push_back(std::move(r));
  }
  return out;
}

RelationReport meta(RelationId id, std::string variant, std::vector<int> indices, std::vector<int> signs = {}) {
  RelationReport r;
  r.relation = id;
  r.variant = std::move(variant);
  r.indices = std::move(indices);
  r.signs = std::move(signs);
  return r;
}

RelationReport skipped(RelationId id, std::string variant, std::vector<int> indices, std::vector<int> signs = {}) {
  RelationReport r = meta(id, std::move(variant), std::move(indices), std::move(signs));
  r.status = Status::Skipped;
  return r;
}

template <class T>
GradedMatrix<T> zero_like(const GradedMatrix<T>& a) {
  return GradedMatrix<T>(a.dim(), a.degree());
}

// eta^{theta}: 1 for even theta, eta for odd theta.
int graded_sign_power(int eta, Parity th) { return th == Parity::Odd ? eta : 1; }

// (-1)^{theta}
int parity_sign(Parity th) { return th == Parity::Odd ? -1 : 1; }

template <class T>
constexpr bool kFloating = std::is_same_v<T, Complex> || std::is_same_v<T, double>;

// A matrix expression together with its envelope: the same expression
// evaluated on entrywise magnitudes with every sign taken positive. The
// envelope bounds each entry before cancellation and sets the residual scale.
// Exact types carry no envelope.
template <class T>
struct Tracked {
  GradedMatrix<T> value;
  GradedMatrix<double> envelope;

  explicit Tracked(GradedMatrix<T> v) : value(std::move(v)) {
    if constexpr (kFloating<T>) envelope = value.template mapped<double>([](const T& x) { return magnitude(x); });
  }
  Tracked(GradedMatrix<T> v, GradedMatrix<double> env) : value(std::move(v)), envelope(std::move(env)) {}

  double scale() const {
    if constexpr (kFloating<T>) return envelope.max_magnitude();
    return 0.0;
  }
};

template <class T>
GradedMatrix<double> add_envelopes(const GradedMatrix<double>& a, const GradedMatrix<double>& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  return a + b.with_degree(a.degree());
}

template <class T>
Tracked<T> operator*(const Tracked<T>& a, const Tracked<T>& b) {
  if constexpr (kFloating<T>) return {a.value * b.value, a.envelope * b.envelope};
  return Tracked<T>(a.value * b.value, {});
}

template <class T>
Tracked<T> operator+(const Tracked<T>& a, const Tracked<T>& b) {
  if constexpr (kFloating<T>) return {a.value + b.value, add_envelopes<T>(a.envelope, b.envelope)};
  return Tracked<T>(a.value + b.value, {});
}

template <class T>
Tracked<T> operator-(const Tracked<T>& a, const Tracked<T>& b) {
  if constexpr (kFloating<T>) return {a.value - b.value, add_envelopes<T>(a.envelope, b.envelope)};
  return Tracked<T>(a.value - b.value, {});
}

template <class T>
Tracked<T> scaled(const Tracked<T>& a, const T& c) {
  if constexpr (kFloating<T>) return {a.value.scaled(c), a.envelope.scaled(magnitude(c))};
  return Tracked<T>(a.value.scaled(c), {});
}

template <class T>
Tracked<T> tracked_q_bracket(const Tracked<T>& a, const Tracked<T>& b, const T& x) {
  if constexpr (kFloating<T>) {
    return {q_bracket(a.value, b.value, x),
            add_envelopes<T>(a.envelope * b.envelope, (b.envelope * a.envelope).scaled(magnitude(x)))};
  }
  return Tracked<T>(q_bracket(a.value, b.value, x), {});
}

template <class T>
Tracked<T> tracked_bracket(const Tracked<T>& a, const Tracked<T>& b) {
  return tracked_q_bracket(a, b, T(1));
}

template <class T>
Tracked<T> tracked_zero(const Tracked<T>& like) {
  return Tracked<T>(zero_like(like.value), GradedMatrix<double>(like.value.dim(), like.value.degree()));
}

template <class T>
RelationReport judge_tracked(RelationReport m, const Tracked<T>& lhs, const Tracked<T>& rhs, double tol) {
  return judge_relation(std::move(m), lhs.value, rhs.value, tol, std::max(lhs.scale(), rhs.scale()));
}

// The CAOs and Cartan powers of one representation, tracked.
template <class T>
struct TrackedOps {
  std::vector<Tracked<T>> plus, minus, cartan, L, Lbar;
  std::vector<Parity> theta;

  explicit TrackedOps(const CaoSet<T>& ops) {
    for (int i = 1; i <= ops.rank(); ++i) {
      plus.emplace_back(ops.a(+1, i));
      minus.emplace_back(ops.a(-1, i));
      cartan.emplace_back(ops.H(i));
      L.emplace_back(ops.L_pow(+1, i));
      Lbar.emplace_back(ops.L_pow(-1, i));
      theta.push_back(ops.a(+1, i).degree());
    }
  }
  int rank() const { return static_cast<int>(plus.size()); }
  const Tracked<T>& a(int sign, int i) const { return (sign > 0 ? plus : minus).at(idx(i)); }
  const Tracked<T>& H(int i) const { return cartan.at(idx(i)); }
  const Tracked<T>& L_pow(int power, int i) const { return (power > 0 ? L : Lbar).at(idx(i)); }
  Parity th(int i) const { return theta.at(idx(i)); }

 private:
  static std::size_t idx(int i) { return static_cast<std::size_t>(i - 1); }
};

// (L_i - Lbar_i)/(q - 1/q), entrywise on the diagonal.
template <class Ring>
Tracked<typename Ring::value_type> quantum_cartan(const TrackedOps<typename Ring::value_type>& ops, const Ring& ring,
                                                  int i) {
  using T = typename Ring::value_type;
  const T q_minus_qbar = ring.q_power(1) - ring.q_power(-1);
  const auto diff = ops.L_pow(+1, i) - ops.L_pow(-1, i);
  auto value = diff.value.template mapped<T>([&](const T& v) { return ring.divide(v, q_minus_qbar); });
  if constexpr (kFloating<T>) return {std::move(value), diff.envelope.scaled(1.0 / magnitude(q_minus_qbar))};
  return Tracked<T>(std::move(value), {});
}

// [[a_i^eta, a_j^{-eta}], a_k^eta]_{q^{xi(1 + (-1)^theta_i delta_ik)}}
template <class Ring>
Tracked<typename Ring::value_type> triple_lhs(const TrackedOps<typename Ring::value_type>& ops, const Ring& ring,
                                              int i, int j, int k, int xi, int eta) {
  const int exponent = xi * (1 + (i == k ? parity_sign(ops.th(i)) : 0));
  const auto inner = tracked_bracket(ops.a(eta, i), ops.a(-eta, j));
  return tracked_q_bracket(inner, ops.a(eta, k), ring.q_power(exponent));
}

// eta^{theta_j} delta_jk L_k^{-xi eta} a_i^eta
template <class Ring>
Tracked<typename Ring::value_type> triple_diagonal_term(const TrackedOps<typename Ring::value_type>& ops,
                                                        const Ring& ring, int i, int j, int k, int xi, int eta) {
  if (j != k) return tracked_zero(ops.a(eta, i));
  const int coeff = graded_sign_power(eta, ops.th(j));
  return scaled(ops.L_pow(-xi * eta, k) * ops.a(eta, i), ring.integer(coeff));
}

template <class T>
std::vector<RelationReport> judge_one(RelationReport m, const Tracked<T>& lhs, const Tracked<T>& rhs, double tol) {
  return {judge_tracked(std::move(m), lhs, rhs, tol)};
}

}  // namespace

template <class Ring>
std::vector<RelationReport> verify_deformed_defining(const CaoSet<typename Ring::value_type>& cao, const Ring& ring,
                                                     const SuiteOptions& options) {
  const TrackedOps<typename Ring::value_type> ops(cao);
  const int rank = ops.rank();
  const double tol = options.tolerance;
  std::vector<Task> tasks;

  for (int i = 1; i <= rank; ++i) {
    for (int j = 1; j <= rank; ++j) {
      tasks.push_back([&, i, j] {
        return judge_one(meta(RelationId::R19a, "", {i, j}), tracked_bracket(ops.H(i), ops.H(j)),
                         tracked_zero(ops.H(i)), tol);
      });
    }
  }

  for (int i = 1; i <= rank; ++i) {
    for (int j = 1; j <= rank; ++j) {
      for (int s : {+1, -1}) {
        tasks.push_back([&, i, j, s] {
          const int c = -s * (1 + (i == j ? parity_sign(ops.th(i)) : 0));
          return judge_one(meta(RelationId::R19b, "", {i, j}, {s}), tracked_bracket(ops.H(i), ops.a(s, j)),
                           scaled(ops.a(s, j), ring.integer(c)), tol);
        });
      }
    }
  }

  for (int i = 1; i <= rank; ++i) {
    tasks.push_back([&, i]() -> std::vector<RelationReport> {
      try {
        return judge_one(meta(RelationId::R19c, "", {i}), tracked_bracket(ops.a(-1, i), ops.a(+1, i)),
                         quantum_cartan(ops, ring, i), tol);
      } catch (const InexactDivision&) {
        RelationReport r = meta(RelationId::R19c, "inexact-division", {i});
        r.status = Status::Failed;
        return {r};
      }
    });
  }

  for (int i = 1; i <= rank; ++i) {
    for (int xi : {+1, -1}) {
      const int j = i + xi;
      if (j < 1 || j > rank) continue;
      for (int k = 1; k <= rank; ++k) {
        for (int eta : {+1, -1}) {
          tasks.push_back([&, i, j, k, xi, eta] {
            return judge_one(meta(RelationId::R19d, "", {i, j, k}, {xi, eta}), triple_lhs(ops, ring, i, j, k, xi, eta),
                             triple_diagonal_term(ops, ring, i, j, k, xi, eta), tol);
          });
        }
      }
    }
  }

  for (int xi : {+1, -1}) {
    tasks.push_back([&, xi]() -> std::vector<RelationReport> {
      if (rank < 2) return {skipped(RelationId::R19e, "a1a2", {1, 2}, {xi})};
      return judge_one(meta(RelationId::R19e, "a1a2", {1, 2}, {xi}),
                       tracked_q_bracket(ops.a(xi, 1), ops.a(xi, 2), ring.q_power(1)), tracked_zero(ops.a(xi, 1)),
                       tol);
    });
    tasks.push_back([&, xi] {
      return judge_one(meta(RelationId::R19e, "a1a1", {1, 1}, {xi}), tracked_bracket(ops.a(xi, 1), ops.a(xi, 1)),
                       tracked_zero(ops.a(xi, 1)), tol);
    });
  }

  for (int i = 1; i <= rank; ++i) {
    for (int j = i + 1; j <= rank; ++j) {
      for (int xi : {+1, -1}) {
        tasks.push_back([&, i, j, xi] {
          return judge_one(meta(RelationId::R21, "", {i, j}, {xi}),
                           tracked_q_bracket(ops.a(xi, i), ops.a(xi, j), ring.q_power(1)), tracked_zero(ops.a(xi, i)),
                           tol);
        });
      }
    }
  }

  return run_tasks(tasks, options);
}

template <class Ring>
std::vector<RelationReport> verify_deformed_defining(const FockBasis& basis, const Ring& ring, Convention convention,
                                                     const SuiteOptions& options) {
  return verify_deformed_defining(build_cao_set(basis, ring, convention), ring, options);
}

template <class Ring>
std::vector<RelationReport> verify_cartan_weyl(const CaoSet<typename Ring::value_type>& cao, const Ring& ring,
                                               const SuiteOptions& options) {
  using T = typename Ring::value_type;
  const TrackedOps<T> ops(cao);
  const int rank = ops.rank();
  const double tol = options.tolerance;
  std::vector<Task> tasks;

  // R24
  for (int i = 1; i <= rank; ++i) {
    tasks.push_back([&, i] {
      const Tracked<T> id(MatrixOver<Ring>::identity(ops.H(i).value.dim(), ring.integer(1)));
      std::vector<RelationReport> out;
      out.push_back(judge_tracked(meta(RelationId::R24, "L*Lbar", {i}), ops.L_pow(+1, i) * ops.L_pow(-1, i), id, tol));
      out.push_back(judge_tracked(meta(RelationId::R24, "Lbar*L", {i}), ops.L_pow(-1, i) * ops.L_pow(+1, i), id, tol));
      return out;
    });
  }
  for (int i = 1; i <= rank; ++i) {
    for (int j = 1; j <= rank; ++j) {
      tasks.push_back([&, i, j] {
        return judge_one(meta(RelationId::R24, "L-commute", {i, j}), ops.L_pow(+1, i) * ops.L_pow(+1, j),
                         ops.L_pow(+1, j) * ops.L_pow(+1, i), tol);
      });
    }
  }
  for (int i = 1; i <= rank; ++i) {
    for (int j = 1; j <= rank; ++j) {
      for (int s : {+1, -1}) {
        tasks.push_back([&, i, j, s] {
          const int exponent = -s * (1 + (i == j ? parity_sign(ops.th(i)) : 0));
          return judge_one(meta(RelationId::R24, "L*a", {i, j}, {s}), ops.L_pow(+1, i) * ops.a(s, j),
                           scaled(ops.a(s, j) * ops.L_pow(+1, i), ring.q_power(exponent)), tol);
        });
      }
    }
  }

  // R25
  for (int i = 1; i <= rank; ++i) {
    tasks.push_back([&, i]() -> std::vector<RelationReport> {
      try {
        return judge_one(meta(RelationId::R25, "bracket-L", {i}), tracked_bracket(ops.a(-1, i), ops.a(+1, i)),
                         quantum_cartan(ops, ring, i), tol);
      } catch (const InexactDivision&) {
        RelationReport r = meta(RelationId::R25, "inexact-division", {i});
        r.status = Status::Failed;
        return {r};
      }
    });
  }
  for (int i = 1; i <= rank; ++i) {
    for (int j = i + 1; j <= rank; ++j) {
      for (int eta : {+1, -1}) {
        tasks.push_back([&, i, j, eta] {
          return judge_one(meta(RelationId::R25, "q-commute", {i, j}, {eta}),
                           tracked_q_bracket(ops.a(eta, i), ops.a(eta, j), ring.q_power(1)),
                           tracked_zero(ops.a(eta, i)), tol);
        });
      }
    }
  }

  // R26: both printed right-hand sides, and their mutual agreement.
  for (int i = 1; i <= rank; ++i) {
    for (int j = 1; j <= rank; ++j) {
      if (i == j) continue;
      const int xi = j > i ? +1 : -1;
      for (int k = 1; k <= rank; ++k) {
        for (int eta : {+1, -1}) {
          tasks.push_back([&, i, j, k, xi, eta] {
            const auto lhs = triple_lhs(ops, ring, i, j, k, xi, eta);
            auto first = triple_diagonal_term(ops, ring, i, j, k, xi, eta);
            auto second = first;
            const int eps = order_sign(j, k, i);
            if (eps != 0) {
              const T q_minus_qbar = ring.q_power(1) - ring.q_power(-1);
              const auto kj = tracked_bracket(ops.a(eta, k), ops.a(-eta, j));
              const T c1 = ring.integer(parity_sign(ops.th(k)) * eps) * q_minus_qbar;
              const T c2 = ring.integer(sign_of_product(ops.th(k), ops.th(j)) * eps) * ring.q_power(xi) * q_minus_qbar;
              first = first + scaled(kj * ops.a(eta, i), c1);
              second = second + scaled(ops.a(eta, i) * kj, c2);
            }
            const std::vector<int> idx{i, j, k};
            const std::vector<int> signs{xi, eta};
            std::vector<RelationReport> out;
            out.push_back(judge_tracked(meta(RelationId::R26a, "first-form", idx, signs), lhs, first, tol));
            out.push_back(judge_tracked(meta(RelationId::R26b, "second-form", idx, signs), lhs, second, tol));
            out.push_back(judge_tracked(meta(RelationId::R26b, "forms-agree", idx, signs), first, second, tol));
            return out;
          });
        }
      }
    }
  }

  return run_tasks(tasks, options);
}

template <class Ring>
std::vector<RelationReport> verify_cartan_weyl(const FockBasis& basis, const Ring& ring, Convention convention,
                                               const SuiteOptions& options) {
  return verify_cartan_weyl(build_cao_set(basis, ring, convention), ring, options);
}
template <class Ring>
RelationReport verify_vacuum(const CaoSet<typename Ring::value_type>& ops, const Ring& ring, int p,
                             const SuiteOptions& options) {
  using M = MatrixOver<Ring>;
  const int rank = ops.rank();
  const std::size_t vac = FockBasis::vacuum_index();

  // Restricts a matrix to its vacuum column.
  auto vacuum_column = [&](const M& a) {
    std::vector<typename M::Entry> entries;
    for (auto& [row, v] : a.column(vac)) entries.push_back({row, vac, v});
    return M::from_entries(a.dim(), a.degree(), std::move(entries));
  };

  std::vector<RelationReport> parts;
  for (int i = 1; i <= rank; ++i) {
    parts.push_back(judge_relation(meta(RelationId::R20, "", {i}), vacuum_column(ops.a(-1, i)),
                                   zero_like(ops.a(-1, i)), options.tolerance));
  }
  for (int i = 1; i <= rank; ++i) {
    for (int j = 1; j <= rank; ++j) {
      if (i == j) continue;
      const auto b = bracket(ops.a(-1, i), ops.a(+1, j));
      parts.push_back(judge_relation(meta(RelationId::R20, "", {i, j}), vacuum_column(b), zero_like(b), options.tolerance));
    }
  }
  for (int i = 1; i <= rank; ++i) {
    const auto& h = ops.H(i);
    const auto expected = M::from_entries(h.dim(), Parity::Even, {{vac, vac, ring.integer(p)}});
    parts.push_back(judge_relation(meta(RelationId::R20, "", {i}), vacuum_column(h), expected, options.tolerance));
  }

  RelationReport out = meta(RelationId::R20, "vacuum", {});
  out.status = Ring::is_exact ? Status::ExactZero : Status::Residual;
  for (const auto& part : parts) {
    if (part.residual) out.residual = std::max(out.residual.value_or(0.0), *part.residual);
    if (!part.passed()) {
      out.status = Status::Failed;
      if (out.indices.empty()) out.indices = part.indices;
    }
  }
  return out;
}

template <class Ring>
RelationReport verify_vacuum(const FockBasis& basis, const Ring& ring, Convention convention,
                             const SuiteOptions& options) {
  return verify_vacuum(build_cao_set(basis, ring, convention), ring, basis.signature().p(), options);
}

std::vector<RelationReport> verify_classical(const FockBasis& basis, const SuiteOptions& options) {
  return verify_classical(basis, build_cao_set(basis, ClassicalRing{}), options);
}

std::vector<RelationReport> verify_classical(const FockBasis& basis, const CaoSet<Rational>& ops,
                                             const SuiteOptions& options) {
  using M = GradedMatrix<Rational>;
  const Signature& sig = basis.signature();
  const int rank = sig.rank();
  const double tol = options.tolerance;
  std::vector<Task> tasks;

  auto th = [&](int i) { return theta(sig, i); };

  // Triple relations, with the |i-j| <= 1 instances re-reported under R16.
  for (int i = 1; i <= rank; ++i) {
    for (int j = 1; j <= rank; ++j) {
      for (int k = 1; k <= rank; ++k) {
        tasks.push_back([&, i, j, k] {
          const auto inner = bracket(ops.a(+1, i), ops.a(-1, j));
          const bool adjacent = std::abs(i - j) <= 1;

          // [[a_i^+, a_j^-], a_k^-] = -(-1)^{theta_ij theta_k} d_ik a_j^- - (-1)^{theta_i} d_ij a_k^-
          M rhs_minus = zero_like(ops.a(-1, k));
          if (i == k) rhs_minus = rhs_minus - ops.a(-1, j).scaled(Rational(sign_of_product(th(i) + th(j), th(k))));
          if (i == j) rhs_minus = rhs_minus - ops.a(-1, k).scaled(Rational(parity_sign(th(i))));
          // [[a_i^+, a_j^-], a_k^+] = d_jk a_i^+ + (-1)^{theta_i} d_ij a_k^+
          M rhs_plus = zero_like(ops.a(+1, k));
          if (j == k) rhs_plus = rhs_plus + ops.a(+1, i);
          if (i == j) rhs_plus = rhs_plus + ops.a(+1, k).scaled(Rational(parity_sign(th(i))));

          std::vector<RelationReport> out;
          auto minus = judge_relation(meta(RelationId::R15, "triple", {i, j, k}, {-1}),
                                      bracket(inner, ops.a(-1, k)), rhs_minus, tol);
          auto plus = judge_relation(meta(RelationId::R15, "triple", {i, j, k}, {+1}),
                                     bracket(inner, ops.a(+1, k)), rhs_plus, tol);
          out.push_back(minus);
          out.push_back(plus);
          if (adjacent) {
            minus.relation = RelationId::R16;
            plus.relation = RelationId::R16;
            out.push_back(minus);
            out.push_back(plus);
          }
          return out;
        });
      }
    }
  }

  for (int i = 1; i <= rank; ++i) {
    for (int j = 1; j <= rank; ++j) {
      for (int xi : {+1, -1}) {
        tasks.push_back([&, i, j, xi] {
          auto r = judge_relation(meta(RelationId::R15, "same-sign", {i, j}, {xi}), bracket(ops.a(xi, i), ops.a(xi, j)),
                                  zero_like(ops.a(xi, i)), tol);
          std::vector<RelationReport> out{r};
          if (i == 1 && (j == 1 || j == 2)) {
            r.relation = RelationId::R16;
            out.push_back(r);
          }
          return out;
        });
      }
    }
  }

  return run_tasks(tasks, options);
}

std::vector<RelationReport> verify_serre(const FockBasis& basis, const SuiteOptions& options) {
  return verify_serre(basis, build_chevalley(basis), options);
}

std::vector<RelationReport> verify_serre(const FockBasis& basis, const ChevalleySet& ch, const SuiteOptions& options) {
  const Signature& sig = basis.signature();
  const int rank = sig.rank();
  const int n = sig.n();
  const double tol = options.tolerance;
  std::vector<Task> tasks;

  auto in_range = [&](int i) { return i >= 1 && i <= rank; };

  // R11
  for (int i = 1; i <= rank; ++i) {
    for (int j = 1; j <= rank; ++j) {
      tasks.push_back([&, i, j] {
        const Rational a(ch.alpha(i, j));
        std::vector<RelationReport> out;
        out.push_back(judge_relation(meta(RelationId::R11, "hh", {i, j}), commutator(ch.h_hat(i), ch.h_hat(j)),
                                     zero_like(ch.h_hat(i)), tol));
        out.push_back(judge_relation(meta(RelationId::R11, "he", {i, j}), commutator(ch.h_hat(i), ch.e_hat(j)),
                                     ch.e_hat(j).scaled(a), tol));
        out.push_back(judge_relation(meta(RelationId::R11, "hf", {i, j}), commutator(ch.h_hat(i), ch.f_hat(j)),
                                     ch.f_hat(j).scaled(Rational(-a)), tol));
        out.push_back(judge_relation(meta(RelationId::R11, "ef", {i, j}), bracket(ch.e_hat(i), ch.f_hat(j)),
                                     i == j ? ch.h_hat(i) : zero_like(ch.h_hat(i)), tol));
        return out;
      });
    }
  }

  // R12a: [e_i, e_j] = [f_i, f_j] = 0 for |i - j| != 1
  for (int i = 1; i <= rank; ++i) {
    for (int j = 1; j <= rank; ++j) {
      if (std::abs(i - j) == 1) continue;
      tasks.push_back([&, i, j] {
        std::vector<RelationReport> out;
        out.push_back(judge_relation(meta(RelationId::R12a, "e", {i, j}), commutator(ch.e_hat(i), ch.e_hat(j)),
                                     zero_like(ch.e_hat(i)), tol));
        out.push_back(judge_relation(meta(RelationId::R12a, "f", {i, j}), commutator(ch.f_hat(i), ch.f_hat(j)),
                                     zero_like(ch.f_hat(i)), tol));
        return out;
      });
    }
  }

  // R12b: e_{n+1}^2 = f_{n+1}^2 = 0
  tasks.push_back([&]() -> std::vector<RelationReport> {
    const int odd = n + 1;
    if (!in_range(odd)) return {skipped(RelationId::R12b, "e", {odd}), skipped(RelationId::R12b, "f", {odd})};
    return {judge_relation(meta(RelationId::R12b, "e", {odd}), ch.e_hat(odd) * ch.e_hat(odd),
                           zero_like(ch.h_hat(odd)), tol),
            judge_relation(meta(RelationId::R12b, "f", {odd}), ch.f_hat(odd) * ch.f_hat(odd),
                           zero_like(ch.h_hat(odd)), tol)};
  });

  // R12c: [x_i, [x_i, x_{i+1}]] = 0, i != n+1;  R12d: [x_{i+1}, [x_{i+1}, x_i]] = 0, i != n
  auto nested = [&](RelationId id, int outer, int inner_other, int i, int j) {
    return std::vector<RelationReport>{
        judge_relation(meta(id, "e", {i, j}),
                       commutator(ch.e_hat(outer), commutator(ch.e_hat(outer), ch.e_hat(inner_other))),
                       zero_like(ch.e_hat(inner_other)), tol),
        judge_relation(meta(id, "f", {i, j}),
                       commutator(ch.f_hat(outer), commutator(ch.f_hat(outer), ch.f_hat(inner_other))),
                       zero_like(ch.f_hat(inner_other)), tol)};
  };
  // Windows i, i + 1 within 1..rank; at rank 1 the single window is reported Skipped.
  const int last_window = std::max(rank - 1, 1);
  for (int i = 1; i <= last_window; ++i) {
    if (i == n + 1) continue;
    tasks.push_back([&, i]() -> std::vector<RelationReport> {
      if (!in_range(i + 1)) return {skipped(RelationId::R12c, "e", {i, i + 1}), skipped(RelationId::R12c, "f", {i, i + 1})};
      return nested(RelationId::R12c, i, i + 1, i, i + 1);
    });
  }
  for (int i = 1; i <= last_window; ++i) {
    if (i == n) continue;
    tasks.push_back([&, i]() -> std::vector<RelationReport> {
      if (!in_range(i + 1)) return {skipped(RelationId::R12d, "e", {i, i + 1}), skipped(RelationId::R12d, "f", {i, i + 1})};
      return nested(RelationId::R12d, i + 1, i, i, i + 1);
    });
  }

  // R12e: {[x_{n+1}, x_n], [x_{n+1}, x_{n+2}]} = 0
  tasks.push_back([&]() -> std::vector<RelationReport> {
    const std::vector<int> idx{n, n + 1, n + 2};
    if (!in_range(n) || !in_range(n + 2)) {
      return {skipped(RelationId::R12e, "e", idx), skipped(RelationId::R12e, "f", idx)};
    }
    auto check = [&](const std::vector<GradedMatrix<Rational>>& x, const char* variant) {
      const auto& mid = x.at(static_cast<std::size_t>(n));
      const auto left = commutator(mid, x.at(static_cast<std::size_t>(n - 1)));
      const auto right = commutator(mid, x.at(static_cast<std::size_t>(n + 1)));
      const auto lhs = anticommutator(left, right);
      return judge_relation(meta(RelationId::R12e, variant, idx), lhs, zero_like(lhs), tol);
    };
    return {check(ch.e, "e"), check(ch.f, "f")};
  });

  return run_tasks(tasks, options);
}

std::vector<RelationReport> verify_gl(const FockBasis& basis, const SuiteOptions& options) {
  const Signature& sig = basis.signature();
  const GlGenerators gen(basis);
  const int rank = sig.rank();
  const double tol = options.tolerance;
  std::vector<Task> tasks;
  for (int i = 0; i <= rank; ++i) {
    for (int j = 0; j <= rank; ++j) {
      tasks.push_back([&, i, j] {
        std::vector<RelationReport> out;
        const Parity th_ij = theta(sig, i) + theta(sig, j);
        for (int k = 0; k <= rank; ++k) {
          for (int l = 0; l <= rank; ++l) {
            const Parity th_kl = theta(sig, k) + theta(sig, l);
            GradedMatrix<Rational> rhs = zero_like(gen(i, l));
            if (j == k) rhs = rhs + gen(i, l);
            if (i == l) rhs = rhs - gen(k, j).scaled(Rational(sign_of_product(th_ij, th_kl)));
            out.push_back(judge_relation(meta(RelationId::R7, "", {i, j, k, l}), bracket(gen(i, j), gen(k, l)), rhs, tol));
          }
        }
        return out;
      });
    }
  }
  return run_tasks(tasks, options);
}

#define FOCKQ_INSTANTIATE_SUITES(Ring)                                                                              \
  template std::vector<RelationReport> verify_deformed_defining<Ring>(const CaoSet<Ring::value_type>&, const Ring&, \
                                                                      const SuiteOptions&);                         \
  template std::vector<RelationReport> verify_deformed_defining<Ring>(const FockBasis&, const Ring&, Convention,    \
                                                                      const SuiteOptions&);                         \
  template std::vector<RelationReport> verify_cartan_weyl<Ring>(const CaoSet<Ring::value_type>&, const Ring&,       \
                                                                const SuiteOptions&);                               \
  template std::vector<RelationReport> verify_cartan_weyl<Ring>(const FockBasis&, const Ring&, Convention,          \
                                                                const SuiteOptions&);

FOCKQ_INSTANTIATE_SUITES(ExactRing)
FOCKQ_INSTANTIATE_SUITES(NumericRing)
#undef FOCKQ_INSTANTIATE_SUITES

template RelationReport verify_vacuum<ExactRing>(const CaoSet<LaurentPoly>&, const ExactRing&, int, const SuiteOptions&);
template RelationReport verify_vacuum<NumericRing>(const CaoSet<Complex>&, const NumericRing&, int, const SuiteOptions&);
template RelationReport verify_vacuum<ClassicalRing>(const CaoSet<Rational>&, const ClassicalRing&, int,
                                                     const SuiteOptions&);
template RelationReport verify_vacuum<ExactRing>(const FockBasis&, const ExactRing&, Convention, const SuiteOptions&);
template RelationReport verify_vacuum<NumericRing>(const FockBasis&, const NumericRing&, Convention,
                                                   const SuiteOptions&);
template RelationReport verify_vacuum<ClassicalRing>(const FockBasis&, const ClassicalRing&, Convention,
                                                     const SuiteOptions&);

}  // namespace fockq
