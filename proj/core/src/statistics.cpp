#include "fockq/statistics.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "fockq/errors.hpp"
#include "fockq/operators.hpp"

namespace fockq {

int OrbitalConfig::total() const {
  int sum = 0;
  for (const auto& o : orbitals) sum += o.b + o.f;
  return sum;
}

std::string_view to_string(Verdict v) { return v == Verdict::Valid ? "Valid" : "Forbidden"; }

std::string_view to_string(ForbiddenReason r) {
  switch (r) {
    case ForbiddenReason::None: return "None";
    case ForbiddenReason::TotalExceedsOrder: return "TotalExceedsOrder";
    case ForbiddenReason::FermiExclusion: return "FermiExclusion";
  }
  return "?";
}

nlohmann::ordered_json to_json(const ConfigVerdict& v) {
  nlohmann::ordered_json j;
  j["verdict"] = std::string(to_string(v.verdict));
  if (v.verdict == Verdict::Forbidden) {
    j["reason"] = std::string(to_string(v.reason));
    if (v.reason == ForbiddenReason::FermiExclusion) j["orbital"] = v.orbital;
  } else {
    j["saturated"] = v.saturated;
  }
  return j;
}

ConfigVerdict validate_config(const OrbitalConfig& config) {
  if (config.p < 0) throw ArgumentError("validate_config: p must be non-negative");
  for (const auto& o : config.orbitals) {
    if (o.b < 0 || o.f < 0) throw ArgumentError("validate_config: particle counts must be non-negative");
  }
  ConfigVerdict out;
  const int total = config.total();
  if (total > config.p) {
    out.verdict = Verdict::Forbidden;
    out.reason = ForbiddenReason::TotalExceedsOrder;
    return out;
  }
  for (std::size_t k = 0; k < config.orbitals.size(); ++k) {
    if (config.orbitals[k].f > 1) {
      out.verdict = Verdict::Forbidden;
      out.reason = ForbiddenReason::FermiExclusion;
      out.orbital = static_cast<int>(k + 1);
      return out;
    }
  }
  out.saturated = total == config.p;
  return out;
}

std::vector<AllowedAddition> allowed_additions(const OrbitalConfig& config) {
  const ConfigVerdict v = validate_config(config);
  if (v.verdict != Verdict::Valid) throw ArgumentError("allowed_additions: config is not valid");
  std::vector<AllowedAddition> out(config.orbitals.size());
  if (v.saturated) return out;
  for (std::size_t k = 0; k < out.size(); ++k) {
    out[k].b = true;
    out[k].f = config.orbitals[k].f == 0;
  }
  return out;
}

namespace {

constexpr std::string_view kBullet = "•";
constexpr std::string_view kCircle = "◦";

Orbital parse_orbital(std::string_view seg, std::string_view whole) {
  Orbital o;
  std::size_t k = 0;
  auto fail = [&](const std::string& what) {
    throw ArgumentError("box string \"" + std::string(whole) + "\": " + what);
  };
  while (k < seg.size()) {
    const char c = seg[k];
    if (c == ' ' || c == '\t' || c == '~') {
      ++k;
      continue;
    }
    int count = 1;
    if (c >= '0' && c <= '9') {
      count = 0;
      while (k < seg.size() && seg[k] >= '0' && seg[k] <= '9') {
        count = count * 10 + (seg[k] - '0');
        if (count > 1000000) fail("count too large");
        ++k;
      }
      if (k == seg.size()) fail("count without particle token");
    }
    const std::string_view rest = seg.substr(k);
    if (rest.starts_with("b") || rest.starts_with(kBullet)) {
      o.b += count;
      k += rest.starts_with("b") ? 1 : kBullet.size();
    } else if (rest.starts_with("f") || rest.starts_with(kCircle)) {
      o.f += count;
      k += rest.starts_with("f") ? 1 : kCircle.size();
    } else {
      fail("unexpected character at byte " + std::to_string(k) + " of segment \"" + std::string(seg) + "\"");
    }
  }
  return o;
}

}  // namespace

OrbitalConfig parse_box_string(std::string_view text, int p) {
  std::string_view body = text;
  if (body.size() >= 2 && body.front() == '|' && body.back() == '|') body = body.substr(1, body.size() - 2);
  OrbitalConfig config;
  config.p = p;
  std::size_t start = 0;
  while (true) {
    const std::size_t bar = body.find('|', start);
    const std::string_view seg = body.substr(start, bar == std::string_view::npos ? body.npos : bar - start);
    config.orbitals.push_back(parse_orbital(seg, text));
    if (bar == std::string_view::npos) break;
    start = bar + 1;
  }
  return config;
}

std::string to_box_string(const OrbitalConfig& config) {
  std::string out = "|";
  for (const auto& o : config.orbitals) {
    for (int k = 0; k < o.b; ++k) out += kBullet;
    for (int k = 0; k < o.f; ++k) out += kCircle;
    if (o.b + o.f == 0) out += ' ';
    out += '|';
  }
  return out;
}

OccupationVector to_occupation(const OrbitalConfig& config) {
  const std::size_t n = config.orbitals.size();
  std::vector<int> r(2 * n);
  for (std::size_t k = 0; k < n; ++k) {
    r[k] = config.orbitals[k].b;
    r[k + n] = config.orbitals[k].f;
  }
  return OccupationVector(std::move(r));
}

OrbitalConfig to_config(const OccupationVector& r, int p) {
  if (r.size() % 2 != 0) throw ArgumentError("to_config: occupation vector needs n = m");
  const int n = static_cast<int>(r.size() / 2);
  OrbitalConfig config;
  config.p = p;
  for (int i = 1; i <= n; ++i) config.orbitals.push_back({r(i), r(i + n)});
  return config;
}

double energy(const OccupationVector& r, const EnergyLevels& levels) {
  const std::size_t n = levels.eps.size();
  if (r.size() != 2 * n) {
    throw ArgumentError("energy: occupation vector of length " + std::to_string(r.size()) + " needs " +
                        std::to_string(r.size() / 2) + " energy levels, got " + std::to_string(n));
  }
  double e = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const int i = static_cast<int>(k + 1);
    e += levels.eps[k] * (r(i) + r(i + static_cast<int>(n)));
  }
  return e;
}

namespace {

void require_balanced(const Signature& sig, std::size_t levels) {
  if (sig.n() != sig.m()) throw ArgumentError("statistics: the b/f picture needs n = m");
  if (levels != static_cast<std::size_t>(sig.n())) {
    throw ArgumentError("statistics: expected " + std::to_string(sig.n()) + " energy levels, got " +
                        std::to_string(levels));
  }
}

GradedMatrix<Rational> hamiltonian_from(const CaoSet<Rational>& ops, const std::vector<Rational>& eps,
                                        HamiltonianForm form) {
  const int n = static_cast<int>(eps.size());
  GradedMatrix<Rational> h(ops.H(1).dim(), Parity::Even);
  for (int i = 1; i <= n; ++i) {
    GradedMatrix<Rational> term =
        form == HamiltonianForm::Bracket
            ? bracket(ops.a(+1, i), ops.a(-1, i)) + bracket(ops.a(+1, i + n), ops.a(-1, i + n))
            : ops.H(i) + ops.H(i + n);
    h = h + term.scaled(eps[static_cast<std::size_t>(i - 1)]);
  }
  return h;
}

template <class T>
std::vector<RelationReport> ladder_reports(const CaoSet<T>& ops, const GradedMatrix<T>& h, const std::vector<T>& eps,
                                           double tol) {
  const int n = static_cast<int>(eps.size());
  std::vector<RelationReport> out;
  for (int i = 1; i <= n; ++i) {
    for (const char* kind : {"b", "f"}) {
      const int slot = kind[0] == 'b' ? i : i + n;
      for (int s : {+1, -1}) {
        RelationReport meta;
        meta.relation = RelationId::R33;
        meta.variant = kind;
        meta.indices = {i};
        meta.signs = {s};
        const auto& x = ops.a(s, slot);
        const T coeff = eps[static_cast<std::size_t>(i - 1)] * T(s);
        out.push_back(judge_relation(std::move(meta), commutator(h, x), x.scaled(coeff), tol));
      }
    }
  }
  return out;
}

}  // namespace

GradedMatrix<Rational> hamiltonian(const FockBasis& basis, const std::vector<Rational>& eps, HamiltonianForm form) {
  require_balanced(basis.signature(), eps.size());
  return hamiltonian_from(build_cao_set(basis, ClassicalRing{}), eps, form);
}

std::vector<RelationReport> verify_ladder_commutators(const Signature& sig, const std::vector<Rational>& eps,
                                                      HamiltonianForm form) {
  require_balanced(sig, eps.size());
  const FockBasis basis = enumerate(sig);
  const auto ops = build_cao_set(basis, ClassicalRing{});
  return ladder_reports(ops, hamiltonian_from(ops, eps, form), eps, 0.0);
}

std::vector<RelationReport> verify_ladder_commutators(const Signature& sig, const EnergyLevels& levels,
                                                      HamiltonianForm form) {
  require_balanced(sig, levels.eps.size());
  for (double e : levels.eps) {
    if (!std::isfinite(e)) throw ArgumentError("verify_ladder_commutators: energy levels must be finite");
  }
  const FockBasis basis = enumerate(sig);
  const auto exact_ops = build_cao_set(basis, ClassicalRing{});
  // H is linear in eps, so it is assembled from the unit-level Hamiltonians.
  const int n = sig.n();
    GradedMatrix<double> h(basis.size(), Parity::Even);
  for (int i = 1; i <= n; ++i) {
    std::vector<Rational> unit(static_cast<std::size_t>(n), Rational(0));
    unit[static_cast<std::size_t>(i - 1)] = 1;
    h = h + hamiltonian_from(exact_ops, unit, form).mapped<double>(to_double).scaled(levels.eps[static_cast<std::size_t>(i - 1)]);
  }
  CaoSet<double> ops;
  for (const auto& m : exact_ops.plus) ops.plus.push_back(m.mapped<double>(to_double));
  for (const auto& m : exact_ops.minus) ops.minus.push_back(m.mapped<double>(to_double));
  for (const auto& m : exact_ops.cartan) ops.cartan.push_back(m.mapped<double>(to_double));
  return ladder_reports(ops, h, levels.eps, 1e-12);
}

namespace {

// Neumaier's variant of Kahan summation.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      c_ += (sum_ - t) + x;
    } else {
      c_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + c_; }

 private:
  double sum_ = 0.0;
  double c_ = 0.0;
};

}  // namespace

PartitionResult partition_function(const FockBasis& basis, const EnergyLevels& levels, double beta) {
  const Signature& sig = basis.signature();
  require_balanced(sig, levels.eps.size());
  if (!std::isfinite(beta)) throw ArgumentError("partition_function: beta must be finite");
  const int n = sig.n();
  CompensatedSum z;
  std::vector<CompensatedSum> occ(static_cast<std::size_t>(n));
  for (const auto& r : basis.states()) {
    const double w = std::exp(-beta * energy(r, levels));
    z.add(w);
    for (int i = 1; i <= n; ++i) occ[static_cast<std::size_t>(i - 1)].add((r(i) + r(i + n)) * w);
  }
  PartitionResult out;
  out.Z = z.value();
  for (const auto& s : occ) out.mean_occupations.push_back(s.value() / out.Z);
  return out;
}

PartitionResult partition_function(const Signature& sig, const EnergyLevels& levels, double beta, std::size_t cap) {
  require_balanced(sig, levels.eps.size());
  return partition_function(enumerate(sig, cap), levels, beta);
}

std::map<int, std::uint64_t> state_count_by_total(const Signature& sig, std::size_t cap) {
  std::map<int, std::uint64_t> hist;
  for (int t = 0; t <= sig.p(); ++t) hist[t] = 0;
  const FockBasis basis = enumerate(sig, cap);
  for (const auto& r : basis.states()) ++hist[r.total()];
  return hist;
}

}  // namespace fockq
