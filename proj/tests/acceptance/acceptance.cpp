// One line per acceptance criterion; exit status 1 if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "fockq/fockspace.hpp"
#include "fockq/operators.hpp"
#include "fockq/relations.hpp"
#include "fockq/statistics.hpp"

using namespace fockq;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::vector<Signature> grid(int max_p) {
  std::vector<Signature> out;
  for (int n = 0; n <= 4; ++n) {
    for (int m = 0; n + m <= 4; ++m) {
      if (n + m == 0) continue;
      for (int p = 0; p <= max_p; ++p) out.emplace_back(n, m, p);
    }
  }
  return out;
}

std::string label(const Signature& s) {
  return "(" + std::to_string(s.n()) + "," + std::to_string(s.m()) + "," + std::to_string(s.p()) + ")";
}

void append(std::vector<RelationReport>& into, std::vector<RelationReport> more) {
  into.insert(into.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
}

// Non-skipped reports must all carry `want`.
bool all_with_status(const std::vector<RelationReport>& reports, Status want, std::string& first_bad) {
  for (const auto& r : reports) {
    if (r.status == Status::Skipped || r.status == want) continue;
    if (first_bad.empty()) first_bad = std::string(to_string(r.relation)) + " " + r.variant;
    return false;
  }
  return true;
}

Outcome exact_deformed() {
  Outcome o;
  std::size_t checked = 0;
  const SuiteOptions opts{0.0, 0};
  for (const auto& sig : grid(4)) {
    const FockBasis basis = enumerate(sig);
    const auto ops = build_cao_set(basis, ExactRing{});
    std::vector<RelationReport> reports = verify_deformed_defining(ops, ExactRing{}, opts);
    append(reports, verify_cartan_weyl(ops, ExactRing{}, opts));
    std::string bad;
    if (!all_with_status(reports, Status::ExactZero, bad)) {
      o.pass = false;
      o.detail = "nonzero " + bad + " at " + label(sig);
      return o;
    }
    checked += reports.size() - summarize(reports).skipped;
  }
  o.detail = std::to_string(checked) + " instances structurally zero";
  return o;
}

Outcome classical() {
  Outcome o;
  std::size_t checked = 0;
  bool serre_12e_seen[2] = {false, false};
  const SuiteOptions opts{0.0, 0};
  for (const auto& sig : grid(4)) {
    const FockBasis basis = enumerate(sig);
    std::vector<RelationReport> reports = verify_classical(basis, opts);
    append(reports, verify_gl(basis, opts));
    const auto serre = verify_serre(basis, opts);
    append(reports, serre);
    reports.push_back(verify_vacuum(basis, ClassicalRing{}, Convention::Unnormalized, opts));
    std::string bad;
    if (!all_with_status(reports, Status::ExactZero, bad)) {
      o.pass = false;
      o.detail = "nonzero " + bad + " at " + label(sig);
      return o;
    }
    for (const auto& r : serre) {
      if (r.relation != RelationId::R12e || r.status != Status::ExactZero) continue;
      if (sig.n() == 1 && sig.m() == 2) serre_12e_seen[0] = true;
      if (sig.n() == 2 && sig.m() == 2) serre_12e_seen[1] = true;
    }
    checked += reports.size() - summarize(reports).skipped;
  }
  if (!serre_12e_seen[0] || !serre_12e_seen[1]) {
    o.pass = false;
    o.detail = "R12e not exercised at (1,2) and (2,2)";
    return o;
  }
  o.detail = std::to_string(checked) + " instances structurally zero, R12e exercised at (1,2) and (2,2)";
  return o;
}

Outcome numeric(double tolerance) {
  Outcome o;
  const Complex qs[] = {{0.7, 0.0}, {1.3, 0.0}, {0.5, 0.75}};
  double worst_residual = 0.0;
  double worst_change = 0.0;
  std::size_t checked = 0;
  const SuiteOptions opts{tolerance, 0};
  for (const auto& sig : grid(4)) {
    const FockBasis basis = enumerate(sig);
    for (const Complex q : qs) {
      const NumericRing ring(q);
      const auto ops = build_cao_set(basis, ring, Convention::Orthonormal);
      std::vector<RelationReport> reports = verify_deformed_defining(ops, ring, opts);
      append(reports, verify_cartan_weyl(ops, ring, opts));
      reports.push_back(verify_vacuum(ops, ring, sig.p(), opts));
      for (const auto& r : reports) {
        if (r.status == Status::Skipped) continue;
        ++checked;
        worst_residual = std::max(worst_residual, r.residual.value_or(0.0));
        if (r.status != Status::Residual && o.pass) {
          o.pass = false;
          o.detail = std::string(to_string(r.relation)) + " " + r.variant + " failed at " + label(sig);
        }
      }
      // The diagonal conjugation is defined with real positive square roots.
      if (q.imag() == 0.0) worst_change = std::max(worst_change, change_of_basis_check(basis, q.real()));
    }
  }
  if (worst_change >= tolerance && o.pass) {
    o.pass = false;
    o.detail = "change of basis deviation " + std::to_string(worst_change);
  }
  if (o.pass) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "%zu instances, max residual %.3g, max change-of-basis deviation %.3g", checked,
                  worst_residual, worst_change);
    o.detail = buf;
  }
  return o;
}

Outcome dimensions() {
  Outcome o;
  for (const auto& sig : grid(8)) {
    if (dimension(sig) != enumerate(sig).size()) {
      o.pass = false;
      o.detail = "mismatch at " + label(sig);
      return o;
    }
  }
  const bool spots = dimension(Signature(1, 1, 1)) == 3 && dimension(Signature(2, 0, 2)) == 6 &&
                     dimension(Signature(0, 2, 1)) == 3;
  o.pass = spots;
  o.detail = spots ? std::to_string(grid(8).size()) + " signatures, spot values reproduced" : "spot values differ";
  return o;
}

OrbitalConfig six_orbitals(std::vector<Orbital> filled) {
  filled.resize(6);
  return OrbitalConfig{5, filled};
}

Outcome box_examples() {
  Outcome o;
  const ConfigVerdict v1 = validate_config(six_orbitals({{3, 0}, {2, 1}}));
  const bool ex1 = v1.verdict == Verdict::Forbidden && v1.reason == ForbiddenReason::TotalExceedsOrder;

  const OrbitalConfig c2 = six_orbitals({{2, 1}, {1, 1}});
  const ConfigVerdict v2 = validate_config(c2);
  bool ex2 = v2.verdict == Verdict::Valid && v2.saturated;
  for (const auto& a : allowed_additions(c2)) ex2 = ex2 && !a.b && !a.f;

  const ConfigVerdict v3 = validate_config(six_orbitals({{2, 1}, {0, 2}}));
  const bool ex3 =
      v3.verdict == Verdict::Forbidden && v3.reason == ForbiddenReason::FermiExclusion && v3.orbital == 2;

  const OrbitalConfig c4 = six_orbitals({{2, 1}, {1, 0}});
  const ConfigVerdict v4 = validate_config(c4);
  bool ex4 = v4.verdict == Verdict::Valid && !v4.saturated;
  const auto adds = allowed_additions(c4);
  for (std::size_t k = 0; k < adds.size(); ++k) ex4 = ex4 && adds[k].b && adds[k].f == (k != 0);

  o.pass = ex1 && ex2 && ex3 && ex4;
  o.detail = std::string("examples ") + (ex1 ? "1 " : "") + (ex2 ? "2 " : "") + (ex3 ? "3 " : "") +
             (ex4 ? "4 " : "") + "match";
  return o;
}

Outcome ladder() {
  Outcome o;
  std::size_t checked = 0;
  std::size_t control_failures = 0;
  std::size_t control_signatures = 0;
  for (const auto& sig : grid(4)) {
    if (sig.n() != sig.m()) continue;
    std::vector<Rational> eps;
    for (int i = 1; i <= sig.n(); ++i) eps.emplace_back(2 * i - 1, 3);
    const auto reports = verify_ladder_commutators(sig, eps);
    std::string bad;
    if (!all_with_status(reports, Status::ExactZero, bad)) {
      o.pass = false;
      o.detail = "ladder " + bad + " failed at " + label(sig);
      return o;
    }
    checked += reports.size();
    if (sig.p() == 0) continue;
    const std::size_t fails = summarize(verify_ladder_commutators(sig, eps, HamiltonianForm::CartanSum)).failed;
    control_failures += fails;
    control_signatures += fails > 0;
  }
  o.pass = control_signatures > 0;
  o.detail = std::to_string(checked) + " identities exact; Cartan-sum control fails " +
             std::to_string(control_failures) + " identities on " + std::to_string(control_signatures) +
             " signatures";
  return o;
}

Outcome partition() {
  Outcome o;
  double worst = 0.0;
  for (const double beta : {0.0, 0.5, 1.0, 2.0}) {
    const double z = partition_function(Signature(1, 1, 1), EnergyLevels{{1.0}}, beta).Z;
    worst = std::max(worst, std::abs(z - (1.0 + 2.0 * std::exp(-beta))));
  }
  if (worst >= 1e-12) {
    o.pass = false;
    o.detail = "deviation " + std::to_string(worst);
    return o;
  }
  std::size_t count = 0;
  for (const auto& sig : grid(4)) {
    if (sig.n() != sig.m()) continue;
    EnergyLevels levels;
    for (int i = 1; i <= sig.n(); ++i) levels.eps.push_back(0.5 * i);
    if (partition_function(sig, levels, 0.0).Z != static_cast<double>(dimension(sig))) {
      o.pass = false;
      o.detail = "Z(0) differs from dimension at " + label(sig);
      return o;
    }
    ++count;
  }
  char buf[120];
  std::snprintf(buf, sizeof buf, "max |Z - (1 + 2e^-beta)| = %.3g; Z(0) = dimension on %zu signatures", worst, count);
  o.detail = buf;
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {"exact deformed suite over the grid", exact_deformed},
      {"classical, gl, Serre and vacuum suites at q = 1", classical},
      {"numeric orthonormal suite at q = 7/10, 13/10, 1/2 + 3i/4 (tol 1e-9)", [] { return numeric(1e-9); }},
      {"dimension formula against enumeration up to p = 8", dimensions},
      {"box-diagram examples with p = 5", box_examples},
      {"ladder identities with the Cartan-sum negative control", ladder},
      {"partition function sanity (tol 1e-12)", partition},
  };
  int failures = 0;
  int index = 0;
  for (const auto& c : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] %d. %s: %s (%.2fs)\n", o.pass ? "PASS" : "FAIL", index, c.name, o.detail.c_str(), secs);
    failures += !o.pass;
  }
  std::fflush(stdout);
  return failures == 0 ? 0 : 1;
}
