#pragma once

// The b/f particle picture of W_p for n = m: b_i = a_i, f_i = a_{i+n}. Orbital
// i holds r_i b-particles and r_{i+n} f-particles with energy eps_i. At most
// one f per orbital, at most p particles in total.

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "fockq/fockspace.hpp"
#include "fockq/qarith.hpp"
#include "fockq/relations.hpp"

namespace fockq {

struct Orbital {
  int b = 0;
  int f = 0;
};

struct OrbitalConfig {
  int p = 0;
  std::vector<Orbital> orbitals;

  int total() const;
};

enum class Verdict { Valid, Forbidden };
enum class ForbiddenReason { None, TotalExceedsOrder, FermiExclusion };

struct ConfigVerdict {
  Verdict verdict = Verdict::Valid;
  ForbiddenReason reason = ForbiddenReason::None;
  /// 1-based orbital for FermiExclusion, 0 otherwise.
  int orbital = 0;
  bool saturated = false;
};

std::string_view to_string(Verdict v);
std::string_view to_string(ForbiddenReason r);
nlohmann::ordered_json to_json(const ConfigVerdict& v);

/// Total is checked before Fermi exclusion. Throws ArgumentError on negative counts.
ConfigVerdict validate_config(const OrbitalConfig& config);

struct AllowedAddition {
  bool b = false;
  bool f = false;
};

/// Throws ArgumentError unless the config is Valid.
std::vector<AllowedAddition> allowed_additions(const OrbitalConfig& config);

/// Orbitals separated by '|'; each orbital a sequence of tokens, optionally
/// count-prefixed: "b" or U+2022 for a b-particle, "f" or U+25E6 for an
/// f-particle ("2b1f", "•◦•"). Blanks are ignored; an empty segment is an
/// empty orbital. One enclosing pair of '|' is stripped.
OrbitalConfig parse_box_string(std::string_view text, int p);

/// Boxes in the pictorial form, b-particles first: "|••◦|•| | |".
std::string to_box_string(const OrbitalConfig& config);

/// r = (b_1..b_n, f_1..f_n). Requires n = m = orbital count.
OccupationVector to_occupation(const OrbitalConfig& config);
OrbitalConfig to_config(const OccupationVector& r, int p);

/// eps_i, one per orbital.
struct EnergyLevels {
  std::vector<double> eps;
};

/// Sum_i eps_i (r_i + r_{i+n}). Throws ArgumentError if 2 * eps.size() != r.size().
double energy(const OccupationVector& r, const EnergyLevels& levels);

enum class HamiltonianForm {
  Bracket,    // sum_i eps_i ([[b_i^+, b_i^-]] + [[f_i^+, f_i^-]])
  CartanSum,  // sum_i eps_i (H_i + H_{i+n}); does not satisfy the ladder identities
};

/// The q = 1 Hamiltonian matrix on the unnormalized basis.
GradedMatrix<Rational> hamiltonian(const FockBasis& basis, const std::vector<Rational>& eps,
                                   HamiltonianForm form = HamiltonianForm::Bracket);

/// [H, b_i^s] = s eps_i b_i^s and [H, f_i^s] = s eps_i f_i^s, as R33 reports,
/// variants "b"/"f". Rational levels are judged exactly; real levels to 1e-12.
std::vector<RelationReport> verify_ladder_commutators(const Signature& sig, const std::vector<Rational>& eps,
                                                      HamiltonianForm form = HamiltonianForm::Bracket);
std::vector<RelationReport> verify_ladder_commutators(const Signature& sig, const EnergyLevels& levels,
                                                      HamiltonianForm form = HamiltonianForm::Bracket);

struct PartitionResult {
  double Z = 0.0;
  /// <b_i + f_i>, one per orbital.
  std::vector<double> mean_occupations;
};

/// Brute force over the enumerated basis with compensated summation.
PartitionResult partition_function(const Signature& sig, const EnergyLevels& levels, double beta,
                                   std::size_t cap = kDefaultStateCap);
PartitionResult partition_function(const FockBasis& basis, const EnergyLevels& levels, double beta);

/// N -> number of basis states with |r| = N, for N = 0..p.
std::map<int, std::uint64_t> state_count_by_total(const Signature& sig, std::size_t cap = kDefaultStateCap);

}  // namespace fockq
