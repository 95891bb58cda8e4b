#pragma once

// Fock basis of W_p: occupation vectors (r_1, ..., r_{n+m}) with bosonic
// slots unbounded, fermionic slots in {0, 1}, and total occupancy <= p.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include <nlohmann/json.hpp>

namespace fockq {

/// Z2 degree.
enum class Parity : std::uint8_t { Even = 0, Odd = 1 };

constexpr Parity operator+(Parity a, Parity b) {
  return static_cast<Parity>(static_cast<std::uint8_t>(a) ^ static_cast<std::uint8_t>(b));
}
constexpr int as_int(Parity a) { return static_cast<int>(a); }
/// (-1)^(a*b)
constexpr int sign_of_product(Parity a, Parity b) { return (as_int(a) & as_int(b)) ? -1 : 1; }

/// (n, m, p): n bosonic slots, m fermionic slots, order of statistics p.
class Signature {
 public:
  /// Throws ArgumentError unless n, m, p >= 0 and n + m >= 1.
  Signature(int n, int m, int p);

  int n() const noexcept { return n_; }
  int m() const noexcept { return m_; }
  int p() const noexcept { return p_; }
  /// Number of occupation slots, n + m.
  int rank() const noexcept { return n_ + m_; }

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  int n_;
  int m_;
  int p_;
};

/// Grading of slot i in [0; n+m]: even for i <= n, odd otherwise. Slot 0 is the
/// distinguished even direction and never carries an occupation number.
Parity theta(const Signature& sig, int i);

class OccupationVector {
 public:
  OccupationVector() = default;
  explicit OccupationVector(std::vector<int> r) : r_(std::move(r)) {}

  std::size_t size() const noexcept { return r_.size(); }
  /// 1-based slot access, matching the algebra's index convention.
  int operator()(int i) const { return r_.at(static_cast<std::size_t>(i - 1)); }
  std::span<const int> values() const noexcept { return r_; }
  int total() const;
  /// Copy with slot i shifted by delta.
  OccupationVector shifted(int i, int delta) const;

  friend auto operator<=>(const OccupationVector&, const OccupationVector&) = default;
  friend bool operator==(const OccupationVector&, const OccupationVector&) = default;

 private:
  std::vector<int> r_;
};

struct OccupationHash {
  std::size_t operator()(const OccupationVector& r) const noexcept;
};

/// Whether r obeys the occupancy rules of sig (right length, fermionic slots in
/// {0,1}, bosonic slots non-negative, total <= p).
bool is_admissible(const Signature& sig, const OccupationVector& r);

inline constexpr std::size_t kDefaultStateCap = 200000;

/// Lexicographically ordered, duplicate-free basis. Immutable once built.
class FockBasis {
 public:
  const Signature& signature() const noexcept { return sig_; }
  std::size_t size() const noexcept { return states_.size(); }
  std::span<const OccupationVector> states() const noexcept { return states_; }
  const OccupationVector& state(std::size_t k) const { return states_.at(k); }
  std::optional<std::size_t> index_of(const OccupationVector& r) const;
  /// The all-zero vector is lexicographically smallest.
  static constexpr std::size_t vacuum_index() noexcept { return 0; }

 private:
  friend FockBasis enumerate(const Signature& sig, std::size_t cap);
  explicit FockBasis(Signature sig) : sig_(sig) {}

  Signature sig_;
  std::vector<OccupationVector> states_;
  std::unordered_map<OccupationVector, std::size_t, OccupationHash> index_;
};

/// Throws StateCapExceeded once more than cap states have been produced.
FockBasis enumerate(const Signature& sig, std::size_t cap = kDefaultStateCap);

/// Closed form: sum_{f=0}^{min(m,p)} C(m,f) C(n+p-f, n). Throws std::overflow_error
/// when the count does not fit in 64 bits.
std::uint64_t dimension(const Signature& sig);

/// Eigenvalue of H_i on |p; r): p - (-1)^theta_i r_i - sum_j r_j.
long h_eigenvalue(const Signature& sig, int i, const OccupationVector& r);

/// {"signature":{"n":..,"m":..,"p":..},"dimension":..,"states":[[...],...]}
nlohmann::ordered_json to_json(const FockBasis& basis);
nlohmann::ordered_json to_json(const Signature& sig);

}  // namespace fockq
