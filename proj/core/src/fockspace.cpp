#include "fockq/fockspace.hpp"

#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "fockq/errors.hpp"

namespace fockq {

Signature::Signature(int n, int m, int p) : n_(n), m_(m), p_(p) {
  if (n < 0 || m < 0 || p < 0) throw ArgumentError("Signature: n, m, p must be non-negative");
  if (n + m < 1) throw ArgumentError("Signature: n + m must be at least 1");
}

Parity theta(const Signature& sig, int i) {
  if (i < 0 || i > sig.rank()) {
    throw ArgumentError("theta: index " + std::to_string(i) + " outside [0;" + std::to_string(sig.rank()) + "]");
  }
  return i <= sig.n() ? Parity::Even : Parity::Odd;
}

int OccupationVector::total() const { return std::accumulate(r_.begin(), r_.end(), 0); }

OccupationVector OccupationVector::shifted(int i, int delta) const {
  OccupationVector out = *this;
  out.r_.at(static_cast<std::size_t>(i - 1)) += delta;
  return out;
}

std::size_t OccupationHash::operator()(const OccupationVector& r) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (int v : r.values()) {
    h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

bool is_admissible(const Signature& sig, const OccupationVector& r) {
  if (r.size() != static_cast<std::size_t>(sig.rank())) return false;
  int total = 0;
  for (int i = 1; i <= sig.rank(); ++i) {
    const int ri = r(i);
    if (ri < 0) return false;
    if (theta(sig, i) == Parity::Odd && ri > 1) return false;
    total += ri;
  }
  return total <= sig.p();
}

std::optional<std::size_t> FockBasis::index_of(const OccupationVector& r) const {
  auto it = index_.find(r);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

namespace {

void enumerate_slots(const Signature& sig, int slot, int remaining, std::vector<int>& current,
                     std::vector<OccupationVector>& out, std::size_t cap) {
  if (slot > sig.rank()) {
    if (out.size() >= cap) {
      throw StateCapExceeded("enumerate: more than " + std::to_string(cap) + " states");
    }
    out.emplace_back(current);
    return;
  }
  const int upper = theta(sig, slot) == Parity::Odd ? std::min(1, remaining) : remaining;
  for (int v = 0; v <= upper; ++v) {
    current[static_cast<std::size_t>(slot - 1)] = v;
    enumerate_slots(sig, slot + 1, remaining - v, current, out, cap);
  }
  current[static_cast<std::size_t>(slot - 1)] = 0;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("dimension: count overflows 64 bits");
  return r;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("dimension: count overflows 64 bits");
  return r;
}

// C(n, k) with the running product kept exact: after step j it equals C(n-k+j, j).
std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t j = 1; j <= k; ++j) {
    const std::uint64_t g = std::gcd(r, j);
    r = checked_mul(r / g, (n - k + j) / (j / g));
  }
  return r;
}

}  // namespace

FockBasis enumerate(const Signature& sig, std::size_t cap) {
  FockBasis basis(sig);
  std::vector<int> current(static_cast<std::size_t>(sig.rank()), 0);
  // Slot 1 varies slowest, so the output is already lexicographically ascending.
  enumerate_slots(sig, 1, sig.p(), current, basis.states_, cap);
  basis.index_.reserve(basis.states_.size());
  for (std::size_t k = 0; k < basis.states_.size(); ++k) basis.index_.emplace(basis.states_[k], k);
  return basis;
}

std::uint64_t dimension(const Signature& sig) {
  const auto n = static_cast<std::uint64_t>(sig.n());
  const auto m = static_cast<std::uint64_t>(sig.m());
  const auto p = static_cast<std::uint64_t>(sig.p());
  std::uint64_t total = 0;
  for (std::uint64_t f = 0; f <= std::min(m, p); ++f) {
    total = checked_add(total, checked_mul(binomial(m, f), binomial(n + p - f, n)));
  }
  return total;
}

long h_eigenvalue(const Signature& sig, int i, const OccupationVector& r) {
  if (i < 1 || i > sig.rank()) {
    throw ArgumentError("h_eigenvalue: index " + std::to_string(i) + " outside [1;" + std::to_string(sig.rank()) + "]");
  }
  const long sign = theta(sig, i) == Parity::Even ? 1 : -1;
  return static_cast<long>(sig.p()) - sign * r(i) - r.total();
}

nlohmann::ordered_json to_json(const Signature& sig) {
  nlohmann::ordered_json j;
  j["n"] = sig.n();
  j["m"] = sig.m();
  j["p"] = sig.p();
  return j;
}

nlohmann::ordered_json to_json(const FockBasis& basis) {
  nlohmann::ordered_json j;
  j["signature"] = to_json(basis.signature());
  j["dimension"] = basis.size();
  auto states = nlohmann::ordered_json::array();
  for (const auto& r : basis.states()) {
    states.push_back(std::vector<int>(r.values().begin(), r.values().end()));
  }
  j["states"] = std::move(states);
  return j;
}

}  // namespace fockq
