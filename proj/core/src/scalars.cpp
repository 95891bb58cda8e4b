#include "fockq/scalars.hpp"

#include <sstream>

namespace fockq {

std::string to_string(Convention c) {
  return c == Convention::Orthonormal ? "orthonormal" : "unnormalized";
}

NumericRing::NumericRing(Complex q) : q_(q) {
  if (!std::isfinite(q.real()) || !std::isfinite(q.imag())) throw ArgumentError("NumericRing: q must be finite");
  if (q == Complex(0.0) || q == Complex(1.0) || q == Complex(-1.0)) {
    std::ostringstream os;
    os << "NumericRing: q = " << q << " is excluded (0, 1 and -1 are not allowed)";
    throw ArgumentError(os.str());
  }
}

NumericRing NumericRing::for_construction(Complex q) {
  if (!std::isfinite(q.real()) || !std::isfinite(q.imag())) throw ArgumentError("NumericRing: q must be finite");
  if (q == Complex(0.0)) throw ArgumentError("NumericRing: q = 0 is excluded");
  return NumericRing(q, Unchecked{});
}

}  // namespace fockq
