#pragma once

// Sparse Z2-graded square matrices in CSR form. Entries are kept row-major,
// columns ascending within a row, and no stored entry is zero.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "fockq/errors.hpp"
#include "fockq/fockspace.hpp"
#include "fockq/scalars.hpp"

namespace fockq {

template <class T>
class GradedMatrix {
 public:
  using value_type = T;

  struct Entry {
    std::size_t row;
    std::size_t col;
    T value;
  };

  GradedMatrix() : GradedMatrix(0, Parity::Even) {}
  GradedMatrix(std::size_t dim, Parity degree) : dim_(dim), degree_(degree), row_ptr_(dim + 1, 0) {}

  /// Sums duplicate coordinates and drops zeros.
  static GradedMatrix from_entries(std::size_t dim, Parity degree, std::vector<Entry> entries) {
    for (const auto& e : entries) {
      if (e.row >= dim || e.col >= dim) throw ArgumentError("GradedMatrix: entry outside " + std::to_string(dim));
    }
    std::stable_sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
      return a.row != b.row ? a.row < b.row : a.col < b.col;
    });
    GradedMatrix out(dim, degree);
    out.cols_.reserve(entries.size());
    out.vals_.reserve(entries.size());
    std::size_t k = 0;
    while (k < entries.size()) {
      const std::size_t r = entries[k].row, c = entries[k].col;
      T sum = std::move(entries[k].value);
      for (++k; k < entries.size() && entries[k].row == r && entries[k].col == c; ++k) sum += entries[k].value;
      if (is_zero_value(sum)) continue;
      out.cols_.push_back(c);
      out.vals_.push_back(std::move(sum));
      ++out.row_ptr_[r + 1];
    }
    std::partial_sum(out.row_ptr_.begin(), out.row_ptr_.end(), out.row_ptr_.begin());
    return out;
  }

  static GradedMatrix diagonal(Parity degree, std::vector<T> diag) {
    std::vector<Entry> entries;
    entries.reserve(diag.size());
    for (std::size_t k = 0; k < diag.size(); ++k) entries.push_back({k, k, std::move(diag[k])});
    return from_entries(diag.size(), degree, std::move(entries));
  }

  static GradedMatrix identity(std::size_t dim, const T& one) { return diagonal(Parity::Even, std::vector<T>(dim, one)); }

  std::size_t dim() const noexcept { return dim_; }
  Parity degree() const noexcept { return degree_; }
  std::size_t nnz() const noexcept { return vals_.size(); }
  bool is_zero() const noexcept { return vals_.empty(); }

  /// Stored value or nullptr.
  const T* find(std::size_t row, std::size_t col) const {
    if (row >= dim_) return nullptr;
    auto first = cols_.begin() + static_cast<std::ptrdiff_t>(row_ptr_[row]);
    auto last = cols_.begin() + static_cast<std::ptrdiff_t>(row_ptr_[row + 1]);
    auto it = std::lower_bound(first, last, col);
    if (it == last || *it != col) return nullptr;
    return &vals_[static_cast<std::size_t>(it - cols_.begin())];
  }

  /// Row-major visit: f(row, col, value).
  template <class F>
  void for_each(F&& f) const {
    for (std::size_t r = 0; r < dim_; ++r) {
      for (std::size_t k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k) f(r, cols_[k], vals_[k]);
    }
  }

  std::vector<Entry> entries() const {
    std::vector<Entry> out;
    out.reserve(nnz());
    for_each([&](std::size_t r, std::size_t c, const T& v) { out.push_back({r, c, v}); });
    return out;
  }

  /// Non-zero entries of one column, ascending row.
  std::vector<std::pair<std::size_t, T>> column(std::size_t col) const {
    std::vector<std::pair<std::size_t, T>> out;
    for_each([&](std::size_t r, std::size_t c, const T& v) {
      if (c == col) out.emplace_back(r, v);
    });
    return out;
  }

  GradedMatrix with_degree(Parity degree) const {
    GradedMatrix out = *this;
    out.degree_ = degree;
    return out;
  }

  GradedMatrix transpose() const {
    std::vector<Entry> t;
    t.reserve(nnz());
    for_each([&](std::size_t r, std::size_t c, const T& v) { t.push_back({c, r, v}); });
    return from_entries(dim_, degree_, std::move(t));
  }

  GradedMatrix operator-() const {
    GradedMatrix out = *this;
    for (auto& v : out.vals_) v = -v;
    return out;
  }

  GradedMatrix scaled(const T& s) const {
    if (is_zero_value(s)) return GradedMatrix(dim_, degree_);
    std::vector<Entry> out;
    out.reserve(nnz());
    for_each([&](std::size_t r, std::size_t c, const T& v) { out.push_back({r, c, v * s}); });
    return from_entries(dim_, degree_, std::move(out));
  }

  template <class U, class F>
  GradedMatrix<U> mapped(F&& f) const {
    std::vector<typename GradedMatrix<U>::Entry> out;
    out.reserve(nnz());
    for_each([&](std::size_t r, std::size_t c, const T& v) { out.push_back({r, c, f(v)}); });
    return GradedMatrix<U>::from_entries(dim_, degree_, std::move(out));
  }

  /// Degrees of the summands must agree unless one of them is the zero matrix.
  friend GradedMatrix operator+(const GradedMatrix& a, const GradedMatrix& b) { return combine(a, b, false); }
  friend GradedMatrix operator-(const GradedMatrix& a, const GradedMatrix& b) { return combine(a, b, true); }

  friend GradedMatrix operator*(const GradedMatrix& a, const GradedMatrix& b) {
    require_same_dim(a, b, "product");
    GradedMatrix out(a.dim_, a.degree_ + b.degree_);
    // Sparse accumulator, one row at a time.
    std::vector<T> acc(a.dim_);
    std::vector<char> used(a.dim_, 0);
    std::vector<std::size_t> touched;
    for (std::size_t r = 0; r < a.dim_; ++r) {
      touched.clear();
      for (std::size_t ka = a.row_ptr_[r]; ka < a.row_ptr_[r + 1]; ++ka) {
        const std::size_t mid = a.cols_[ka];
        for (std::size_t kb = b.row_ptr_[mid]; kb < b.row_ptr_[mid + 1]; ++kb) {
          const std::size_t c = b.cols_[kb];
          if (!used[c]) {
            used[c] = 1;
            touched.push_back(c);
            acc[c] = a.vals_[ka] * b.vals_[kb];
          } else {
            acc[c] += a.vals_[ka] * b.vals_[kb];
          }
        }
      }
      std::sort(touched.begin(), touched.end());
      for (std::size_t c : touched) {
        used[c] = 0;
        if (is_zero_value(acc[c])) continue;
        out.cols_.push_back(c);
        out.vals_.push_back(std::move(acc[c]));
      }
      out.row_ptr_[r + 1] = out.cols_.size();
    }
    return out;
  }

  friend bool operator==(const GradedMatrix& a, const GradedMatrix& b) {
    return a.dim_ == b.dim_ && a.degree_ == b.degree_ && a.row_ptr_ == b.row_ptr_ && a.cols_ == b.cols_ &&
           a.vals_ == b.vals_;
  }

  /// Largest |entry|; not available for Laurent polynomial entries.
  double max_magnitude() const {
    double m = 0.0;
    for (const auto& v : vals_) m = std::max(m, magnitude(v));
    return m;
  }

 private:
  static void require_same_dim(const GradedMatrix& a, const GradedMatrix& b, const char* what) {
    if (a.dim_ != b.dim_) {
      throw ArgumentError(std::string("GradedMatrix ") + what + ": dimension mismatch " + std::to_string(a.dim_) +
                          " vs " + std::to_string(b.dim_));
    }
  }

  static GradedMatrix combine(const GradedMatrix& a, const GradedMatrix& b, bool subtract) {
    require_same_dim(a, b, subtract ? "difference" : "sum");
    if (a.degree_ != b.degree_ && !a.is_zero() && !b.is_zero()) {
      throw ArgumentError("GradedMatrix: adding elements of different degree");
    }
    const Parity degree = a.is_zero() ? b.degree_ : a.degree_;
    GradedMatrix out(a.dim_, degree);
    out.cols_.reserve(a.nnz() + b.nnz());
    out.vals_.reserve(a.nnz() + b.nnz());
    for (std::size_t r = 0; r < a.dim_; ++r) {
      std::size_t ka = a.row_ptr_[r], kb = b.row_ptr_[r];
      const std::size_t ea = a.row_ptr_[r + 1], eb = b.row_ptr_[r + 1];
      while (ka < ea || kb < eb) {
        if (kb == eb || (ka < ea && a.cols_[ka] < b.cols_[kb])) {
          out.cols_.push_back(a.cols_[ka]);
          out.vals_.push_back(a.vals_[ka]);
          ++ka;
        } else if (ka == ea || b.cols_[kb] < a.cols_[ka]) {
          out.cols_.push_back(b.cols_[kb]);
          out.vals_.push_back(subtract ? T(-b.vals_[kb]) : b.vals_[kb]);
          ++kb;
        } else {
          T v = a.vals_[ka];
          if (subtract) {
            v -= b.vals_[kb];
          } else {
            v += b.vals_[kb];
          }
          if (!is_zero_value(v)) {
            out.cols_.push_back(a.cols_[ka]);
            out.vals_.push_back(std::move(v));
          }
          ++ka;
          ++kb;
        }
      }
      out.row_ptr_[r + 1] = out.cols_.size();
    }
    return out;
  }

  std::size_t dim_;
  Parity degree_;
  std::vector<std::size_t> row_ptr_;
  std::vector<std::size_t> cols_;
  std::vector<T> vals_;
};

/// ab - (-1)^{deg a deg b} x ba
template <class T>
GradedMatrix<T> q_bracket(const GradedMatrix<T>& a, const GradedMatrix<T>& b, const T& x) {
  const GradedMatrix<T> ba = b * a;
  GradedMatrix<T> scaled = ba.scaled(x);
  if (sign_of_product(a.degree(), b.degree()) < 0) return a * b + scaled;
  return a * b - scaled;
}

/// Supercommutator ab - (-1)^{deg a deg b} ba.
template <class T>
GradedMatrix<T> bracket(const GradedMatrix<T>& a, const GradedMatrix<T>& b) {
  if (sign_of_product(a.degree(), b.degree()) < 0) return a * b + b * a;
  return a * b - b * a;
}

/// Plain commutator ab - ba, regardless of grading.
template <class T>
GradedMatrix<T> commutator(const GradedMatrix<T>& a, const GradedMatrix<T>& b) {
  return a * b - b * a;
}

/// Plain anticommutator ab + ba, regardless of grading.
template <class T>
GradedMatrix<T> anticommutator(const GradedMatrix<T>& a, const GradedMatrix<T>& b) {
  return a * b + b * a;
}

}  // namespace fockq
