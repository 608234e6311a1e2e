#pragma once

#include "hly/errors.hpp"
#include "hly/scalar.hpp"

#include <string>
#include <vector>

namespace hly {

/// Coordinate vector with exact entries.
using Vec = std::vector<Scalar>;

inline Vec zero_vec(int n) { return Vec(static_cast<size_t>(n)); }

inline Vec basis_vec(int n, int i) {
  Vec v = zero_vec(n);
  v[static_cast<size_t>(i)] = 1;
  return v;
}

inline bool is_zero_vec(const Vec& v) {
  for (const Scalar& s : v)
    if (!is_zero(s)) return false;
  return true;
}

/// v += c * w, skipping the work when c or an entry of w vanishes.
inline void axpy(Vec& v, const Scalar& c, const Vec& w) {
  if (is_zero(c)) return;
  for (size_t i = 0; i < w.size(); ++i)
    if (!is_zero(w[i])) v[i] += c * w[i];
}

inline Vec operator+(Vec a, const Vec& b) {
  for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

inline Vec operator-(Vec a, const Vec& b) {
  for (size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

inline Vec operator*(const Scalar& c, Vec v) {
  for (Scalar& s : v) s *= c;
  return v;
}

/// Dense matrix with exact rational entries, row-major storage.
class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols)
      : rows_(rows), cols_(cols),
        a_(static_cast<size_t>(rows) * static_cast<size_t>(cols)) {}

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Scalar& at(int r, int c) { return a_[idx(r, c)]; }
  const Scalar& at(int r, int c) const { return a_[idx(r, c)]; }

  /// Column c as a coordinate vector (the image of basis vector c).
  Vec col(int c) const {
    Vec v = zero_vec(rows_);
    for (int r = 0; r < rows_; ++r) v[static_cast<size_t>(r)] = at(r, c);
    return v;
  }

  Vec apply(const Vec& x) const {
    if (static_cast<int>(x.size()) != cols_)
      throw ValidationError("matrix/vector dimension mismatch");
    Vec y = zero_vec(rows_);
    for (int c = 0; c < cols_; ++c) {
      const Scalar& xc = x[static_cast<size_t>(c)];
      if (is_zero(xc)) continue;
      for (int r = 0; r < rows_; ++r) {
        const Scalar& m = at(r, c);
        if (!is_zero(m)) y[static_cast<size_t>(r)] += m * xc;
      }
    }
    return y;
  }

  Mat operator*(const Mat& o) const {
    if (cols_ != o.rows_) throw ValidationError("matrix product shape mismatch");
    Mat p(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const Scalar& m = at(i, k);
        if (is_zero(m)) continue;
        for (int j = 0; j < o.cols_; ++j) {
          const Scalar& n = o.at(k, j);
          if (!is_zero(n)) p.at(i, j) += m * n;
        }
      }
    return p;
  }

  Mat operator+(const Mat& o) const {
    Mat s = *this;
    for (size_t i = 0; i < a_.size(); ++i) s.a_[i] += o.a_[i];
    return s;
  }

  Mat operator-(const Mat& o) const {
    Mat s = *this;
    for (size_t i = 0; i < a_.size(); ++i) s.a_[i] -= o.a_[i];
    return s;
  }

  friend Mat operator*(const Scalar& c, Mat m) {
    for (Scalar& s : m.a_) s *= c;
    return m;
  }

  Mat pow(int k) const {
    if (rows_ != cols_) throw ValidationError("matrix power needs a square matrix");
    Mat r = identity(rows_);
    for (int i = 0; i < k; ++i) r = r * *this;
    return r;
  }

  bool is_zero_mat() const {
    for (const Scalar& s : a_)
      if (!is_zero(s)) return false;
    return true;
  }

  bool is_identity() const {
    if (rows_ != cols_) return false;
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < cols_; ++c)
        if (at(r, c) != Scalar(r == c ? 1 : 0)) return false;
    return true;
  }

  bool operator==(const Mat&) const = default;

 private:
  size_t idx(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
      throw ValidationError("matrix index out of range");
    return static_cast<size_t>(r) * static_cast<size_t>(cols_) +
           static_cast<size_t>(c);
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<Scalar> a_;
};

}  // namespace hly
