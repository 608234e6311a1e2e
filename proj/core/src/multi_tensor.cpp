#include "hly/multi_tensor.hpp"

#include <string>

namespace hly {

namespace {

std::string tuple_str(std::span<const int> idx, int m) {
  std::string s = "(";
  for (int i : idx) s += std::to_string(i) + ",";
  s += "; " + std::to_string(m) + ")";
  return s;
}

}  // namespace

MultiTensor MultiTensor::zero(SuperSpace space, int arity, Parity parity) {
  if (arity != 2 && arity != 3)
    throw ValidationError("tensor arity must be 2 or 3");
  MultiTensor t;
  t.space_ = space;
  t.arity_ = arity;
  t.parity_ = parity;
  size_t n = static_cast<size_t>(space.dim());
  size_t size = n;
  for (int a = 0; a < arity; ++a) size *= n;
  t.c_.assign(size, Scalar(0));
  return t;
}

size_t MultiTensor::flat(std::span<const int> idx, int m) const {
  if (static_cast<int>(idx.size()) != arity_)
    throw ValidationError("tensor index arity mismatch");
  const int n = space_.dim();
  size_t f = 0;
  for (int i : idx) {
    if (i < 0 || i >= n) throw ValidationError("tensor index out of range");
    f = f * static_cast<size_t>(n) + static_cast<size_t>(i);
  }
  if (m < 0 || m >= n) throw ValidationError("tensor output index out of range");
  return f * static_cast<size_t>(n) + static_cast<size_t>(m);
}

bool MultiTensor::pattern_allows(std::span<const int> idx, int m) const {
  Parity p = parity_;
  for (int i : idx) p = p + space_.parity(i);
  return p == space_.parity(m);
}

void MultiTensor::set(std::span<const int> idx, int m, Scalar value) {
  size_t f = flat(idx, m);
  if (!hly::is_zero(value) && !pattern_allows(idx, m))
    throw ValidationError("tensor entry " + tuple_str(idx, m) +
                          " violates the parity pattern");
  c_[f] = std::move(value);
}

Vec MultiTensor::eval_basis(std::span<const int> idx) const {
  const int n = space_.dim();
  size_t base = flat(idx, 0);
  Vec out(static_cast<size_t>(n));
  for (int m = 0; m < n; ++m) out[static_cast<size_t>(m)] = c_[base + m];
  return out;
}

Vec MultiTensor::eval2(const Vec& x, const Vec& y) const {
  const int n = space_.dim();
  if (arity_ != 2 || static_cast<int>(x.size()) != n ||
      static_cast<int>(y.size()) != n)
    throw ValidationError("eval2 shape mismatch");
  Vec out(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    if (hly::is_zero(x[i])) continue;
    for (int j = 0; j < n; ++j) {
      if (hly::is_zero(y[j])) continue;
      Scalar xy = x[i] * y[j];
      size_t base = (static_cast<size_t>(i) * n + j) * n;
      for (int m = 0; m < n; ++m)
        if (!hly::is_zero(c_[base + m])) out[m] += xy * c_[base + m];
    }
  }
  return out;
}

Vec MultiTensor::eval3(const Vec& x, const Vec& y, const Vec& z) const {
  const int n = space_.dim();
  if (arity_ != 3 || static_cast<int>(x.size()) != n ||
      static_cast<int>(y.size()) != n || static_cast<int>(z.size()) != n)
    throw ValidationError("eval3 shape mismatch");
  Vec out(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    if (hly::is_zero(x[i])) continue;
    for (int j = 0; j < n; ++j) {
      if (hly::is_zero(y[j])) continue;
      Scalar xy = x[i] * y[j];
      for (int k = 0; k < n; ++k) {
        if (hly::is_zero(z[k])) continue;
        Scalar xyz = xy * z[k];
        size_t base = ((static_cast<size_t>(i) * n + j) * n + k) * n;
        for (int m = 0; m < n; ++m)
          if (!hly::is_zero(c_[base + m])) out[m] += xyz * c_[base + m];
      }
    }
  }
  return out;
}

MultiTensor MultiTensor::operator+(const MultiTensor& o) const {
  if (space_ != o.space_ || arity_ != o.arity_ || parity_ != o.parity_)
    throw ValidationError("tensor sum needs matching shape and parity");
  MultiTensor t = *this;
  for (size_t i = 0; i < c_.size(); ++i) t.c_[i] += o.c_[i];
  return t;
}

MultiTensor MultiTensor::operator-(const MultiTensor& o) const {
  if (space_ != o.space_ || arity_ != o.arity_ || parity_ != o.parity_)
    throw ValidationError("tensor difference needs matching shape and parity");
  MultiTensor t = *this;
  for (size_t i = 0; i < c_.size(); ++i) t.c_[i] -= o.c_[i];
  return t;
}

std::optional<std::pair<std::vector<int>, int>> MultiTensor::first_nonzero()
    const {
  const int n = space_.dim();
  std::vector<int> idx(static_cast<size_t>(arity_), 0);
  if (n == 0) return std::nullopt;
  size_t f = 0;
  do {
    for (int m = 0; m < n; ++m, ++f)
      if (!hly::is_zero(c_[f])) return std::make_pair(idx, m);
  } while (advance_tuple(idx, n));
  return std::nullopt;
}

void MultiTensor::for_each(
    const std::function<void(std::span<const int>, int, const Scalar&)>& fn)
    const {
  const int n = space_.dim();
  if (n == 0) return;
  std::vector<int> idx(static_cast<size_t>(arity_), 0);
  size_t f = 0;
  do {
    for (int m = 0; m < n; ++m, ++f) fn(idx, m, c_[f]);
  } while (advance_tuple(idx, n));
}

}  // namespace hly
