#pragma once

#include "lagr/scalar.hpp"

#include <cassert>
#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

namespace lagr {

template <class T>
using Vec = std::vector<T>;

template <class T>
struct Mat {
  int rows{0}, cols{0};
  std::vector<T> a;  // row-major

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, T(0)) {}
  Mat(std::initializer_list<std::initializer_list<T>> init) {
    rows = static_cast<int>(init.size());
    cols = rows ? static_cast<int>(init.begin()->size()) : 0;
    a.reserve(static_cast<size_t>(rows) * cols);
    for (auto& r : init) {
      assert(static_cast<int>(r.size()) == cols);
      for (auto& x : r) a.push_back(x);
    }
  }

  T& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const T& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = T(1);
    return m;
  }

  Vec<T> row(int i) const {
    Vec<T> r(cols);
    for (int j = 0; j < cols; ++j) r[j] = at(i, j);
    return r;
  }
  void set_row(int i, const Vec<T>& v) {
    assert(static_cast<int>(v.size()) == cols);
    for (int j = 0; j < cols; ++j) at(i, j) = v[j];
  }
  void push_row(const Vec<T>& v) {
    assert(cols == 0 || static_cast<int>(v.size()) == cols);
    if (cols == 0) cols = static_cast<int>(v.size());
    a.insert(a.end(), v.begin(), v.end());
    ++rows;
  }

  Mat transpose() const {
    Mat t(cols, rows);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  friend Mat operator*(const Mat& x, const Mat& y) {
    assert(x.cols == y.rows);
    Mat z(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
      for (int k = 0; k < x.cols; ++k) {
        const T& xik = x.at(i, k);
        if (scalar_traits<T>::is_zero(xik)) continue;
        for (int j = 0; j < y.cols; ++j) z.at(i, j) += xik * y.at(k, j);
      }
    return z;
  }
  friend Mat operator+(const Mat& x, const Mat& y) {
    assert(x.rows == y.rows && x.cols == y.cols);
    Mat z = x;
    for (size_t i = 0; i < z.a.size(); ++i) z.a[i] += y.a[i];
    return z;
  }
  friend Mat operator-(const Mat& x, const Mat& y) {
    assert(x.rows == y.rows && x.cols == y.cols);
    Mat z = x;
    for (size_t i = 0; i < z.a.size(); ++i) z.a[i] -= y.a[i];
    return z;
  }
  friend Mat operator*(const T& c, const Mat& x) {
    Mat z = x;
    for (auto& v : z.a) v = c * v;
    return z;
  }
  friend bool operator==(const Mat& x, const Mat& y) {
    return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
  }

  bool is_zero() const {
    for (auto& v : a)
      if (!scalar_traits<T>::is_zero(v)) return false;
    return true;
  }

  Vec<T> apply(const Vec<T>& v) const {
    assert(static_cast<int>(v.size()) == cols);
    Vec<T> r(rows, T(0));
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j)
        if (!scalar_traits<T>::is_zero(at(i, j))) r[i] += at(i, j) * v[j];
    return r;
  }
};

template <class T>
Mat<T> vstack(const Mat<T>& x, const Mat<T>& y) {
  assert(x.cols == y.cols || x.rows == 0 || y.rows == 0);
  Mat<T> z(0, x.rows ? x.cols : y.cols);
  for (int i = 0; i < x.rows; ++i) z.push_row(x.row(i));
  for (int i = 0; i < y.rows; ++i) z.push_row(y.row(i));
  return z;
}

template <class T>
Mat<T> hstack(const Mat<T>& x, const Mat<T>& y) {
  assert(x.rows == y.rows);
  Mat<T> z(x.rows, x.cols + y.cols);
  for (int i = 0; i < x.rows; ++i) {
    for (int j = 0; j < x.cols; ++j) z.at(i, j) = x.at(i, j);
    for (int j = 0; j < y.cols; ++j) z.at(i, x.cols + j) = y.at(i, j);
  }
  return z;
}

// In-place reduced row echelon form; returns pivot column indices.
template <class T>
std::vector<int> rref(Mat<T>& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int p = -1;
    for (int i = r; i < m.rows; ++i)
      if (!scalar_traits<T>::is_zero(m.at(i, c))) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(p, j), m.at(r, j));
    T inv = T(1) / m.at(r, c);
    for (int j = c; j < m.cols; ++j) m.at(r, j) = inv * m.at(r, j);
    for (int i = 0; i < m.rows; ++i) {
      if (i == r || scalar_traits<T>::is_zero(m.at(i, c))) continue;
      T f = m.at(i, c);
      for (int j = c; j < m.cols; ++j) m.at(i, j) -= f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class T>
int rank(Mat<T> m) {
  return static_cast<int>(rref(m).size());
}

// Basis of {x : m x = 0} as rows.
template <class T>
Mat<T> nullspace(Mat<T> m) {
  std::vector<int> piv = rref(m);
  std::vector<bool> is_piv(m.cols, false);
  for (int c : piv) is_piv[c] = true;
  Mat<T> ns(0, m.cols);
  for (int c = 0; c < m.cols; ++c) {
    if (is_piv[c]) continue;
    Vec<T> v(m.cols, T(0));
    v[c] = T(1);
    for (size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -m.at(static_cast<int>(i), c);
    ns.push_row(v);
  }
  return ns;
}

// One solution of m x = b, if any.
template <class T>
std::optional<Vec<T>> solve(const Mat<T>& m, const Vec<T>& b) {
  assert(static_cast<int>(b.size()) == m.rows);
  Mat<T> aug(m.rows, m.cols + 1);
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols) = b[i];
  }
  std::vector<int> piv = rref(aug);
  if (!piv.empty() && piv.back() == m.cols) return std::nullopt;  // inconsistent
  Vec<T> x(m.cols, T(0));
  for (size_t i = 0; i < piv.size(); ++i) x[piv[i]] = aug.at(static_cast<int>(i), m.cols);
  return x;
}

template <class T>
std::optional<Mat<T>> inverse(const Mat<T>& m) {
  assert(m.rows == m.cols);
  Mat<T> aug = hstack(m, Mat<T>::identity(m.rows));
  std::vector<int> piv = rref(aug);
  // the identity block always contributes pivots, so singularity shows up as a
  // pivot escaping into the right block rather than as a short pivot list
  if (static_cast<int>(piv.size()) != m.rows) return std::nullopt;
  if (!piv.empty() && piv.back() >= m.cols) return std::nullopt;
  Mat<T> inv(m.rows, m.cols);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) inv.at(i, j) = aug.at(i, m.cols + j);
  return inv;
}

template <class T>
Vec<T> operator+(const Vec<T>& x, const Vec<T>& y) {
  assert(x.size() == y.size());
  Vec<T> z = x;
  for (size_t i = 0; i < z.size(); ++i) z[i] += y[i];
  return z;
}

template <class T>
Vec<T> operator-(const Vec<T>& x, const Vec<T>& y) {
  assert(x.size() == y.size());
  Vec<T> z = x;
  for (size_t i = 0; i < z.size(); ++i) z[i] -= y[i];
  return z;
}

template <class T>
Vec<T> operator*(const T& c, const Vec<T>& x) {
  Vec<T> z = x;
  for (auto& v : z) v = c * v;
  return z;
}

template <class T>
bool is_zero(const Vec<T>& x) {
  for (auto& v : x)
    if (!scalar_traits<T>::is_zero(v)) return false;
  return true;
}

}  // namespace lagr
