#pragma once

#include "lagr/matrix.hpp"

#include <stdexcept>

namespace lagr {

// Linear subspace of T^n held as a reduced-row-echelon basis (rows).
// Canonical form makes subspace equality = field-by-field equality.
template <class T>
struct Subspace {
  int ambient{0};
  Mat<T> basis;  // rref, no zero rows

  Subspace() = default;
  explicit Subspace(int n) : ambient(n), basis(0, n) {}

  int dim() const { return basis.rows; }

  static Subspace zero(int n) { return Subspace(n); }
  static Subspace full(int n) {
    Subspace s(n);
    s.basis = Mat<T>::identity(n);
    return s;
  }

  friend bool operator==(const Subspace& x, const Subspace& y) {
    return x.ambient == y.ambient && x.basis == y.basis;
  }
  friend bool operator!=(const Subspace& x, const Subspace& y) { return !(x == y); }

  bool contains(const Vec<T>& v) const {
    // reduce v against the echelon basis
    Vec<T> w = v;
    for (int i = 0; i < basis.rows; ++i) {
      int p = -1;
      for (int j = 0; j < ambient; ++j)
        if (!scalar_traits<T>::is_zero(basis.at(i, j))) {
          p = j;
          break;
        }
      if (p >= 0 && !scalar_traits<T>::is_zero(w[p])) {
        T f = w[p];
        for (int j = 0; j < ambient; ++j) w[j] -= f * basis.at(i, j);
      }
    }
    return is_zero(w);
  }
  bool contains(const Subspace& other) const {
    for (int i = 0; i < other.basis.rows; ++i)
      if (!contains(other.basis.row(i))) return false;
    return true;
  }
};

template <class T>
Subspace<T> canonicalize(Mat<T> raw, int ambient) {
  if (raw.rows == 0) raw = Mat<T>(0, ambient);
  if (raw.cols != ambient) throw std::invalid_argument("ambient mismatch");
  std::vector<int> piv = rref(raw);
  Subspace<T> s(ambient);
  for (size_t i = 0; i < piv.size(); ++i) s.basis.push_row(raw.row(static_cast<int>(i)));
  return s;
}

template <class T>
Subspace<T> span_of(const std::vector<Vec<T>>& vectors, int ambient) {
  Mat<T> m(0, ambient);
  for (auto& v : vectors) m.push_row(v);
  return canonicalize(m, ambient);
}

template <class T>
void check_same_ambient(const Subspace<T>& a, const Subspace<T>& b) {
  if (a.ambient != b.ambient) throw std::invalid_argument("ambient mismatch");
}

template <class T>
Subspace<T> sum(const Subspace<T>& a, const Subspace<T>& b) {
  check_same_ambient(a, b);
  return canonicalize(vstack(a.basis, b.basis), a.ambient);
}

// Zassenhaus: rref of [A|A; B|0]; rows with zero left half carry the
// intersection in the right half.
template <class T>
Subspace<T> intersect(const Subspace<T>& a, const Subspace<T>& b) {
  check_same_ambient(a, b);
  int n = a.ambient;
  Mat<T> block(0, 2 * n);
  for (int i = 0; i < a.basis.rows; ++i) {
    Vec<T> r(2 * n, T(0));
    for (int j = 0; j < n; ++j) r[j] = r[n + j] = a.basis.at(i, j);
    block.push_row(r);
  }
  for (int i = 0; i < b.basis.rows; ++i) {
    Vec<T> r(2 * n, T(0));
    for (int j = 0; j < n; ++j) r[j] = b.basis.at(i, j);
    block.push_row(r);
  }
  rref(block);
  Mat<T> inter(0, n);
  for (int i = 0; i < block.rows; ++i) {
    bool left_zero = true;
    for (int j = 0; j < n && left_zero; ++j)
      if (!scalar_traits<T>::is_zero(block.at(i, j))) left_zero = false;
    if (!left_zero) continue;
    Vec<T> r(n);
    bool nonzero = false;
    for (int j = 0; j < n; ++j) {
      r[j] = block.at(i, n + j);
      nonzero = nonzero || !scalar_traits<T>::is_zero(r[j]);
    }
    if (nonzero) inter.push_row(r);
  }
  return canonicalize(inter, n);
}

// Annihilator in coordinate-dual terms: {f : f(v)=0 for all v in V}.
template <class T>
Subspace<T> annihilator(const Subspace<T>& v) {
  return canonicalize(nullspace(v.basis), v.ambient);
}

template <class T>
struct BilinearForm {
  int ambient{0};
  Mat<T> gram;

  BilinearForm() = default;
  explicit BilinearForm(Mat<T> g) : ambient(g.rows), gram(std::move(g)) {
    if (gram.rows != gram.cols) throw std::invalid_argument("gram not square");
  }

  bool is_symmetric() const { return gram == gram.transpose(); }

  T eval(const Vec<T>& x, const Vec<T>& y) const {
    Vec<T> gy = gram.apply(y);
    T s(0);
    for (int i = 0; i < ambient; ++i) s += x[i] * gy[i];
    return s;
  }

  bool is_nondegenerate() const { return rank(gram) == ambient; }
};

// {w : form(v, w) = 0 for all v in V}
template <class T>
Subspace<T> orthogonal(const Subspace<T>& v, const BilinearForm<T>& form) {
  if (v.ambient != form.ambient) throw std::invalid_argument("ambient mismatch");
  return canonicalize(nullspace(v.basis * form.gram), v.ambient);
}

template <class T>
bool is_isotropic(const Subspace<T>& v, const BilinearForm<T>& form) {
  if (v.ambient != form.ambient) throw std::invalid_argument("ambient mismatch");
  return (v.basis * form.gram * v.basis.transpose()).is_zero();
}

// Extend `inner`'s basis to a basis of `outer`; returns the added rows
// (a deterministic complement of inner in outer).
template <class T>
Mat<T> complement_basis(const Subspace<T>& inner, const Subspace<T>& outer) {
  check_same_ambient(inner, outer);
  Mat<T> acc = inner.basis;
  Mat<T> comp(0, inner.ambient);
  int r = rank(acc);
  for (int i = 0; i < outer.basis.rows; ++i) {
    Mat<T> trial = acc;
    trial.push_row(outer.basis.row(i));
    int r2 = rank(trial);
    if (r2 > r) {
      acc = trial;
      r = r2;
      comp.push_row(outer.basis.row(i));
    }
  }
  return comp;
}

// Signature (pos, neg, zero) of a symmetric rational form restricted to V,
// by exact congruence diagonalization.
inline std::tuple<int, int, int> restricted_signature(const Subspace<Q>& v,
                                                      const BilinearForm<Q>& form) {
  Mat<Q> g = v.basis * form.gram * v.basis.transpose();
  int n = g.rows;
  int pos = 0, neg = 0, zero = 0;
  std::vector<bool> done(n, false);
  for (int step = 0; step < n; ++step) {
    int p = -1;
    for (int i = 0; i < n; ++i)
      if (!done[i] && g.at(i, i) != 0) {
        p = i;
        break;
      }
    if (p < 0) {
      // all remaining diagonal zero; make one nonzero if any off-diagonal is
      int bi = -1, bj = -1;
      for (int i = 0; i < n && bi < 0; ++i)
        if (!done[i])
          for (int j = i + 1; j < n; ++j)
            if (!done[j] && g.at(i, j) != 0) {
              bi = i;
              bj = j;
              break;
            }
      if (bi < 0) {
        for (int i = 0; i < n; ++i)
          if (!done[i]) ++zero;
        break;
      }
      for (int j = 0; j < n; ++j) g.at(bi, j) += g.at(bj, j);
      for (int i = 0; i < n; ++i) g.at(i, bi) += g.at(i, bj);
      p = bi;
    }
    Q d = g.at(p, p);
    if (d > 0) ++pos;
    else ++neg;
    done[p] = true;
    for (int i = 0; i < n; ++i) {
      if (i == p || g.at(i, p) == 0) continue;
      Q f = g.at(i, p) / d;
      for (int j = 0; j < n; ++j) g.at(i, j) -= f * g.at(p, j);
      for (int j = 0; j < n; ++j) g.at(j, i) -= f * g.at(j, p);
    }
  }
  return {pos, neg, zero};
}

}  // namespace lagr
