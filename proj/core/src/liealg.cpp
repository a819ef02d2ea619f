#include "lagr/liealg.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace lagr {

Vec<Gq> SemisimpleRealization::to_cx(const Vec<Q>& x) const {
  if (static_cast<int>(x.size()) != nre) throw std::domain_error("to_cx: wrong size");
  Vec<Gq> z(ncx);
  for (int m = 0; m < ncx; ++m) z[m] = Gq{x[2 * m], x[2 * m + 1]};
  return z;
}

Vec<Q> SemisimpleRealization::to_re(const Vec<Gq>& z) const {
  if (static_cast<int>(z.size()) != ncx) throw std::domain_error("to_re: wrong size");
  Vec<Q> x(nre);
  for (int m = 0; m < ncx; ++m) {
    x[2 * m] = z[m].re;
    x[2 * m + 1] = z[m].im;
  }
  return x;
}

Vec<Gq> SemisimpleRealization::bracket_cx(const Vec<Gq>& z, const Vec<Gq>& w) const {
  Vec<Gq> out(ncx, Gq{});
  for (int i = 0; i < ncx; ++i) {
    if (z[i].re == 0 && z[i].im == 0) continue;
    for (int j = 0; j < ncx; ++j) {
      if (w[j].re == 0 && w[j].im == 0) continue;
      Gq c = z[i] * w[j];
      const Vec<Q>& v = cbr[i][j];
      for (int m = 0; m < ncx; ++m) {
        if (v[m] == 0) continue;
        out[m].re += c.re * v[m];
        out[m].im += c.im * v[m];
      }
    }
  }
  return out;
}

Vec<Q> SemisimpleRealization::bracket_re(const Vec<Q>& x, const Vec<Q>& y) const {
  return to_re(bracket_cx(to_cx(x), to_cx(y)));
}

Mat<Q> SemisimpleRealization::ad_re(const Vec<Q>& x) const {
  Mat<Q> A(nre, nre);
  Vec<Gq> z = to_cx(x);
  for (int j = 0; j < nre; ++j) {
    Vec<Q> e(nre, Q(0));
    e[j] = 1;
    Vec<Q> col = to_re(bracket_cx(z, to_cx(e)));
    for (int i = 0; i < nre; ++i) A.at(i, j) = col[i];
  }
  return A;
}

Gq SemisimpleRealization::form_cx(const Vec<Q>& x, const Vec<Q>& y) const {
  Vec<Gq> z = to_cx(x), w = to_cx(y);
  Gq s{};
  for (int i = 0; i < ncx; ++i) {
    if (z[i].re == 0 && z[i].im == 0) continue;
    for (int j = 0; j < ncx; ++j) {
      if (kc.at(i, j) == 0) continue;
      Gq t = z[i] * w[j];
      s.re += t.re * kc.at(i, j);
      s.im += t.im * kc.at(i, j);
    }
  }
  return s;
}

namespace {
Vec<Q> unit(int n, int i) {
  Vec<Q> v(n, Q(0));
  v[i] = 1;
  return v;
}
}  // namespace

Vec<Q> SemisimpleRealization::basis_h(int i) const { return unit(nre, 2 * h_index(i)); }
Vec<Q> SemisimpleRealization::basis_Jh(int i) const { return unit(nre, 2 * h_index(i) + 1); }
Vec<Q> SemisimpleRealization::basis_e(int root_idx) const { return unit(nre, 2 * e_index(root_idx)); }
Vec<Q> SemisimpleRealization::basis_Je(int root_idx) const {
  return unit(nre, 2 * e_index(root_idx) + 1);
}

Vec<Q> SemisimpleRealization::X_alpha(int pos) const {
  Vec<Q> v = basis_e(pos);
  v[2 * e_index(rs.negative_of(pos))] = -1;
  return v;
}

Vec<Q> SemisimpleRealization::Y_alpha(int pos) const {
  Vec<Q> v(nre, Q(0));
  v[2 * e_index(pos) + 1] = 1;
  v[2 * e_index(rs.negative_of(pos)) + 1] = 1;
  return v;
}

Q SemisimpleRealization::N_coeff(int root_a, int root_b) const {
  std::vector<int> sum(rs.rank);
  for (int i = 0; i < rs.rank; ++i) sum[i] = rs.roots[root_a][i] + rs.roots[root_b][i];
  int k = rs.root_index(sum);
  if (k < 0) return Q(0);
  return cbr[e_index(root_a)][e_index(root_b)][e_index(k)];
}

namespace {

// interval (p, q) of a type-A root: positive alpha_p + .. + alpha_{q-1} maps
// to the elementary matrix slot (p, q)
std::pair<int, int> root_slot(const RootSystem& rs, int idx) {
  const std::vector<int>& m = rs.roots[idx];
  int p = -1, q = -1;
  bool pos = rs.is_positive(idx);
  for (int i = 0; i < rs.rank; ++i) {
    int c = pos ? m[i] : -m[i];
    if (c == 1) {
      if (p < 0) p = i;
      q = i + 1;
    } else if (c != 0) {
      throw std::logic_error("root_slot: not a type-A root");
    }
  }
  return pos ? std::make_pair(p, q) : std::make_pair(q, p);
}

struct GlHelper {
  int n;  // matrix size rank+1
  const RootSystem& rs;

  Mat<Q> basis_mat(int cx_idx) const {
    Mat<Q> M(n, n);
    if (cx_idx < rs.rank) {
      M.at(cx_idx, cx_idx) = 1;
      M.at(cx_idx + 1, cx_idx + 1) = -1;
    } else {
      auto [r, c] = root_slot(rs, cx_idx - rs.rank);
      M.at(r, c) = 1;
    }
    return M;
  }

  Vec<Q> decompose(const Mat<Q>& M) const {
    int ncx = rs.rank + rs.nroots();
    Vec<Q> out(ncx, Q(0));
    // coroot coefficients are partial sums of the diagonal
    Q acc = 0;
    for (int i = 0; i < rs.rank; ++i) {
      acc += M.at(i, i);
      out[i] = acc;
    }
    for (int k = 0; k < rs.nroots(); ++k) {
      auto [r, c] = root_slot(rs, k);
      out[rs.rank + k] = M.at(r, c);
    }
    // the decomposition must reconstruct M exactly (traceless, off-diagonal matched)
    Mat<Q> R(n, n);
    for (int i = 0; i < ncx; ++i) {
      if (out[i] == 0) continue;
      R = R + out[i] * basis_mat(i);
    }
    if (!(R == M)) throw std::logic_error("decompose: matrix outside the span");
    return out;
  }
};

}  // namespace

SemisimpleRealization build_chevalley(char type, int rank) {
  if (type != 'A') throw std::domain_error("build_chevalley: only type A is supported");
  SemisimpleRealization g;
  g.rs = build_root_system(type, rank);
  g.ncx = rank + g.rs.nroots();
  g.nre = 2 * g.ncx;

  GlHelper gl{rank + 1, g.rs};
  std::vector<Mat<Q>> bm;
  for (int i = 0; i < g.ncx; ++i) bm.push_back(gl.basis_mat(i));
  g.cbr.assign(g.ncx, std::vector<Vec<Q>>(g.ncx));
  for (int i = 0; i < g.ncx; ++i)
    for (int j = 0; j < g.ncx; ++j) g.cbr[i][j] = gl.decompose(bm[i] * bm[j] - bm[j] * bm[i]);

  // Jacobi sweep over the complex basis
  auto brk = [&](int i, const Vec<Q>& v) {
    Vec<Q> out(g.ncx, Q(0));
    for (int m = 0; m < g.ncx; ++m) {
      if (v[m] == 0) continue;
      for (int t = 0; t < g.ncx; ++t) out[t] += v[m] * g.cbr[i][m][t];
    }
    return out;
  };
  for (int i = 0; i < g.ncx; ++i)
    for (int j = i + 1; j < g.ncx; ++j)
      for (int k = j + 1; k < g.ncx; ++k) {
        Vec<Q> s = brk(i, g.cbr[j][k]);
        Vec<Q> t1 = brk(j, g.cbr[k][i]);
        Vec<Q> t2 = brk(k, g.cbr[i][j]);
        for (int m = 0; m < g.ncx; ++m)
          if (s[m] + t1[m] + t2[m] != 0) throw std::logic_error("build_chevalley: Jacobi fails");
      }

  // every extraspecial pair must carry structure constant +1
  for (int kpos = 0; kpos < g.rs.npos; ++kpos) {
    if (g.rs.height(kpos) < 2) continue;
    int best_a = -1, best_b = -1;
    for (int a = 0; a < g.rs.npos; ++a) {
      for (int b = 0; b < g.rs.npos; ++b) {
        std::vector<int> sum(rank);
        for (int i = 0; i < rank; ++i) sum[i] = g.rs.roots[a][i] + g.rs.roots[b][i];
        if (sum == g.rs.roots[kpos] && (best_a < 0 || a < best_a)) {
          best_a = a;
          best_b = b;
        }
      }
    }
    if (best_a < 0) throw std::logic_error("build_chevalley: no extraspecial pair");
    if (g.cbr[g.e_index(best_a)][g.e_index(best_b)][g.e_index(kpos)] != 1)
      throw std::logic_error("build_chevalley: extraspecial constant is not +1");
  }

  // Killing gram from traces of ad products
  g.kc = Mat<Q>(g.ncx, g.ncx);
  std::vector<Mat<Q>> ad(g.ncx, Mat<Q>(g.ncx, g.ncx));
  for (int i = 0; i < g.ncx; ++i)
    for (int j = 0; j < g.ncx; ++j)
      for (int m = 0; m < g.ncx; ++m) ad[i].at(m, j) = g.cbr[i][j][m];
  for (int i = 0; i < g.ncx; ++i)
    for (int j = i; j < g.ncx; ++j) {
      Q tr = 0;
      for (int m = 0; m < g.ncx; ++m)
        for (int t = 0; t < g.ncx; ++t) tr += ad[i].at(m, t) * ad[j].at(t, m);
      g.kc.at(i, j) = tr;
      g.kc.at(j, i) = tr;
    }

  g.re_gram = Mat<Q>(g.nre, g.nre);
  g.im_gram = Mat<Q>(g.nre, g.nre);
  for (int i = 0; i < g.ncx; ++i)
    for (int j = 0; j < g.ncx; ++j) {
      const Q& k = g.kc.at(i, j);
      if (k == 0) continue;
      g.re_gram.at(2 * i, 2 * j) = k;
      g.re_gram.at(2 * i + 1, 2 * j + 1) = -k;
      g.im_gram.at(2 * i, 2 * j + 1) = k;
      g.im_gram.at(2 * i + 1, 2 * j) = k;
    }

  g.Jmat = Mat<Q>(g.nre, g.nre);
  for (int m = 0; m < g.ncx; ++m) {
    g.Jmat.at(2 * m + 1, 2 * m) = 1;
    g.Jmat.at(2 * m, 2 * m + 1) = -1;
  }

  // theta: h -> -h, e_a -> -e_{-a}, antilinear
  Mat<Q> t0(g.ncx, g.ncx);
  for (int i = 0; i < rank; ++i) t0.at(i, i) = -1;
  for (int k = 0; k < g.rs.nroots(); ++k)
    t0.at(g.e_index(g.rs.negative_of(k)), g.e_index(k)) = -1;
  g.theta_mat = Mat<Q>(g.nre, g.nre);
  for (int m = 0; m < g.ncx; ++m)
    for (int r = 0; r < g.ncx; ++r) {
      if (t0.at(r, m) == 0) continue;
      g.theta_mat.at(2 * r, 2 * m) = t0.at(r, m);
      g.theta_mat.at(2 * r + 1, 2 * m + 1) = -t0.at(r, m);
    }

  return g;
}

Subspace<Q> complex_span(const SemisimpleRealization& g, const std::vector<int>& cx_indices) {
  Mat<Q> rows(0, g.nre);
  for (int c : cx_indices) {
    rows.push_row(unit(g.nre, 2 * c));
    rows.push_row(unit(g.nre, 2 * c + 1));
  }
  return canonicalize(rows, g.nre);
}

IwasawaParts iwasawa_parts(const SemisimpleRealization& g) {
  IwasawaParts out;
  Mat<Q> A = g.theta_mat - Mat<Q>::identity(g.nre);
  out.k = canonicalize(nullspace(A), g.nre);
  Mat<Q> arows(0, g.nre), trows(0, g.nre);
  for (int i = 0; i < g.rs.rank; ++i) {
    arows.push_row(g.basis_h(i));
    trows.push_row(g.basis_Jh(i));
  }
  out.a = canonicalize(arows, g.nre);
  out.t = canonicalize(trows, g.nre);
  std::vector<int> pos;
  for (int k = 0; k < g.rs.npos; ++k) pos.push_back(g.e_index(k));
  out.n = complex_span(g, pos);
  return out;
}

bool bracket_closed(const SemisimpleRealization& g, const Subspace<Q>& W) {
  for (int i = 0; i < W.dim(); ++i)
    for (int j = i + 1; j < W.dim(); ++j)
      if (!W.contains(g.bracket_re(W.basis.row(i), W.basis.row(j)))) return false;
  return true;
}

ParabolicData parabolic_data(const SemisimpleRealization& g, const std::vector<int>& S) {
  std::set<int> sset(S.begin(), S.end());
  for (int i : S)
    if (i < 0 || i >= g.rs.rank) throw std::domain_error("parabolic_data: bad simple index");
  ParabolicData out;
  out.S.assign(sset.begin(), sset.end());

  std::vector<int> m_idx, n_idx;
  for (int i = 0; i < g.rs.rank; ++i) m_idx.push_back(g.h_index(i));
  for (int r = 0; r < g.rs.nroots(); ++r) {
    bool in_levi = true;
    for (int i = 0; i < g.rs.rank; ++i)
      if (g.rs.roots[r][i] != 0 && !sset.count(i)) in_levi = false;
    if (in_levi)
      m_idx.push_back(g.e_index(r));
    else if (g.rs.is_positive(r))
      n_idx.push_back(g.e_index(r));
  }
  out.n_minus_count = static_cast<int>(n_idx.size());
  out.m = complex_span(g, m_idx);
  out.n = complex_span(g, n_idx);
  out.p = sum(out.m, out.n);

  Mat<Q> zrows(0, g.nre);
  for (int j = 0; j < g.rs.rank; ++j) {
    if (sset.count(j)) continue;
    Vec<Q> cw = g.rs.coweight(j);
    Vec<Q> v(g.nre, Q(0)), jv(g.nre, Q(0));
    for (int k = 0; k < g.rs.rank; ++k) {
      v[2 * k] = cw[k];
      jv[2 * k + 1] = cw[k];
    }
    zrows.push_row(v);
    zrows.push_row(jv);
  }
  out.z = canonicalize(zrows, g.nre);

  Mat<Q> m1rows(0, g.nre);
  for (int i = 0; i < out.m.dim(); ++i)
    for (int j = i + 1; j < out.m.dim(); ++j)
      m1rows.push_row(g.bracket_re(out.m.basis.row(i), out.m.basis.row(j)));
  out.m1 = canonicalize(m1rows, g.nre);
  return out;
}

Mat<Q> a_sigma_matrix(const SemisimpleRealization& g, const std::vector<int>& values) {
  if (static_cast<int>(values.size()) != g.rs.rank)
    throw std::domain_error("a_sigma_matrix: wrong number of values");
  Mat<Q> A(g.nre, g.nre);
  for (int i = 0; i < g.rs.rank; ++i) {
    A.at(2 * i, 2 * i) = 1;
    A.at(2 * i + 1, 2 * i + 1) = 1;
  }
  for (int r = 0; r < g.rs.nroots(); ++r) {
    int p = 0;
    for (int i = 0; i < g.rs.rank; ++i)
      if (values[i] == -1) p += g.rs.roots[r][i];
    Q sgn = (p % 2 == 0) ? 1 : -1;
    int c = g.e_index(r);
    A.at(2 * c, 2 * c) = sgn;
    A.at(2 * c + 1, 2 * c + 1) = sgn;
  }
  return A;
}

Mat<Q> a_sigma_matrix(const SemisimpleRealization& g, const ExtendedSignature& s) {
  return a_sigma_matrix(g, s.values);
}

namespace {
Mat<Q> gamma_complex_on(const SemisimpleRealization& g, const std::vector<int>& S,
                        const DiagramInvolution& d) {
  validate_involution_on(g.rs, S, d);
  std::set<int> sset(S.begin(), S.end());
  int rank = g.rs.rank;

  // toral part: h_i -> h_{d(i)} for i in S, coweights off S fixed
  Mat<Q> B(rank, rank), Bp(rank, rank);
  int col = 0;
  for (int i : S) {
    B.at(i, col) = 1;
    Bp.at(d.perm[i], col) = 1;
    ++col;
  }
  for (int j = 0; j < rank; ++j) {
    if (sset.count(j)) continue;
    Vec<Q> cw = g.rs.coweight(j);
    for (int k = 0; k < rank; ++k) {
      B.at(k, col) = cw[k];
      Bp.at(k, col) = cw[k];
    }
    ++col;
  }
  Mat<Q> Mh = Bp * inverse(B).value();

  Mat<Q> M(g.ncx, g.ncx);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) M.at(i, j) = Mh.at(i, j);

  std::vector<bool> in_span(g.rs.nroots(), false);
  for (int r = 0; r < g.rs.nroots(); ++r) {
    bool ok = true;
    for (int i = 0; i < rank; ++i)
      if (g.rs.roots[r][i] != 0 && !sset.count(i)) ok = false;
    in_span[r] = ok;
    if (!ok) M.at(g.e_index(r), g.e_index(r)) = 1;  // identity off the sub-diagram
  }

  std::vector<Vec<Q>> img(g.ncx);  // images of root vectors as complex-coefficient columns
  auto set_img = [&](int r, const Vec<Q>& v) {
    img[g.e_index(r)] = v;
    for (int m = 0; m < g.ncx; ++m) M.at(m, g.e_index(r)) = v[m];
  };
  auto brk = [&](const Vec<Q>& a, const Vec<Q>& b) {
    Vec<Q> out(g.ncx, Q(0));
    for (int i = 0; i < g.ncx; ++i) {
      if (a[i] == 0) continue;
      for (int j = 0; j < g.ncx; ++j) {
        if (b[j] == 0) continue;
        for (int m = 0; m < g.ncx; ++m) out[m] += a[i] * b[j] * g.cbr[i][j][m];
      }
    }
    return out;
  };

  for (int hgt = 1;; ++hgt) {
    bool any = false;
    for (int r = 0; r < g.rs.npos; ++r) {
      if (!in_span[r] || g.rs.height(r) != hgt) continue;
      any = true;
      int nr = g.rs.negative_of(r);
      if (hgt == 1) {
        int i = g.rs.simple_index(r);
        std::vector<int> di(rank, 0);
        di[d.perm[i]] = 1;
        int r2 = g.rs.root_index(di);
        set_img(r, unit(g.ncx, g.e_index(r2)));
        set_img(nr, unit(g.ncx, g.e_index(g.rs.negative_of(r2))));
        continue;
      }
      // extraspecial pair: minimal first summand in root order
      int best_a = -1, best_b = -1;
      for (int a = 0; a < g.rs.npos && best_a < 0; ++a)
        for (int b = 0; b < g.rs.npos; ++b) {
          std::vector<int> sum(rank);
          for (int i = 0; i < rank; ++i) sum[i] = g.rs.roots[a][i] + g.rs.roots[b][i];
          if (sum == g.rs.roots[r]) {
            best_a = a;
            best_b = b;
            break;
          }
        }
      if (best_a < 0) throw std::logic_error("gamma_d_on: missing extraspecial pair");
      Q n_pos = g.cbr[g.e_index(best_a)][g.e_index(best_b)][g.e_index(r)];
      int na = g.rs.negative_of(best_a), nb = g.rs.negative_of(best_b);
      Q n_neg = g.cbr[g.e_index(na)][g.e_index(nb)][g.e_index(nr)];
      if (n_pos == 0 || n_neg == 0) throw std::logic_error("gamma_d_on: degenerate pair");
      Vec<Q> vp = brk(img[g.e_index(best_a)], img[g.e_index(best_b)]);
      Vec<Q> vn = brk(img[g.e_index(na)], img[g.e_index(nb)]);
      for (auto& c : vp) c /= n_pos;
      for (auto& c : vn) c /= n_neg;
      set_img(r, vp);
      set_img(nr, vn);
    }
    if (!any && hgt > 1) break;
  }

  // consistency: automorphism property on the Levi part, involutivity
  std::vector<int> levi_idx;
  for (int i = 0; i < rank; ++i) levi_idx.push_back(i);
  for (int r = 0; r < g.rs.nroots(); ++r)
    if (in_span[r]) levi_idx.push_back(g.e_index(r));
  auto column = [&](int j) {
    Vec<Q> v(g.ncx);
    for (int m = 0; m < g.ncx; ++m) v[m] = M.at(m, j);
    return v;
  };
  for (int a : levi_idx)
    for (int b : levi_idx) {
      Vec<Q> lhs = brk(column(a), column(b));
      Vec<Q> rhs(g.ncx, Q(0));
      for (int m = 0; m < g.ncx; ++m) {
        if (g.cbr[a][b][m] == 0) continue;
        for (int t = 0; t < g.ncx; ++t) rhs[t] += g.cbr[a][b][m] * M.at(t, m);
      }
      for (int m = 0; m < g.ncx; ++m)
        if (lhs[m] != rhs[m]) throw std::logic_error("gamma_d_on: inconsistent recursion");
    }
  if (!(M * M == Mat<Q>::identity(g.ncx)))
    throw std::logic_error("gamma_d_on: result is not an involution");
  return M;
}

Mat<Q> realify_linear(const Mat<Q>& M) {
  Mat<Q> R(2 * M.rows, 2 * M.cols);
  for (int i = 0; i < M.rows; ++i)
    for (int j = 0; j < M.cols; ++j) {
      if (M.at(i, j) == 0) continue;
      R.at(2 * i, 2 * j) = M.at(i, j);
      R.at(2 * i + 1, 2 * j + 1) = M.at(i, j);
    }
  return R;
}
}  // namespace

Mat<Q> gamma_d_on(const SemisimpleRealization& g, const std::vector<int>& S,
                  const DiagramInvolution& d) {
  return realify_linear(gamma_complex_on(g, S, d));
}

Mat<Q> gamma_d(const SemisimpleRealization& g, const DiagramInvolution& d) {
  std::vector<int> all(g.rs.rank);
  for (int i = 0; i < g.rs.rank; ++i) all[i] = i;
  return gamma_d_on(g, all, d);
}

Mat<Q> gamma_d_complex(const SemisimpleRealization& g, const DiagramInvolution& d) {
  std::vector<int> all(g.rs.rank);
  for (int i = 0; i < g.rs.rank; ++i) all[i] = i;
  return gamma_complex_on(g, all, d);
}

Mat<Q> tau_d_sigma(const SemisimpleRealization& g, const ExtendedSignature& s) {
  Mat<Q> tau = a_sigma_matrix(g, s) * gamma_d(g, s.d) * g.theta_mat;
  if (!(tau * tau == Mat<Q>::identity(g.nre)))
    throw std::logic_error("tau_d_sigma: not an involution");
  return tau;
}

Q char_value(const RootSystem& rs, const Vec<Q>& s, int root_idx) {
  if (static_cast<int>(s.size()) != rs.rank) throw std::domain_error("char_value: wrong size");
  Q v = 1;
  for (int i = 0; i < rs.rank; ++i) {
    if (s[i] <= 0) throw std::domain_error("char_value: character values must be positive");
    int m = rs.roots[root_idx][i];
    for (int k = 0; k < m; ++k) v *= s[i];
    for (int k = 0; k < -m; ++k) v /= s[i];
  }
  return v;
}

Mat<Q> torus_ad(const SemisimpleRealization& g, const Vec<Q>& s) {
  Mat<Q> A(g.nre, g.nre);
  for (int i = 0; i < g.rs.rank; ++i) {
    A.at(2 * i, 2 * i) = 1;
    A.at(2 * i + 1, 2 * i + 1) = 1;
  }
  for (int r = 0; r < g.rs.nroots(); ++r) {
    Q v = char_value(g.rs, s, r);
    int c = g.e_index(r);
    A.at(2 * c, 2 * c) = v;
    A.at(2 * c + 1, 2 * c + 1) = v;
  }
  return A;
}

Mat<Q> exp_ad_nilpotent(const SemisimpleRealization& g, const Vec<Q>& x, const Q& t) {
  Mat<Q> A = g.ad_re(x);
  Mat<Q> out = Mat<Q>::identity(g.nre);
  Mat<Q> pw = Mat<Q>::identity(g.nre);
  Q coef = 1, tp = 1;
  for (int k = 1; k <= g.nre + 1; ++k) {
    pw = pw * A;
    if (pw.is_zero()) return out;
    coef *= k;
    tp *= t;
    out = out + (tp / coef) * pw;
  }
  throw std::domain_error("exp_ad_nilpotent: ad is not nilpotent");
}

Mat<Q> weyl_rep(const SemisimpleRealization& g, int simple_idx) {
  if (simple_idx < 0 || simple_idx >= g.rs.rank) throw std::domain_error("weyl_rep: bad index");
  std::vector<int> a(g.rs.rank, 0);
  a[simple_idx] = 1;
  int r = g.rs.root_index(a);
  Vec<Q> e = g.basis_e(r);
  Vec<Q> mf = g.basis_e(g.rs.negative_of(r));
  for (auto& c : mf) c = -c;
  Mat<Q> E = exp_ad_nilpotent(g, e, Q(1));
  Mat<Q> F = exp_ad_nilpotent(g, mf, Q(1));
  return E * F * E;
}

Subspace<Q> fixed_space(const Mat<Q>& A) {
  Mat<Q> B = A - Mat<Q>::identity(A.rows);
  return canonicalize(nullspace(B), A.rows);
}

Subspace<Q> map_subspace(const Mat<Q>& A, const Subspace<Q>& W) {
  Mat<Q> img = W.basis * A.transpose();
  return canonicalize(img, A.rows);
}

}  // namespace lagr
