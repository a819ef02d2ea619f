#include "lagr/manin.hpp"

#include <memory>
#include <stdexcept>

namespace lagr {

ManinTriple make_triple(QuadraticLieAlgebra d, Subspace<Q> u, Subspace<Q> ustar) {
  if (u.ambient != d.dim || ustar.ambient != d.dim)
    throw std::domain_error("make_triple: ambient mismatch");
  if (u.dim() + ustar.dim() != d.dim || intersect(u, ustar).dim() != 0)
    throw std::domain_error("make_triple: u and u* are not complementary");
  if (!is_isotropic(u, d.form) || !is_isotropic(ustar, d.form))
    throw std::domain_error("make_triple: isotropy fails");

  int m = u.dim();
  Mat<Q> P(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) P.at(i, j) = d.form.eval(u.basis.row(i), ustar.basis.row(j));
  auto Pinv = inverse(P);
  if (!Pinv) throw std::domain_error("make_triple: degenerate pairing between u and u*");

  ManinTriple t;
  t.e_basis = u.basis;
  t.eta_basis = Pinv->transpose() * ustar.basis;
  t.u = std::move(u);
  t.ustar = std::move(ustar);
  t.d = std::move(d);
  return t;
}

CheckReport check_manin(const ManinTriple& t) {
  CheckReport rep;
  const int n = t.d.dim;
  auto unit = [&](int i) {
    Vec<Q> v(n, Q(0));
    v[i] = 1;
    return v;
  };

  rep.add("form_symmetric", t.d.form.is_symmetric());
  rep.add("form_nondegenerate", t.d.form.is_nondegenerate());

  // structure-constant tables so the cubic sweeps stay in plain arithmetic
  std::vector<std::vector<Vec<Q>>> bb(n);
  std::vector<std::vector<Vec<Q>>> gb(n);
  for (int i = 0; i < n; ++i) {
    bb[i].reserve(n);
    gb[i].reserve(n);
    for (int j = 0; j < n; ++j) {
      bb[i].push_back(t.d.bracket(unit(i), unit(j)));
      gb[i].push_back(t.d.form.gram.apply(bb[i][j]));
    }
  }
  // [x_i, w] expanded through the table
  auto br_vec = [&](int i, const Vec<Q>& w) {
    Vec<Q> out(n, Q(0));
    for (int m = 0; m < n; ++m)
      if (w[m] != 0) out = out + w[m] * bb[i][m];
    return out;
  };

  bool invariant = true;
  for (int i = 0; i < n && invariant; ++i)
    for (int j = 0; j < n && invariant; ++j)
      for (int k = 0; k < n; ++k)
        if (gb[i][j][k] + gb[i][k][j] != 0) {
          invariant = false;
          break;
        }
  rep.add("form_invariant", invariant);

  bool antisym = true, jacobi = true;
  for (int i = 0; i < n && antisym; ++i)
    for (int j = 0; j < n && antisym; ++j)
      if (!is_zero(bb[i][j] + bb[j][i])) antisym = false;
  rep.add("bracket_antisymmetric", antisym);
  for (int i = 0; i < n && jacobi; ++i)
    for (int j = i + 1; j < n && jacobi; ++j)
      for (int k = j + 1; k < n; ++k) {
        Vec<Q> s = br_vec(i, bb[j][k]) + br_vec(j, bb[k][i]) + br_vec(k, bb[i][j]);
        if (!is_zero(s)) {
          jacobi = false;
          break;
        }
      }
  rep.add("bracket_jacobi", jacobi);

  auto closed = [&](const Subspace<Q>& W) {
    for (int i = 0; i < W.dim(); ++i)
      for (int j = i + 1; j < W.dim(); ++j)
        if (!W.contains(t.d.bracket(W.basis.row(i), W.basis.row(j)))) return false;
    return true;
  };
  rep.add("u_isotropic", is_isotropic(t.u, t.d.form));
  rep.add("ustar_isotropic", is_isotropic(t.ustar, t.d.form));
  rep.add("u_subalgebra", closed(t.u));
  rep.add("ustar_subalgebra", closed(t.ustar));
  rep.add("transversal",
          t.u.dim() + t.ustar.dim() == n && intersect(t.u, t.ustar).dim() == 0);

  bool dual = true;
  for (int i = 0; i < t.e_basis.rows && dual; ++i)
    for (int j = 0; j < t.eta_basis.rows; ++j) {
      Q want = (i == j) ? 1 : 0;
      if (t.d.form.eval(t.e_basis.row(i), t.eta_basis.row(j)) != want) {
        dual = false;
        break;
      }
    }
  rep.add("dual_bases", dual);
  return rep;
}

Mat<Q> build_R(const ManinTriple& t) {
  return t.eta_basis.transpose() * t.e_basis - t.e_basis.transpose() * t.eta_basis;
}

Vec<Q> sharp(const ManinTriple& t, const Vec<Q>& functional) {
  auto v = solve(t.d.form.gram, functional);
  if (!v) throw std::domain_error("sharp: functional outside the form image");
  return *v;
}

Vec<Q> contract_R(const Mat<Q>& R, const Vec<Q>& functional) {
  return R.transpose().apply(functional);
}

std::pair<Vec<Q>, Vec<Q>> split_uv(const ManinTriple& t, const Vec<Q>& v) {
  Mat<Q> stacked = vstack(t.u.basis, t.ustar.basis).transpose();
  auto c = solve(stacked, v);
  if (!c) throw std::logic_error("split_uv: vector outside u + u*");
  Vec<Q> x(t.d.dim, Q(0)), xi(t.d.dim, Q(0));
  for (int i = 0; i < t.u.dim(); ++i) x = x + (*c)[i] * t.u.basis.row(i);
  for (int j = 0; j < t.ustar.dim(); ++j)
    xi = xi + (*c)[t.u.dim() + j] * t.ustar.basis.row(j);
  return {x, xi};
}

Subspace<Q> normalizer_in(const Bracket& bracket, const Subspace<Q>& W,
                          const Subspace<Q>& ambient) {
  check_same_ambient(W, ambient);
  Mat<Q> ann = annihilator(W).basis;
  int m = ambient.dim();
  Mat<Q> cond(0, m);
  for (int b = 0; b < W.dim(); ++b) {
    std::vector<Vec<Q>> br(m);
    for (int a = 0; a < m; ++a) br[a] = bracket(ambient.basis.row(a), W.basis.row(b));
    for (int r = 0; r < ann.rows; ++r) {
      Vec<Q> row(m, Q(0));
      for (int a = 0; a < m; ++a) {
        Q s = 0;
        for (int j = 0; j < ambient.ambient; ++j) s += ann.at(r, j) * br[a][j];
        row[a] = s;
      }
      cond.push_row(row);
    }
  }
  if (cond.rows == 0) return ambient;
  Mat<Q> coeff = nullspace(cond);
  Mat<Q> out = coeff * ambient.basis;
  return canonicalize(out, ambient.ambient);
}

ManinTriple iwasawa_double(const SemisimpleRealization& g) {
  auto gp = std::make_shared<SemisimpleRealization>(g);
  QuadraticLieAlgebra d;
  d.dim = g.nre;
  d.bracket = [gp](const Vec<Q>& x, const Vec<Q>& y) { return gp->bracket_re(x, y); };
  d.form = BilinearForm<Q>(Q(2) * g.im_gram);
  IwasawaParts parts = iwasawa_parts(g);
  return make_triple(std::move(d), parts.k, sum(parts.a, parts.n));
}

ManinTriple heisenberg_double() {
  // basis order X, Y, Z, fX, fY, fZ
  const int n = 6;
  auto table = std::make_shared<std::vector<std::vector<Vec<Q>>>>(
      n, std::vector<Vec<Q>>(n, Vec<Q>(n, Q(0))));
  auto set = [&](int i, int j, int k, int val) {
    (*table)[i][j][k] = val;
    (*table)[j][i][k] = -val;
  };
  set(0, 1, 2, 1);   // [X, Y] = Z
  set(0, 5, 4, -1);  // [X, fZ] = -fY
  set(1, 5, 3, 1);   // [Y, fZ] = fX

  QuadraticLieAlgebra d;
  d.dim = n;
  d.bracket = [table](const Vec<Q>& x, const Vec<Q>& y) {
    Vec<Q> out(n, Q(0));
    for (int i = 0; i < n; ++i) {
      if (x[i] == 0) continue;
      for (int j = 0; j < n; ++j) {
        if (y[j] == 0) continue;
        for (int k = 0; k < n; ++k) out[k] += x[i] * y[j] * (*table)[i][j][k];
      }
    }
    return out;
  };
  Mat<Q> gram(n, n);
  for (int i = 0; i < 3; ++i) gram.at(i, 3 + i) = gram.at(3 + i, i) = 1;
  d.form = BilinearForm<Q>(gram);

  Mat<Q> urows(0, n), vrows(0, n);
  for (int i = 0; i < 3; ++i) {
    Vec<Q> a(n, Q(0)), b(n, Q(0));
    a[i] = 1;
    b[3 + i] = 1;
    urows.push_row(a);
    vrows.push_row(b);
  }
  return make_triple(std::move(d), canonicalize(urows, n), canonicalize(vrows, n));
}

ManinTriple borel_double(const SemisimpleRealization& g) {
  const int ng = g.ncx, nh = g.rs.rank, n = ng + nh;
  auto gp = std::make_shared<SemisimpleRealization>(g);
  QuadraticLieAlgebra d;
  d.dim = n;
  d.bracket = [gp, ng, n](const Vec<Q>& x, const Vec<Q>& y) {
    // split rational form on the first factor, abelian second factor
    Vec<Q> out(n, Q(0));
    for (int i = 0; i < ng; ++i) {
      if (x[i] == 0) continue;
      for (int j = 0; j < ng; ++j) {
        if (y[j] == 0) continue;
        for (int k = 0; k < ng; ++k) out[k] += x[i] * y[j] * gp->cbr[i][j][k];
      }
    }
    return out;
  };
  Mat<Q> gram(n, n);
  for (int i = 0; i < ng; ++i)
    for (int j = 0; j < ng; ++j) gram.at(i, j) = g.kc.at(i, j);
  for (int i = 0; i < nh; ++i)
    for (int j = 0; j < nh; ++j) gram.at(ng + i, ng + j) = -g.kc.at(i, j);
  d.form = BilinearForm<Q>(gram);

  Mat<Q> urows(0, n), vrows(0, n);
  for (int i = 0; i < nh; ++i) {
    Vec<Q> a(n, Q(0)), b(n, Q(0));
    a[g.h_index(i)] = 1;
    a[ng + i] = 1;
    b[g.h_index(i)] = 1;
    b[ng + i] = -1;
    urows.push_row(a);
    vrows.push_row(b);
  }
  for (int r = 0; r < g.rs.npos; ++r) {
    Vec<Q> a(n, Q(0)), b(n, Q(0));
    a[g.e_index(r)] = 1;
    b[g.e_index(g.rs.negative_of(r))] = 1;
    urows.push_row(a);
    vrows.push_row(b);
  }
  return make_triple(std::move(d), canonicalize(urows, n), canonicalize(vrows, n));
}

}  // namespace lagr
