#include "lagr/degen.hpp"

#include <set>
#include <stdexcept>

namespace lagr {

namespace {

Q root_weight(const RootSystem& rs, const Vec<Q>& alphaH, int root_idx) {
  Q w(0);
  for (int i = 0; i < rs.rank; ++i) w += Q(rs.roots[root_idx][i]) * alphaH[i];
  return w;
}

}  // namespace

std::vector<Q> complex_weights_from_H(const SemisimpleRealization& g, const Vec<Q>& alphaH) {
  if (static_cast<int>(alphaH.size()) != g.rs.rank)
    throw std::invalid_argument("grading: one value per simple root required");
  std::vector<Q> w(g.ncx, Q(0));
  for (size_t r = 0; r < g.rs.roots.size(); ++r)
    w[g.e_index(static_cast<int>(r))] = root_weight(g.rs, alphaH, static_cast<int>(r));
  return w;
}

WeightGrading grading_from_H(const SemisimpleRealization& g, const Vec<Q>& alphaH) {
  std::vector<Q> cw = complex_weights_from_H(g, alphaH);
  WeightGrading out;
  out.weights.resize(g.nre, Q(0));
  for (int c = 0; c < g.ncx; ++c) {
    out.weights[2 * c] = cw[c];
    out.weights[2 * c + 1] = cw[c];
  }
  return out;
}

bool grading_respects_bracket(const SemisimpleRealization& g, const WeightGrading& grading) {
  if (static_cast<int>(grading.weights.size()) != g.nre) return false;
  for (int i = 0; i < g.nre; ++i) {
    Vec<Q> bi(g.nre, Q(0));
    bi[i] = Q(1);
    for (int j = 0; j < g.nre; ++j) {
      Vec<Q> bj(g.nre, Q(0));
      bj[j] = Q(1);
      Vec<Q> br = g.bracket_re(bi, bj);
      for (int k = 0; k < g.nre; ++k)
        if (br[k] != 0 && grading.weights[k] != grading.weights[i] + grading.weights[j])
          return false;
    }
  }
  return true;
}

Vec<Gq> DoubleAmbient::bracket(const Vec<Gq>& z, const Vec<Gq>& w) const {
  int m = g.ncx;
  Vec<Gq> z1(m), z2(m), w1(m), w2(m);
  for (int i = 0; i < m; ++i) {
    z1[i] = z[i];
    z2[i] = z[m + i];
    w1[i] = w[i];
    w2[i] = w[m + i];
  }
  Vec<Gq> b1 = g.bracket_cx(z1, w1), b2 = g.bracket_cx(z2, w2);
  Vec<Gq> out(n, Gq(0));
  for (int i = 0; i < m; ++i) {
    out[i] = b1[i];
    out[m + i] = b2[i];
  }
  return out;
}

Vec<Gq> DoubleAmbient::tau(const Vec<Gq>& z) const {
  int m = g.ncx;
  Vec<Gq> c1(m), c2(m);
  for (int i = 0; i < m; ++i) {
    c1[i] = z[i].conj();
    c2[i] = z[m + i].conj();
  }
  Vec<Gq> t2 = theta_cx.apply(c2), t1 = theta_cx.apply(c1);
  Vec<Gq> out(n, Gq(0));
  for (int i = 0; i < m; ++i) {
    out[i] = t2[i];
    out[m + i] = t1[i];
  }
  return out;
}

DoubleAmbient double_ambient(const SemisimpleRealization& g) {
  DoubleAmbient D;
  D.g = g;
  D.n = 2 * g.ncx;
  Mat<Gq> gram(D.n, D.n);
  for (int i = 0; i < g.ncx; ++i)
    for (int j = 0; j < g.ncx; ++j) {
      gram.at(i, j) = Gq(g.kc.at(i, j));
      gram.at(g.ncx + i, g.ncx + j) = Gq(-g.kc.at(i, j));
    }
  D.I = BilinearForm<Gq>(gram);
  D.theta_cx = Mat<Gq>(g.ncx, g.ncx);
  for (int i = 0; i < g.rs.rank; ++i) D.theta_cx.at(g.h_index(i), g.h_index(i)) = Gq(-1);
  for (size_t r = 0; r < g.rs.roots.size(); ++r) {
    int ri = static_cast<int>(r);
    D.theta_cx.at(g.e_index(g.rs.negative_of(ri)), g.e_index(ri)) = Gq(-1);
  }
  return D;
}

Subspace<Gq> complexify_subspace(const SemisimpleRealization& g, const Subspace<Q>& l) {
  Mat<Gq> rows(0, 2 * g.ncx);
  for (int r = 0; r < l.dim(); ++r) {
    Vec<Q> v = l.basis.row(r);
    Vec<Gq> x = g.to_cx(v), y = g.to_cx(g.theta_mat.apply(v));
    Vec<Gq> row(2 * g.ncx, Gq(0));
    for (int i = 0; i < g.ncx; ++i) {
      row[i] = x[i];
      row[g.ncx + i] = y[i];
    }
    rows.push_row(row);
  }
  return canonicalize(rows, 2 * g.ncx);
}

Subspace<Q> real_points(const SemisimpleRealization& g, const Subspace<Gq>& W) {
  Subspace<Gq> ann = annihilator(W);
  // Phi(v) = (to_cx(v), to_cx(theta v)), real-linear in v; solve f(Phi(v)) = 0
  std::vector<Vec<Gq>> phi(g.nre);
  for (int r = 0; r < g.nre; ++r) {
    Vec<Q> u(g.nre, Q(0));
    u[r] = Q(1);
    Vec<Gq> x = g.to_cx(u), y = g.to_cx(g.theta_mat.apply(u));
    Vec<Gq> col(2 * g.ncx, Gq(0));
    for (int i = 0; i < g.ncx; ++i) {
      col[i] = x[i];
      col[g.ncx + i] = y[i];
    }
    phi[r] = col;
  }
  Mat<Q> cond(2 * ann.dim(), g.nre);
  for (int a = 0; a < ann.dim(); ++a)
    for (int r = 0; r < g.nre; ++r) {
      Gq val(0);
      for (int j = 0; j < 2 * g.ncx; ++j) val += ann.basis.at(a, j) * phi[r][j];
      cond.at(2 * a, r) = val.re;
      cond.at(2 * a + 1, r) = val.im;
    }
  return canonicalize(nullspace(cond), g.nre);
}

CheckReport lagrangian_I_axioms(const DoubleAmbient& D, const Subspace<Gq>& W) {
  CheckReport rep;
  rep.add("half_dimension", W.dim() == D.g.ncx);
  rep.add("isotropic", is_isotropic(W, D.I));
  bool closed = true;
  for (int i = 0; i < W.dim() && closed; ++i)
    for (int j = i + 1; j < W.dim(); ++j)
      if (!W.contains(D.bracket(W.basis.row(i), W.basis.row(j)))) {
        closed = false;
        break;
      }
  rep.add("closed", closed);
  return rep;
}

bool is_lagrangian_I(const DoubleAmbient& D, const Subspace<Gq>& W) {
  return lagrangian_I_axioms(D, W).all_pass();
}

bool real_structure_test(const DoubleAmbient& D, const Subspace<Gq>& W) {
  Mat<Gq> rows(0, D.n);
  for (int r = 0; r < W.dim(); ++r) rows.push_row(D.tau(W.basis.row(r)));
  return canonicalize(rows, D.n) == W;
}

Subspace<Gq> build_g_d_eta(const SemisimpleRealization& g, const DiagramInvolution& d,
                           const std::vector<int>& eta) {
  if (static_cast<int>(eta.size()) != g.rs.rank)
    throw std::invalid_argument("build_g_d_eta: one eta value per simple root");
  for (int v : eta)
    if (v != 0 && v != 1) throw std::domain_error("build_g_d_eta: eta must be 0/1-valued");
  std::vector<int> S;
  for (int i = 0; i < g.rs.rank; ++i)
    if (eta[i] == 1) S.push_back(i);
  std::set<int> sset(S.begin(), S.end());
  Mat<Q> gam = gamma_d_complex(g, d);

  auto in_span = [&](int root_idx) {
    for (int i = 0; i < g.rs.rank; ++i)
      if (g.rs.roots[root_idx][i] != 0 && !sset.count(i)) return false;
    return true;
  };

  Mat<Gq> rows(0, 2 * g.ncx);
  auto push_pair = [&](const Vec<Q>& first, const Vec<Q>& second) {
    Vec<Gq> row(2 * g.ncx, Gq(0));
    for (int i = 0; i < g.ncx; ++i) {
      row[i] = Gq(first[i]);
      row[g.ncx + i] = Gq(second[i]);
    }
    rows.push_row(row);
  };

  // Levi part: (X, gamma_d X) for the Cartan and the [S]-root vectors
  for (int i = 0; i < g.rs.rank; ++i) {
    Vec<Q> h(g.ncx, Q(0));
    h[g.h_index(i)] = Q(1);
    push_pair(h, gam.apply(h));
  }
  for (size_t r = 0; r < g.rs.roots.size(); ++r) {
    int ri = static_cast<int>(r);
    if (!in_span(ri)) continue;
    Vec<Q> e(g.ncx, Q(0));
    e[g.e_index(ri)] = Q(1);
    push_pair(e, gam.apply(e));
  }
  // nilradical in the first factor, its gamma_d-twisted opposite in the second
  for (int p = 0; p < g.rs.npos; ++p) {
    if (in_span(p)) continue;
    Vec<Q> e(g.ncx, Q(0)), zero(g.ncx, Q(0));
    e[g.e_index(p)] = Q(1);
    push_pair(e, zero);
    Vec<Q> em(g.ncx, Q(0));
    em[g.e_index(g.rs.negative_of(p))] = Q(1);
    push_pair(zero, gam.apply(em));
  }
  return canonicalize(rows, 2 * g.ncx);
}

Subspace<Gq> limit_in_double(const SemisimpleRealization& g, const Subspace<Gq>& W,
                             const Vec<Q>& alphaH) {
  std::vector<Q> cw = complex_weights_from_H(g, alphaH);
  std::vector<Q> doubled(2 * g.ncx, Q(0));
  for (int c = 0; c < g.ncx; ++c) {
    doubled[c] = cw[c];
    doubled[g.ncx + c] = -cw[c];
  }
  return limit_subspace(W, doubled);
}

}  // namespace lagr
