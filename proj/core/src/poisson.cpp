#include "lagr/poisson.hpp"

#include <sstream>
#include <stdexcept>

namespace lagr {

namespace {

Q quad_value(const Mat<Q>& M, const Vec<Q>& a, const Vec<Q>& b) {
  Q out(0);
  for (int i = 0; i < M.rows; ++i)
    for (int j = 0; j < M.cols; ++j) out += a[i] * M.at(i, j) * b[j];
  return out;
}

// coordinates of x modulo V0 in the rows of comp (throws if x outside V0 + comp)
Vec<Q> quotient_coords(const Mat<Q>& comp, const Subspace<Q>& V0, const Vec<Q>& x) {
  Mat<Q> stacked = comp;
  for (int r = 0; r < V0.dim(); ++r) stacked.push_row(V0.basis.row(r));
  auto sol = solve(stacked.transpose(), x);
  if (!sol) throw std::domain_error("quotient coordinates: vector outside the span");
  Vec<Q> out(comp.rows, Q(0));
  for (int j = 0; j < comp.rows; ++j) out[j] = (*sol)[j];
  return out;
}

void validate_quotient_shape(const ManinTriple& t, const QuotientBivector& qb,
                             const Subspace<Q>& u_m) {
  if (!(qb.V == t.u) || !(qb.V0 == u_m))
    throw std::domain_error("bivector is not defined over u / u_m");
  int m = qb.comp.rows;
  if (qb.lambda.rows != m || qb.lambda.cols != m)
    throw std::domain_error("bivector matrix does not match the complement basis");
  if (!(qb.lambda + qb.lambda.transpose()).is_zero())
    throw std::domain_error("bivector matrix is not antisymmetric");
  Mat<Q> stacked = qb.comp;
  for (int r = 0; r < u_m.dim(); ++r) stacked.push_row(u_m.basis.row(r));
  if (rank(stacked) != m + u_m.dim() || m + u_m.dim() != t.u.dim())
    throw std::domain_error("complement basis does not complement u_m in u");
  for (int r = 0; r < m; ++r)
    if (!t.u.contains(qb.comp.row(r)))
      throw std::domain_error("complement basis leaves u");
}

}  // namespace

Subspace<Q> stabilizer_dl(const ManinTriple& t, const Subspace<Q>& l) {
  return normalizer_in(t.d.bracket, l, Subspace<Q>::full(t.d.dim));
}

bool check_Pi_jacobi(const ManinTriple& t, const Subspace<Q>& l) {
  Subspace<Q> dl = stabilizer_dl(t, l);
  Subspace<Q> ann = orthogonal(dl, t.d.form);  // sharps of the annihilator covectors
  for (int i = 0; i < ann.dim(); ++i)
    for (int j = i + 1; j < ann.dim(); ++j)
      for (int k = j + 1; k < ann.dim(); ++k) {
        Q val = Q(2) * t.d.form.eval(ann.basis.row(i),
                                     t.d.bracket(ann.basis.row(j), ann.basis.row(k)));
        if (val != 0) return false;
      }
  return true;
}

bool check_tangency(const ManinTriple& t, const Subspace<Q>& l) {
  Subspace<Q> dl = stabilizer_dl(t, l);
  Subspace<Q> ann = orthogonal(dl, t.d.form);
  Subspace<Q> u_plus_dl = sum(t.u, dl);
  Mat<Q> R = build_R(t);
  for (int i = 0; i < ann.dim(); ++i) {
    Vec<Q> v = ann.basis.row(i);
    auto [x, xi] = split_uv(t, v);
    Vec<Q> contracted = contract_R(R, t.d.form.gram.apply(v));
    if (!(contracted == x - xi)) return false;          // bilinear unfolding identity
    if (!u_plus_dl.contains(x - xi)) return false;      // class lies in the image of u
    if (!dl.contains((x - xi) - (Q(2) * x))) return false;  // and equals the class of 2x
  }
  return true;
}

Subspace<Q> T_map(const ManinTriple& t, const Subspace<Q>& l) {
  Subspace<Q> ul = normalizer_in(t.d.bracket, l, t.u);
  Subspace<Q> ul_perp = orthogonal(ul, t.d.form);
  return sum(ul, intersect(sum(t.u, ul_perp), l));
}

Subspace<Q> drinfeld_l_from_pi(const HomogeneousSpec& spec) {
  const ManinTriple& t = spec.triple;
  if (!t.u.contains(spec.u_m)) throw std::domain_error("drinfeld: u_m is not inside u");
  validate_quotient_shape(t, spec.lambda, spec.u_m);
  const Mat<Q>& comp = spec.lambda.comp;
  int m = comp.rows;

  // covectors vanishing on u_m, realized inside u* via the form
  Subspace<Q> fs = intersect(t.ustar, orthogonal(spec.u_m, t.d.form));
  Mat<Q> rows(0, t.d.dim);
  for (int r = 0; r < spec.u_m.dim(); ++r) rows.push_row(spec.u_m.basis.row(r));
  for (int a = 0; a < fs.dim(); ++a) {
    Vec<Q> f = fs.basis.row(a);
    Vec<Q> xibar(m, Q(0));
    for (int i = 0; i < m; ++i) xibar[i] = t.d.form.eval(f, comp.row(i));
    Vec<Q> x(t.d.dim, Q(0));
    for (int j = 0; j < m; ++j) {
      Q coef(0);
      for (int i = 0; i < m; ++i) coef += xibar[i] * spec.lambda.lambda.at(i, j);
      x = x + coef * comp.row(j);
    }
    rows.push_row(x + f);
  }
  return canonicalize(rows, t.d.dim);
}

QuotientBivector lambda_from_W(const ManinTriple& t, const Subspace<Q>& W,
                               const Subspace<Q>& V0, const Mat<Q>* comp_in) {
  if (!(intersect(W, t.u) == V0))
    throw std::domain_error("lambda_from_W: W cap V differs from V0");
  if (2 * W.dim() != t.d.dim || !is_isotropic(W, t.d.form))
    throw std::domain_error("lambda_from_W: W is not maximal isotropic");

  QuotientBivector qb;
  qb.V = t.u;
  qb.V0 = V0;
  qb.comp = comp_in ? *comp_in : complement_basis(V0, t.u);
  int m = qb.comp.rows;

  Subspace<Q> fs = intersect(t.ustar, orthogonal(V0, t.d.form));
  if (fs.dim() != m) throw std::logic_error("lambda_from_W: quotient dimensions disagree");

  // find w in W whose u*-part is f: w = f + (element of u)
  Mat<Q> stacked = W.basis;
  for (int r = 0; r < t.u.dim(); ++r) stacked.push_row(t.u.basis.row(r));
  Mat<Q> P(m, m), mu(m, m);
  for (int a = 0; a < m; ++a) {
    Vec<Q> f = fs.basis.row(a);
    auto sol = solve(stacked.transpose(), f);
    if (!sol) throw std::logic_error("lambda_from_W: covector not reached by W");
    Vec<Q> w(t.d.dim, Q(0));
    for (int r = 0; r < W.dim(); ++r) w = w + (*sol)[r] * W.basis.row(r);
    Vec<Q> x = w - f;
    Vec<Q> xq = quotient_coords(qb.comp, V0, x);
    for (int i = 0; i < m; ++i) {
      P.at(a, i) = t.d.form.eval(f, qb.comp.row(i));
      mu.at(a, i) = xq[i];
    }
  }
  auto Pinv = inverse(P);
  if (!Pinv) throw std::logic_error("lambda_from_W: degenerate quotient pairing");
  qb.lambda = *Pinv * mu;
  if (!(qb.lambda + qb.lambda.transpose()).is_zero())
    throw std::logic_error("lambda_from_W: recovered matrix is not antisymmetric");
  return qb;
}

QuotientBivector pushforward(const ManinTriple& t, const QuotientBivector& qb0,
                             const Subspace<Q>& V1, const Mat<Q>* comp1_in) {
  if (!V1.contains(qb0.V0) || !t.u.contains(V1))
    throw std::domain_error("pushforward: need V0 inside V1 inside u");
  QuotientBivector out;
  out.V = t.u;
  out.V0 = V1;
  out.comp = comp1_in ? *comp1_in : complement_basis(V1, t.u);
  int m0 = qb0.comp.rows, m1 = out.comp.rows;
  Mat<Q> A(m0, m1);
  for (int i = 0; i < m0; ++i) {
    Vec<Q> c = quotient_coords(out.comp, V1, qb0.comp.row(i));
    for (int j = 0; j < m1; ++j) A.at(i, j) = c[j];
  }
  out.lambda = A.transpose() * qb0.lambda * A;
  return out;
}

bool pushforward_check(const ManinTriple& t, const QuotientBivector& qb0,
                       const QuotientBivector& qb1) {
  QuotientBivector j = pushforward(t, qb0, qb1.V0, &qb1.comp);
  bool matrix_equal = (j.lambda == qb1.lambda);

  HomogeneousSpec s0{t, qb0.V0, qb0, Q(0)};
  HomogeneousSpec s1{t, qb1.V0, qb1, Q(0)};
  Subspace<Q> W0 = drinfeld_l_from_pi(s0);
  Subspace<Q> W1 = drinfeld_l_from_pi(s1);
  Subspace<Q> v1_perp = intersect(t.ustar, orthogonal(qb1.V0, t.d.form));
  Subspace<Q> rhs = sum(qb1.V0, intersect(sum(t.u, v1_perp), W0));
  bool subspace_equal = (W1 == rhs);

  if (matrix_equal != subspace_equal)
    throw std::logic_error("pushforward_check: matrix and subspace certificates disagree");
  return matrix_equal;
}

ManinTriple linear_triple(int n) {
  QuadraticLieAlgebra d;
  d.dim = 2 * n;
  d.bracket = [n](const Vec<Q>&, const Vec<Q>&) { return Vec<Q>(2 * n, Q(0)); };
  Mat<Q> G(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    G.at(i, n + i) = Q(1);
    G.at(n + i, i) = Q(1);
  }
  d.form = BilinearForm<Q>(G);
  Mat<Q> urows(0, 2 * n), srows(0, 2 * n);
  for (int i = 0; i < n; ++i) {
    Vec<Q> eu(2 * n, Q(0)), es(2 * n, Q(0));
    eu[i] = Q(1);
    es[n + i] = Q(1);
    urows.push_row(eu);
    srows.push_row(es);
  }
  return make_triple(d, canonicalize(urows, 2 * n), canonicalize(srows, 2 * n));
}

KBivector pi_K_Lambda(const SemisimpleRealization& g) {
  ManinTriple t = iwasawa_double(g);
  int n = g.nre;
  Mat<Q> L0(n, n);
  for (int p = 0; p < g.rs.npos; ++p) {
    Vec<Q> X = g.X_alpha(p), Y = g.Y_alpha(p);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) L0.at(i, j) += X[i] * Y[j] - Y[i] * X[j];
  }
  // cobracket compatibility: kappa * (ad_x L0 + L0 ad_x^T)(G xi, G eta) = <x, [xi, eta]>
  const Mat<Q>& G = t.d.form.gram;
  Q kappa(0);
  bool found = false;
  for (int a = 0; a < t.u.dim(); ++a) {
    Vec<Q> x = t.u.basis.row(a);
    Mat<Q> adx = g.ad_re(x);
    Mat<Q> M = adx * L0 + L0 * adx.transpose();
    for (int i = 0; i < t.ustar.dim(); ++i)
      for (int j = i + 1; j < t.ustar.dim(); ++j) {
        Vec<Q> xi = t.ustar.basis.row(i), eta = t.ustar.basis.row(j);
        Q lhs = quad_value(M, G.apply(xi), G.apply(eta));
        Q rhs = t.d.form.eval(x, t.d.bracket(xi, eta));
        if (lhs == 0) {
          if (rhs != 0) throw std::logic_error("pi_K_Lambda: inconsistent cobracket system");
        } else {
          Q k2 = rhs / lhs;
          if (!found) {
            kappa = k2;
            found = true;
          } else if (k2 != kappa) {
            throw std::logic_error("pi_K_Lambda: cobracket system fixes no single scale");
          }
        }
      }
  }
  if (!found) throw std::logic_error("pi_K_Lambda: cobracket system is degenerate");
  return {kappa * L0, kappa};
}

namespace {

// complement of t in k spanned by X_a, Y_a pairs in root order
Mat<Q> xy_complement(const SemisimpleRealization& g) {
  Mat<Q> comp(0, g.nre);
  for (int p = 0; p < g.rs.npos; ++p) {
    comp.push_row(g.X_alpha(p));
    comp.push_row(g.Y_alpha(p));
  }
  return comp;
}

// normalization solved from the identity-signature instance at s = 2
Q solve_reference_constant(const SemisimpleRealization& g, const ManinTriple& t,
                           const Subspace<Q>& torus, const Mat<Q>& comp) {
  ExtendedSignature ref = make_signature(g.rs, std::vector<int>(g.rs.rank, 1),
                                         identity_involution(g.rs));
  Vec<Q> chars_ref(g.rs.rank, Q(2));
  Subspace<Q> W = l_H_sigma(g, ref, chars_ref);
  QuotientBivector qb = lambda_from_W(t, W, torus, &comp);
  Q c(0);
  bool found = false;
  for (int p = 0; p < g.rs.npos; ++p) {
    Q s = char_value(g.rs, chars_ref, p);
    Q cp = qb.lambda.at(2 * p, 2 * p + 1) * (Q(1) - s * s);
    if (!found) {
      c = cp;
      found = true;
    } else if (cp != c) {
      throw std::logic_error("pi_H_sigma: reference instance fixes no single scale");
    }
  }
  // off-block entries of the reference bivector must vanish
  for (int i = 0; i < qb.lambda.rows; ++i)
    for (int j = 0; j < qb.lambda.cols; ++j)
      if (i / 2 != j / 2 && qb.lambda.at(i, j) != 0)
        throw std::logic_error("pi_H_sigma: reference bivector is not block diagonal");
  if (!found) throw std::logic_error("pi_H_sigma: no positive roots to calibrate against");
  return c;
}

}  // namespace

HomogeneousSpec pi_H_sigma(const SemisimpleRealization& g, const ExtendedSignature& sigma,
                           const Vec<Q>& chars) {
  if (!sigma.d.is_identity()) throw std::domain_error("pi_H_sigma: requires d = id");
  ManinTriple t = iwasawa_double(g);
  IwasawaParts parts = iwasawa_parts(g);
  Mat<Q> comp = xy_complement(g);
  Q c = solve_reference_constant(g, t, parts.t, comp);

  Mat<Q> lam(comp.rows, comp.rows);
  for (int p = 0; p < g.rs.npos; ++p) {
    int sv = sigma_value(g.rs, sigma, p);
    if (sv == 0) continue;
    Q s = char_value(g.rs, chars, p);
    Q qa = Q(sv) * s * s;
    if (qa == 1) {
      std::ostringstream msg;
      msg << "pi_H_sigma: singular coefficient at alpha = [";
      for (size_t i = 0; i < g.rs.roots[p].size(); ++i) {
        if (i) msg << ",";
        msg << g.rs.roots[p][i];
      }
      msg << "]";
      throw std::domain_error(msg.str());
    }
    Q mu = c / (Q(1) - qa);
    lam.at(2 * p, 2 * p + 1) = mu;
    lam.at(2 * p + 1, 2 * p) = -mu;
  }
  HomogeneousSpec out;
  out.triple = t;
  out.u_m = parts.t;
  out.lambda = QuotientBivector{t.u, parts.t, comp, lam};
  out.scale = c;
  return out;
}

}  // namespace lagr
