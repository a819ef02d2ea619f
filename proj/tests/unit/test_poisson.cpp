// Quotient bivectors, the graph correspondence between bivector classes and
// Lagrangian subspaces, the projection T, and the two closed-form bivectors
// with their solved normalization constants (frozen values -1/16 and 1/8 for
// the rank-one case, derived independently from 2x2 matrix computations).

#include "doctest.h"

#include "lagr/lagrange.hpp"
#include "lagr/poisson.hpp"

using namespace lagr;

namespace {

Mat<Q> random_antisym(Rng& rng, int m) {
  Mat<Q> lam(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      lam.at(i, j) = rng.rational(4, 2);
      lam.at(j, i) = -lam.at(i, j);
    }
  return lam;
}

}  // namespace

TEST_CASE("graph subspace round trip on the abelian hyperbolic triple") {
  Rng rng(401);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 1 + static_cast<int>(rng.below(5));
    ManinTriple tri = linear_triple(n);
    // random V0 inside u
    int k = static_cast<int>(rng.below(static_cast<std::uint64_t>(n + 1)));
    Mat<Q> rows(0, 2 * n);
    for (int i = 0; i < k; ++i) {
      Vec<Q> r(static_cast<size_t>(2 * n), Q(0));
      for (int j = 0; j < n; ++j) r[static_cast<size_t>(j)] = rng.rational(3, 2);
      rows.push_row(r);
    }
    Subspace<Q> V0 = canonicalize(rows, 2 * n);
    Mat<Q> comp = complement_basis(V0, tri.u);
    Mat<Q> lam = random_antisym(rng, comp.rows);
    QuotientBivector qb{tri.u, V0, comp, lam};
    HomogeneousSpec spec{tri, V0, qb, Q(0)};
    Subspace<Q> W = drinfeld_l_from_pi(spec);
    CHECK(W.dim() == n);
    CHECK(intersect(W, tri.u) == V0);
    QuotientBivector back = lambda_from_W(tri, W, V0, &comp);
    CHECK(back.lambda == lam);
    // and forward again
    HomogeneousSpec spec2{tri, V0, back, Q(0)};
    CHECK(drinfeld_l_from_pi(spec2) == W);
  }
}

TEST_CASE("recovered class does not depend on the complement choice") {
  ManinTriple tri = linear_triple(3);
  // V0 = first coordinate line, two complements of it inside u
  Vec<Q> v0(static_cast<size_t>(6), Q(0));
  v0[0] = Q(1);
  Subspace<Q> V0 = span_of<Q>({v0}, 6);
  Mat<Q> comp1 = complement_basis(V0, tri.u);
  Mat<Q> comp2 = comp1;
  for (int i = 0; i < comp2.rows; ++i) comp2.at(i, 0) = Q(i + 1);  // shift by V0
  Rng rng(402);
  Mat<Q> lam = random_antisym(rng, comp1.rows);
  QuotientBivector qb1{tri.u, V0, comp1, lam};
  HomogeneousSpec s1{tri, V0, qb1, Q(0)};
  Subspace<Q> W = drinfeld_l_from_pi(s1);
  QuotientBivector r1 = lambda_from_W(tri, W, V0, &comp1);
  QuotientBivector r2 = lambda_from_W(tri, W, V0, &comp2);
  HomogeneousSpec t1{tri, V0, r1, Q(0)};
  HomogeneousSpec t2{tri, V0, r2, Q(0)};
  CHECK(drinfeld_l_from_pi(t1) == drinfeld_l_from_pi(t2));
}

TEST_CASE("lambda recovery validates its preconditions") {
  ManinTriple tri = linear_triple(2);
  // W = u has W cap u != 0-dim V0
  CHECK_THROWS_AS(lambda_from_W(tri, tri.u, Subspace<Q>::zero(4), nullptr), std::domain_error);
  // non-isotropic W: graph of a symmetric, non-antisymmetric matrix
  Vec<Q> w1(static_cast<size_t>(4), Q(0)), w2(static_cast<size_t>(4), Q(0));
  w1[0] = Q(1);
  w1[2] = Q(1);  // x_1 + f_1
  w2[1] = Q(1);
  w2[3] = Q(1);  // x_2 + f_2
  Subspace<Q> W = span_of<Q>({w1, w2}, 4);
  CHECK_THROWS_AS(lambda_from_W(tri, W, Subspace<Q>::zero(4), nullptr), std::domain_error);
}

TEST_CASE("pushforward agrees with the subspace certificate and detects tampering") {
  ManinTriple tri = linear_triple(3);
  Subspace<Q> V0 = Subspace<Q>::zero(6);
  Mat<Q> comp0 = complement_basis(V0, tri.u);
  Rng rng(403);
  Mat<Q> lam = random_antisym(rng, 3);
  QuotientBivector qb0{tri.u, V0, comp0, lam};
  // V1 = V0 + first complement direction
  Mat<Q> rows(0, 6);
  rows.push_row(comp0.row(0));
  Subspace<Q> V1 = canonicalize(rows, 6);
  QuotientBivector qb1 = pushforward(tri, qb0, V1);
  CHECK(pushforward_check(tri, qb0, qb1));
  // tamper with the pushed-forward class
  QuotientBivector bad = qb1;
  if (bad.lambda.rows >= 2) {
    bad.lambda.at(0, 1) += Q(1);
    bad.lambda.at(1, 0) -= Q(1);
    CHECK(!pushforward_check(tri, qb0, bad));
  }
  // V1 must contain V0
  Subspace<Q> stray = span_of<Q>({tri.ustar.basis.row(0)}, 6);
  CHECK_THROWS_AS(pushforward(tri, qb0, stray), std::domain_error);
}

TEST_CASE("projection T collapses onto the fixed locus") {
  SemisimpleRealization g = build_chevalley('A', 2);
  ManinTriple tri = iwasawa_double(g);
  IwasawaParts parts = iwasawa_parts(g);
  CHECK(T_map(tri, parts.k) == parts.k);
  CHECK(T_map(tri, sum(parts.a, parts.n)) == sum(parts.t, parts.n));
  CHECK(T_map(tri, sum(parts.t, parts.n)) == sum(parts.t, parts.n));
  // idempotent on these
  Subspace<Q> img = T_map(tri, sum(parts.a, parts.n));
  CHECK(T_map(tri, img) == img);
}

TEST_CASE("stabilizer of the compact form is the compact form") {
  SemisimpleRealization g = build_chevalley('A', 1);
  ManinTriple tri = iwasawa_double(g);
  Subspace<Q> k = fixed_space(g.theta_mat);
  CHECK(stabilizer_dl(tri, k) == k);
}

TEST_CASE("certificates hold on the classical points") {
  SemisimpleRealization g = build_chevalley('A', 1);
  ManinTriple tri = iwasawa_double(g);
  IwasawaParts parts = iwasawa_parts(g);
  for (const Subspace<Q>& l :
       {parts.k, sum(parts.t, parts.n), sum(parts.a, parts.n)}) {
    CHECK(check_Pi_jacobi(tri, l));
    CHECK(check_tangency(tri, l));
  }
}

TEST_CASE("invariant bivector on the compact form, frozen rank-one scale") {
  SemisimpleRealization g1 = build_chevalley('A', 1);
  KBivector kb1 = pi_K_Lambda(g1);
  CHECK(kb1.scale == Q(-1, 16));
  CHECK(kb1.matrix == Q(-1) * kb1.matrix.transpose());
  SemisimpleRealization g2 = build_chevalley('A', 2);
  KBivector kb2 = pi_K_Lambda(g2);
  CHECK(!(kb2.scale == 0));
  CHECK(kb2.matrix == Q(-1) * kb2.matrix.transpose());
}

TEST_CASE("torus-twisted bivector: frozen reference constant and blocks") {
  SemisimpleRealization g = build_chevalley('A', 1);
  ExtendedSignature plus = make_signature(g.rs, {1}, identity_involution(g.rs));
  Vec<Q> chars{Q(2)};
  HomogeneousSpec spec = pi_H_sigma(g, plus, chars);
  CHECK(spec.scale == Q(1, 8));
  // block coefficient mu = c / (1 - sigma s^2) = (1/8) / (1 - 4) = -1/24
  CHECK(spec.lambda.lambda.at(0, 1) == Q(-1, 24));
  CHECK(spec.lambda.lambda.at(1, 0) == Q(1, 24));
  // singular when sigma(alpha) s(alpha)^2 = 1, error names the root
  Vec<Q> bad{Q(1)};
  try {
    pi_H_sigma(g, plus, bad);
    CHECK(false);
  } catch (const std::domain_error& e) {
    CHECK(std::string(e.what()).find("alpha") != std::string::npos);
  }
  ExtendedSignature minus = make_signature(g.rs, {-1}, identity_involution(g.rs));
  HomogeneousSpec specm = pi_H_sigma(g, minus, bad);  // sigma s^2 = -1 is fine
  CHECK(specm.lambda.lambda.at(0, 1) == Q(1, 16));
}

TEST_CASE("drinfeld image of the twisted bivector is the twisted subalgebra") {
  SemisimpleRealization g = build_chevalley('A', 1);
  ExtendedSignature plus = make_signature(g.rs, {1}, identity_involution(g.rs));
  Vec<Q> chars{Q(2)};
  CHECK(drinfeld_l_from_pi(pi_H_sigma(g, plus, chars)) == l_H_sigma(g, plus, chars));
}
