// Quadratic Lie algebras with a pair of transverse Lagrangian subalgebras.
// The R-matrix identity R^T f = p_u(sharp f) - p_{u*}(sharp f) is checked
// against independent projections, and the concrete doubles against their
// defining bracket tables.

#include "doctest.h"

#include "lagr/manin.hpp"

using namespace lagr;

namespace {

Vec<Q> unit(int n, int i) {
  Vec<Q> v(static_cast<size_t>(n), Q(0));
  v[static_cast<size_t>(i)] = Q(1);
  return v;
}

void check_R_identity(const ManinTriple& t) {
  Mat<Q> R = build_R(t);
  CHECK(R == Q(-1) * R.transpose());
  int n = t.d.dim;
  for (int i = 0; i < n; ++i) {
    Vec<Q> f = unit(n, i);
    Vec<Q> v = sharp(t, f);
    auto [x, xi] = split_uv(t, v);
    CHECK(x + (Q(-1) * xi) == contract_R(R, f));
  }
}

}  // namespace

TEST_CASE("iwasawa double is a manin triple for sl(2) and sl(3)") {
  for (int rank : {1, 2}) {
    SemisimpleRealization g = build_chevalley('A', rank);
    ManinTriple t = iwasawa_double(g);
    CheckReport rep = check_manin(t);
    for (const auto& it : rep.items) {
      INFO(it.id);
      CHECK(it.pass);
    }
    CHECK(t.u.dim() + t.ustar.dim() == t.d.dim);
    check_R_identity(t);
  }
}

TEST_CASE("heisenberg double matches its defining table") {
  ManinTriple t = heisenberg_double();
  CHECK(check_manin(t).all_pass());
  // coordinates X, Y, Z, fX, fY, fZ
  int n = t.d.dim;
  REQUIRE(n == 6);
  auto br = [&](int i, int j) { return t.d.bracket(unit(n, i), unit(n, j)); };
  CHECK(br(0, 1) == unit(n, 2));                 // [X, Y] = Z
  CHECK(is_zero(br(0, 2)));                      // [X, Z] = 0
  CHECK(is_zero(br(1, 2)));                      // [Y, Z] = 0
  CHECK(br(0, 5) == Q(-1) * unit(n, 4));         // [X, fZ] = -fY
  CHECK(br(1, 5) == unit(n, 3));                 // [Y, fZ] = fX
  CHECK(is_zero(br(3, 4)));                      // duals commute
  check_R_identity(t);
}

TEST_CASE("borel double splits into graph and antidiagonal parts") {
  SemisimpleRealization g = build_chevalley('A', 1);
  ManinTriple t = borel_double(g);
  CHECK(check_manin(t).all_pass());
  CHECK(t.d.dim == g.ncx + g.rs.rank);  // 3 + 1
  check_R_identity(t);
  SemisimpleRealization g2 = build_chevalley('A', 2);
  ManinTriple t2 = borel_double(g2);
  CHECK(check_manin(t2).all_pass());
  CHECK(t2.u.dim() == t2.ustar.dim());
}

TEST_CASE("make_triple validates its inputs") {
  ManinTriple h = heisenberg_double();
  // non-isotropic u: swap in a subspace pairing with itself
  Subspace<Q> bad = span_of<Q>({unit(6, 0), unit(6, 3)}, 6);  // X and fX pair to 1
  Subspace<Q> rest = span_of<Q>({unit(6, 1), unit(6, 2), unit(6, 4)}, 6);
  CHECK_THROWS_AS(make_triple(h.d, bad, rest), std::domain_error);
  // non-complementary pair
  CHECK_THROWS_AS(make_triple(h.d, h.u, h.u), std::domain_error);
}

TEST_CASE("dual bases pair by delta through the invariant form") {
  for (const ManinTriple& t :
       {heisenberg_double(), iwasawa_double(build_chevalley('A', 1))}) {
    int m = t.e_basis.rows;
    REQUIRE(t.eta_basis.rows == m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        CHECK(t.d.form.eval(t.e_basis.row(i), t.eta_basis.row(j)) == (i == j ? 1 : 0));
  }
}

TEST_CASE("normalizers inside a chosen subalgebra") {
  ManinTriple h = heisenberg_double();
  int n = h.d.dim;
  // the centre Z is normalized by everything
  Subspace<Q> zline = span_of<Q>({unit(n, 2)}, n);
  CHECK(normalizer_in(h.d.bracket, zline, Subspace<Q>::full(n)) == Subspace<Q>::full(n));
  // N_u(span X) = span{X, Z} inside u = span{X, Y, Z}
  Subspace<Q> xline = span_of<Q>({unit(n, 0)}, n);
  Subspace<Q> expected = span_of<Q>({unit(n, 0), unit(n, 2)}, n);
  CHECK(normalizer_in(h.d.bracket, xline, h.u) == expected);
}
