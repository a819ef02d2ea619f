// Polynomial Poisson structures: the 2x2 Hermitian model derived from the
// R-matrix, its Casimirs, and the rotation-invariant sphere family.  The
// six reference brackets were computed by hand from the matrix action
// v_xi(X) = xi X + X xi^* on [[x, u+iv], [u-iv, y]].

#include "doctest.h"

#include "lagr/sl2model.hpp"

using namespace lagr;

namespace {

Poly xvar(int i) { return Poly::var(4, i); }

PolyPoisson reference_table() {
  Poly x = xvar(0), y = xvar(1), u = xvar(2), v = xvar(3);
  PolyPoisson t;
  t.nvars = 4;
  t.names = {"x", "y", "u", "v"};
  t.table.assign(4, std::vector<Poly>(4, Poly(4)));
  auto set = [&t](int i, int j, const Poly& p) {
    t.table[static_cast<size_t>(i)][static_cast<size_t>(j)] = p;
    t.table[static_cast<size_t>(j)][static_cast<size_t>(i)] = -p;
  };
  set(0, 1, Poly(4));                      // {x, y} = 0
  set(0, 2, Q(-1, 4) * (y * v));           // {x, u} = -1/4 y v
  set(0, 3, Q(1, 4) * (y * u));            // {x, v} = +1/4 y u
  set(1, 2, Q(1, 4) * (y * v));            // {y, u} = +1/4 y v
  set(1, 3, Q(-1, 4) * (y * u));           // {y, v} = -1/4 y u
  set(2, 3, Q(1, 8) * (y * (y - x)));      // {u, v} = 1/8 y (y - x)
  return t;
}

}  // namespace

TEST_CASE("polynomial arithmetic and calculus") {
  Poly x = xvar(0), y = xvar(1);
  Poly sq = (x + y) * (x + y);
  Poly expanded = x * x + Q(2) * (x * y) + y * y;
  CHECK(sq == expanded);
  CHECK(derivative(sq, 0) == Q(2) * (x + y));
  CHECK(derivative(sq, 2).is_zero());
  CHECK(substitute_value(x * y, 0, Q(3)) == Q(3) * y);
  Poly odd = x * x * x;
  CHECK(substitute_signs(odd, {-1, 1, 1, 1}) == -odd);
  CHECK(poly_to_string(Poly(4), {"x", "y", "u", "v"}) == "0");
}

TEST_CASE("derived hermitian table equals the hand-computed reference") {
  PolyPoisson derived = derive_hermitian_Pi();
  PolyPoisson ref = reference_table();
  REQUIRE(derived.nvars == 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      INFO("entry ", i, " ", j);
      CHECK(derived.table[static_cast<size_t>(i)][static_cast<size_t>(j)] ==
            ref.table[static_cast<size_t>(i)][static_cast<size_t>(j)]);
    }
  // overall scale between the two tables is exactly 1
  CHECK(solve_table_scale(derived, ref) == 1);
}

TEST_CASE("hermitian model satisfies jacobi and its casimirs commute") {
  PolyPoisson derived = derive_hermitian_Pi();
  CHECK(jacobi_certificate(derived));
  CHECK(casimir_check(derived, hermitian_c1()));
  CHECK(casimir_check(derived, hermitian_c2()));
  CHECK(!casimir_check(derived, xvar(0)));
}

TEST_CASE("bracket is a biderivation") {
  PolyPoisson derived = derive_hermitian_Pi();
  Poly x = xvar(0), y = xvar(1), u = xvar(2);
  CHECK(derived.bracket(x * y, u) == x * derived.bracket(y, u) + y * derived.bracket(x, u));
  CHECK(derived.bracket(u, x * y) == -derived.bracket(x * y, u));
}

TEST_CASE("jacobi certificate rejects a cooked-up antisymmetric table") {
  // {x,y} = z, {y,z} = x, {z,x} = x breaks the cyclic identity
  PolyPoisson bad;
  bad.nvars = 3;
  bad.names = {"x", "y", "z"};
  bad.table.assign(3, std::vector<Poly>(3, Poly(3)));
  Poly x = Poly::var(3, 0), z = Poly::var(3, 2);
  bad.table[0][1] = z;
  bad.table[1][0] = -z;
  bad.table[1][2] = x;
  bad.table[2][1] = -x;
  bad.table[2][0] = x;
  bad.table[0][2] = -x;
  CHECK(!jacobi_certificate(bad));
}

TEST_CASE("table scale solving") {
  PolyPoisson derived = derive_hermitian_Pi();
  PolyPoisson scaled = derived;
  for (auto& row : scaled.table)
    for (auto& p : row) p = Q(-3, 2) * p;
  CHECK(solve_table_scale(scaled, derived) == Q(-3, 2));
  PolyPoisson crooked = scaled;
  crooked.table[0][2] = Q(7) * crooked.table[0][2];
  CHECK_THROWS_AS(solve_table_scale(crooked, derived), std::logic_error);
}

TEST_CASE("sphere family: jacobi for all parameters and the antipodal point") {
  CHECK(jacobi_certificate(sphere_family_symbolic()));
  CHECK(casimir_check(sphere_family_symbolic(), sphere_casimir(4)));
  for (const Q& a : {Q(0), Q(1, 2), Q(7, 3)}) {
    PolyPoisson p = sphere_family(a);
    CHECK(jacobi_certificate(p));
    CHECK(casimir_check(p, sphere_casimir(3)));
  }
  CHECK(antipodal_check(Q(1, 2)));
  CHECK(!antipodal_check(Q(0)));
  CHECK(!antipodal_check(Q(1)));
  CHECK(!antipodal_check(Q(1, 4)));
  CHECK(!antipodal_check(Q(3, 4)));
}

TEST_CASE("symbolic family keeps the parameter central") {
  PolyPoisson sym = sphere_family_symbolic();
  Poly a = Poly::var(4, 3);
  CHECK(casimir_check(sym, a));
}
