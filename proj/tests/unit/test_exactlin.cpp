// Exact linear algebra: canonical spans, solvers, forms, and the seeded RNG.
// Reference values come from an independent elimination oracle implemented
// here with a different pivoting strategy, or from tiny hand-checked cases.

#include "doctest.h"

#include "lagr/subspace.hpp"

using namespace lagr;

namespace {

// independent oracle: Gaussian elimination choosing the *last* usable pivot
// column, rows processed bottom-up; only the rank and span membership are
// comparable with rref, which is the point.
int oracle_rank(Mat<Q> m) {
  int r = 0;
  for (int col = m.cols - 1; col >= 0; --col) {
    int piv = -1;
    for (int i = m.rows - 1; i >= r; --i)
      if (m.at(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    // swap into position r
    for (int j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
    for (int i = 0; i < m.rows; ++i) {
      if (i == r || m.at(i, col) == 0) continue;
      Q f = m.at(i, col) / m.at(r, col);
      for (int j = 0; j < m.cols; ++j) m.at(i, j) -= f * m.at(r, j);
    }
    ++r;
  }
  return r;
}

Mat<Q> random_matrix(Rng& rng, int rows, int cols) {
  Mat<Q> m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = rng.rational(5, 3);
  return m;
}

}  // namespace

TEST_CASE("rref rank matches an independent elimination oracle") {
  Rng rng(101);
  for (int trial = 0; trial < 20; ++trial) {
    int rows = 1 + static_cast<int>(rng.below(6));
    int cols = 1 + static_cast<int>(rng.below(6));
    Mat<Q> m = random_matrix(rng, rows, cols);
    Mat<Q> copy = m;
    CHECK(static_cast<int>(rref(copy).size()) == oracle_rank(m));
  }
}

TEST_CASE("canonical span contains exactly its generating rows") {
  Rng rng(102);
  for (int trial = 0; trial < 10; ++trial) {
    Mat<Q> m = random_matrix(rng, 3, 5);
    Subspace<Q> s = canonicalize(m, 5);
    for (int i = 0; i < m.rows; ++i) CHECK(s.contains(m.row(i)));
    // a random vector outside the span must be rejected (span has dim <= 3 < 5)
    Mat<Q> probe = m;
    Vec<Q> v(5, Q(0));
    bool found_outside = false;
    for (int attempt = 0; attempt < 20 && !found_outside; ++attempt) {
      for (auto& x : v) x = rng.rational(5, 3);
      Mat<Q> ext = probe;
      ext.push_row(v);
      if (rank(ext) > s.dim()) found_outside = true;
    }
    REQUIRE(found_outside);
    CHECK(!s.contains(v));
  }
}

TEST_CASE("canonical form is generator-order independent") {
  Mat<Q> a(0, 4), b(0, 4);
  Vec<Q> r1{Q(1), Q(2), Q(3), Q(4)};
  Vec<Q> r2{Q(0), Q(1), Q(1), Q(0)};
  Vec<Q> r3{Q(2), Q(5), Q(7), Q(8)};  // r3 = 2 r1 + r2
  a.push_row(r1);
  a.push_row(r2);
  b.push_row(r3);
  b.push_row(r2);
  b.push_row(r1);
  CHECK(canonicalize(a, 4) == canonicalize(b, 4));
  CHECK(canonicalize(a, 4).dim() == 2);
}

TEST_CASE("solve and inverse round-trip on random invertible matrices") {
  Rng rng(103);
  for (int trial = 0; trial < 10; ++trial) {
    Mat<Q> m(4, 4);
    do {
      m = random_matrix(rng, 4, 4);
    } while (rank(m) < 4);
    Mat<Q> inv = inverse(m).value();
    CHECK(m * inv == Mat<Q>::identity(4));
    CHECK(inv * m == Mat<Q>::identity(4));
    Vec<Q> b;
    for (int i = 0; i < 4; ++i) b.push_back(rng.rational());
    Vec<Q> x = solve(m, b).value();
    CHECK(m.apply(x) == b);
  }
  // singular matrix: no inverse, inconsistent rhs unsolvable
  Mat<Q> sing(2, 2);
  sing.at(0, 0) = Q(1);
  sing.at(0, 1) = Q(2);
  sing.at(1, 0) = Q(2);
  sing.at(1, 1) = Q(4);
  CHECK(!inverse(sing).has_value());
  Vec<Q> rhs{Q(1), Q(0)};
  CHECK(!solve(sing, rhs).has_value());
}

TEST_CASE("nullspace rows annihilate the matrix and have the right count") {
  Rng rng(104);
  for (int trial = 0; trial < 10; ++trial) {
    int rows = 2 + static_cast<int>(rng.below(3));
    int cols = 3 + static_cast<int>(rng.below(4));
    Mat<Q> m = random_matrix(rng, rows, cols);
    Mat<Q> ns = nullspace(m);
    CHECK(ns.rows == cols - rank(m));
    for (int i = 0; i < ns.rows; ++i) CHECK(is_zero(m.apply(ns.row(i))));
  }
}

TEST_CASE("sum and intersection satisfy the dimension formula") {
  Rng rng(105);
  for (int trial = 0; trial < 10; ++trial) {
    Subspace<Q> a = canonicalize(random_matrix(rng, 3, 6), 6);
    Subspace<Q> b = canonicalize(random_matrix(rng, 3, 6), 6);
    Subspace<Q> s = sum(a, b);
    Subspace<Q> i = intersect(a, b);
    CHECK(a.dim() + b.dim() == s.dim() + i.dim());
    CHECK(a.contains(i));
    CHECK(b.contains(i));
    CHECK(s.contains(a));
    CHECK(s.contains(b));
  }
}

TEST_CASE("annihilator pairs to zero and has complementary dimension") {
  Rng rng(106);
  Subspace<Q> v = canonicalize(random_matrix(rng, 2, 5), 5);
  Subspace<Q> ann = annihilator(v);
  CHECK(v.dim() + ann.dim() == 5);
  for (int i = 0; i < v.basis.rows; ++i)
    for (int j = 0; j < ann.basis.rows; ++j) {
      Q s(0);
      for (int c = 0; c < 5; ++c) s += v.basis.at(i, c) * ann.basis.at(j, c);
      CHECK(s == 0);
    }
}

TEST_CASE("orthogonal complement against a nondegenerate form") {
  Mat<Q> gram = Mat<Q>::identity(4);
  gram.at(2, 2) = Q(-1);
  gram.at(3, 3) = Q(-3);
  BilinearForm<Q> form(gram);
  REQUIRE(form.is_symmetric());
  REQUIRE(form.is_nondegenerate());
  Rng rng(107);
  Subspace<Q> v = canonicalize(random_matrix(rng, 2, 4), 4);
  Subspace<Q> perp = orthogonal(v, form);
  CHECK(v.dim() + perp.dim() == 4);
  for (int i = 0; i < v.basis.rows; ++i)
    for (int j = 0; j < perp.basis.rows; ++j)
      CHECK(form.eval(v.basis.row(i), perp.basis.row(j)) == 0);
}

TEST_CASE("isotropy for a hyperbolic plane") {
  Mat<Q> gram(2, 2);
  gram.at(0, 1) = Q(1);
  gram.at(1, 0) = Q(1);
  BilinearForm<Q> form(gram);
  Subspace<Q> e0 = span_of<Q>({Vec<Q>{Q(1), Q(0)}}, 2);
  Subspace<Q> diag = span_of<Q>({Vec<Q>{Q(1), Q(1)}}, 2);
  CHECK(is_isotropic(e0, form));
  CHECK(!is_isotropic(diag, form));
}

TEST_CASE("complement basis extends inner to outer") {
  Rng rng(108);
  Subspace<Q> outer = Subspace<Q>::full(5);
  Subspace<Q> inner = canonicalize(random_matrix(rng, 2, 5), 5);
  Mat<Q> comp = complement_basis(inner, outer);
  CHECK(comp.rows == outer.dim() - inner.dim());
  Mat<Q> all = vstack(inner.basis, comp);
  CHECK(lagr::rank(all) == outer.dim());
}

TEST_CASE("restricted signature on hand-checked diagonal and hyperbolic forms") {
  // diag(2, -3): one positive, one negative
  Mat<Q> g1(2, 2);
  g1.at(0, 0) = Q(2);
  g1.at(1, 1) = Q(-3);
  auto [p1, n1, z1] = restricted_signature(Subspace<Q>::full(2), BilinearForm<Q>(g1));
  CHECK(p1 == 1);
  CHECK(n1 == 1);
  CHECK(z1 == 0);
  // hyperbolic plane: signature (1,1,0)
  Mat<Q> g2(2, 2);
  g2.at(0, 1) = Q(1);
  g2.at(1, 0) = Q(1);
  auto [p2, n2, z2] = restricted_signature(Subspace<Q>::full(2), BilinearForm<Q>(g2));
  CHECK(p2 == 1);
  CHECK(n2 == 1);
  CHECK(z2 == 0);
  // zero form: all zero
  auto [p3, n3, z3] = restricted_signature(Subspace<Q>::full(2), BilinearForm<Q>(Mat<Q>(2, 2)));
  CHECK(p3 == 0);
  CHECK(n3 == 0);
  CHECK(z3 == 2);
  // restriction of diag(1,1,-1) to the line (1,0,1): isotropic line
  Mat<Q> g4 = Mat<Q>::identity(3);
  g4.at(2, 2) = Q(-1);
  Subspace<Q> line = span_of<Q>({Vec<Q>{Q(1), Q(0), Q(1)}}, 3);
  auto [p4, n4, z4] = restricted_signature(line, BilinearForm<Q>(g4));
  CHECK(p4 == 0);
  CHECK(n4 == 0);
  CHECK(z4 == 1);
}

TEST_CASE("gaussian rational arithmetic") {
  Gq z(Q(3), Q(-2));  // 3 - 2i
  CHECK(z * z.conj() == Gq(Q(13), Q(0)));
  CHECK(gq_i * gq_i == Gq(Q(-1), Q(0)));
  Gq w(Q(1), Q(1));
  CHECK((z / w) * w == z);
  CHECK(to_string(Gq(Q(1, 2), Q(-3))) == "1/2-3i");
}

TEST_CASE("seeded rng is deterministic and in range") {
  Rng a(42), b(42);
  for (int i = 0; i < 5; ++i) CHECK(a.rational() == b.rational());
  Rng c(42);
  for (int i = 0; i < 100; ++i) CHECK(c.below(7) < 7);
}
