// Root systems, diagram involutions, extended signatures, and Weyl-group
// machinery.  Expected values are hand-derived small cases: root lists for
// rank <= 3, group orders, and pairing tables.

#include "doctest.h"

#include "lagr/rootsys.hpp"

using namespace lagr;

namespace {
std::vector<int> v(std::initializer_list<int> xs) { return std::vector<int>(xs); }
}  // namespace

TEST_CASE("rank-2 positive roots in height-then-support order") {
  RootSystem rs = build_root_system('A', 2);
  REQUIRE(rs.npos == 3);
  CHECK(rs.roots[0] == v({1, 0}));
  CHECK(rs.roots[1] == v({0, 1}));
  CHECK(rs.roots[2] == v({1, 1}));
  for (int i = 0; i < rs.npos; ++i) {
    CHECK(rs.roots[static_cast<size_t>(i + rs.npos)] ==
          std::vector<int>{-rs.roots[static_cast<size_t>(i)][0],
                           -rs.roots[static_cast<size_t>(i)][1]});
    CHECK(rs.negative_of(i) == i + rs.npos);
    CHECK(rs.negative_of(i + rs.npos) == i);
  }
  CHECK(rs.root_index(v({1, 1})) == 2);
  CHECK(rs.root_index(v({-1, 0})) == 3);
  CHECK(rs.root_index(v({2, 1})) == -1);
  CHECK(rs.height(2) == 2);
  CHECK(rs.height(5) == -2);
  CHECK(rs.simple_index(0) == 0);
  CHECK(rs.simple_index(2) == -1);
}

TEST_CASE("rank-3 positive roots and counting") {
  RootSystem rs = build_root_system('A', 3);
  REQUIRE(rs.npos == 6);
  CHECK(rs.roots[0] == v({1, 0, 0}));
  CHECK(rs.roots[1] == v({0, 1, 0}));
  CHECK(rs.roots[2] == v({0, 0, 1}));
  CHECK(rs.roots[3] == v({1, 1, 0}));
  CHECK(rs.roots[4] == v({0, 1, 1}));
  CHECK(rs.roots[5] == v({1, 1, 1}));
  CHECK_THROWS_AS(build_root_system('B', 2), std::domain_error);
  CHECK_THROWS_AS(build_root_system('A', 9), std::domain_error);
}

TEST_CASE("cartan pairings and coweights are mutually inverse") {
  for (int rank : {1, 2, 3}) {
    RootSystem rs = build_root_system('A', rank);
    // alpha_j(coroot_i) is the Cartan matrix
    for (int i = 0; i < rank; ++i)
      for (int j = 0; j < rank; ++j) CHECK(rs.pair_coroot(j, i) == rs.cartan[i][j]);
    // fundamental coweights pair with simple roots by delta
    for (int j = 0; j < rank; ++j) {
      Vec<Q> cw = rs.coweight(j);
      for (int i = 0; i < rank; ++i) {
        Q val(0);
        for (int m = 0; m < rank; ++m) val += Q(rs.cartan[m][i]) * cw[static_cast<size_t>(m)];
        CHECK(val == (i == j ? 1 : 0));
      }
    }
    // pair_H with the delta vector reads off a simple-root coefficient sum
    for (int i = 0; i < rank; ++i) {
      Vec<Q> H(static_cast<size_t>(rank), Q(0));
      H[static_cast<size_t>(i)] = Q(1);
      for (int r = 0; r < rs.nroots(); ++r)
        CHECK(rs.pair_H(r, H) == Q(rs.roots[static_cast<size_t>(r)][static_cast<size_t>(i)]));
    }
  }
}

TEST_CASE("simple reflections permute roots and generate the symmetric group") {
  for (int rank : {1, 2, 3}) {
    RootSystem rs = build_root_system('A', rank);
    for (int i = 0; i < rank; ++i) {
      std::vector<int> s = simple_reflection(rs, i);
      // involution with exactly the +-alpha_i pair swapped among sign classes
      for (int r = 0; r < rs.nroots(); ++r) CHECK(s[static_cast<size_t>(s[static_cast<size_t>(r)])] == r);
      CHECK(s[static_cast<size_t>(i)] == rs.negative_of(i));
    }
    long expected = 1;
    for (int m = 2; m <= rank + 1; ++m) expected *= m;
    CHECK(static_cast<long>(weyl_enumerate(rs).elements.size()) == expected);
  }
}

TEST_CASE("diagram involutions validate and the flip swaps ends") {
  RootSystem rs = build_root_system('A', 3);
  DiagramInvolution flip = flip_involution(rs);
  CHECK(flip.perm == v({2, 1, 0}));
  CHECK(!flip.is_identity());
  CHECK(identity_involution(rs).is_identity());
  DiagramInvolution bad{v({1, 0, 2})};  // involution, but breaks the A3 Cartan matrix
  CHECK_THROWS_AS(validate_involution(rs, bad), std::domain_error);
  DiagramInvolution wrong_size{v({0, 1})};
  CHECK_THROWS_AS(validate_involution(rs, wrong_size), std::domain_error);
}

TEST_CASE("signature validation and multiplicative extension") {
  RootSystem rs = build_root_system('A', 2);
  DiagramInvolution id = identity_involution(rs);
  DiagramInvolution flip = flip_involution(rs);
  CHECK_THROWS_AS(make_signature(rs, {1}, id), std::domain_error);
  CHECK_THROWS_AS(make_signature(rs, {2, 1}, id), std::domain_error);
  CHECK_THROWS_AS(make_signature(rs, {1, -1}, flip), std::domain_error);

  ExtendedSignature s = make_signature(rs, {1, -1}, id);
  CHECK(sigma_value(rs, s, 0) == 1);
  CHECK(sigma_value(rs, s, 1) == -1);
  CHECK(sigma_value(rs, s, 2) == -1);  // product over (1,1)
  CHECK(sigma_value(rs, s, rs.negative_of(2)) == -1);
  ExtendedSignature z = make_signature(rs, {0, 1}, id);
  CHECK(sigma_value(rs, z, 0) == 0);
  CHECK(sigma_value(rs, z, 2) == 0);
  CHECK(sigma_value(rs, z, 1) == 1);
}

TEST_CASE("signature sets and rho pairing") {
  RootSystem rs = build_root_system('A', 2);
  ExtendedSignature s = make_signature(rs, {-1, -1}, identity_involution(rs));
  SignatureSets sets = signature_sets(rs, s);
  CHECK(sets.S == v({0, 1}));
  CHECK(sets.supp.size() == 6);
  CHECK(sets.sigma_one.size() == 2);  // +-(alpha_0 + alpha_1)
  CHECK(pair_rho1(rs, s, 0) == 1);
  CHECK(pair_rho1(rs, s, 1) == 1);
  CHECK(pair_rho1(rs, s, 2) == 2);
  CHECK(pair_rho1(rs, s, rs.negative_of(2)) == -2);

  ExtendedSignature part = make_signature(rs, {1, 0}, identity_involution(rs));
  SignatureSets psets = signature_sets(rs, part);
  CHECK(psets.S == v({0}));
  CHECK(psets.supp.size() == 2);
  CHECK(psets.sigma_one.size() == 2);
}

TEST_CASE("signature enumeration counts") {
  RootSystem a1 = build_root_system('A', 1);
  CHECK(enumerate_extended_signatures(a1, identity_involution(a1)).size() == 3);
  RootSystem a2 = build_root_system('A', 2);
  CHECK(enumerate_extended_signatures(a2, identity_involution(a2)).size() == 9);
  CHECK(enumerate_extended_signatures(a2, flip_involution(a2)).size() == 3);
}

TEST_CASE("support Weyl subgroups and component groups, hand-sized cases") {
  RootSystem a1 = build_root_system('A', 1);
  DiagramInvolution id1 = identity_involution(a1);
  ExtendedSignature minus = make_signature(a1, {-1}, id1);
  CHECK(subgroup_W_sigma(a1, minus).elements.size() == 2);
  CHECK(subgroup_W0_sigma(a1, minus).elements.size() == 2);
  CHECK(subgroup_R_sigma(a1, minus).elements.size() == 1);
  QuotientGroup zm = Z_sigma(a1, minus);
  CHECK(zm.order == 2);
  CHECK(zm.normal);
  ExtendedSignature plus = make_signature(a1, {1}, id1);
  CHECK(Z_sigma(a1, plus).order == 1);
  ExtendedSignature zero = make_signature(a1, {0}, id1);
  CHECK(subgroup_W_sigma(a1, zero).elements.size() == 1);
  CHECK(Z_sigma(a1, zero).order == 1);

  RootSystem a2 = build_root_system('A', 2);
  DiagramInvolution id2 = identity_involution(a2);
  ExtendedSignature mm = make_signature(a2, {-1, -1}, id2);
  CHECK(subgroup_W_sigma(a2, mm).elements.size() == 6);
  CHECK(subgroup_W0_sigma(a2, mm).elements.size() == 2);
  CHECK(subgroup_R_sigma(a2, mm).elements.size() == 2);
  CHECK(Z_sigma(a2, mm).order == 1);
  ExtendedSignature pp = make_signature(a2, {1, 1}, id2);
  CHECK(subgroup_W_sigma(a2, pp).elements.size() == 6);
  CHECK(subgroup_W0_sigma(a2, pp).elements.size() == 6);
  CHECK(subgroup_R_sigma(a2, pp).elements.size() == 6);
  CHECK(Z_sigma(a2, pp).order == 1);
}

TEST_CASE("grading-element stabilizers inside W0") {
  RootSystem a2 = build_root_system('A', 2);
  ExtendedSignature pp = make_signature(a2, {1, 1}, identity_involution(a2));
  Vec<Q> regular{Q(1), Q(1)};
  CHECK(W_H_sigma(a2, pp, regular).elements.size() == 1);
  Vec<Q> zero{Q(0), Q(0)};
  CHECK(W_H_sigma(a2, pp, zero).elements.size() == 6);
  Vec<Q> wall{Q(0), Q(1)};  // fixed by s_0 only
  CHECK(W_H_sigma(a2, pp, wall).elements.size() == 2);
}
