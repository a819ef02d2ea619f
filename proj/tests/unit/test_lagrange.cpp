// Lagrangian subalgebras of the realified algebra: axiom checks, standard
// (S, V, tau) constructions, the parity invariant, compact ranks, and the
// essential/inessential classification of strata.  Expected values are
// hand-derived for sl(2) and sl(3).

#include "doctest.h"

#include "lagr/lagrange.hpp"

using namespace lagr;

TEST_CASE("axioms accept the compact form and reject random half-spaces") {
  SemisimpleRealization g = build_chevalley('A', 1);
  Subspace<Q> k = fixed_space(g.theta_mat);
  CHECK(lagrangian_axioms(g, k).all_pass());
  CHECK(is_lagrangian(g, k));
  Rng rng(301);
  int rejected = 0;
  for (int t = 0; t < 10; ++t) {
    Mat<Q> m(0, g.nre);
    do {
      m = Mat<Q>(0, g.nre);
      for (int i = 0; i < g.nre / 2; ++i) {
        Vec<Q> row;
        for (int j = 0; j < g.nre; ++j) row.push_back(rng.rational(3, 2));
        m.push_row(row);
      }
    } while (lagr::rank(m) < g.nre / 2);
    CheckReport rep = lagrangian_axioms(g, canonicalize(m, g.nre));
    if (!rep.all_pass()) ++rejected;
    // a failure always carries the name of the broken axiom
    if (!rep.all_pass()) {
      bool named = false;
      for (const auto& it : rep.items)
        if (!it.pass && !it.id.empty()) named = true;
      CHECK(named);
    }
  }
  CHECK(rejected == 10);
}

TEST_CASE("standard construction reproduces the easy subalgebras") {
  SemisimpleRealization g = build_chevalley('A', 2);
  IwasawaParts parts = iwasawa_parts(g);
  // S = full, V = 0, sigma = (+,+): the compact form
  KarolinskyTriple full{{0, 1},
                        Subspace<Q>::zero(g.nre),
                        identity_involution(g.rs),
                        {1, 1}};
  CHECK(build_standard(g, full) == parts.k);
  ExtendedSignature pp = make_signature(g.rs, {1, 1}, identity_involution(g.rs));
  CHECK(build_l_d_sigma(g, pp) == parts.k);
  // S empty, V = t: the borel-type point t + n
  ParabolicData pd0 = parabolic_data(g, {});
  KarolinskyTriple tn{{}, intersect(pd0.z, parts.t), identity_involution(g.rs), {0, 0}};
  CHECK(build_standard(g, tn) == sum(parts.t, parts.n));
  // S empty, V = a gives a + n
  KarolinskyTriple an{{}, intersect(pd0.z, parts.a), identity_involution(g.rs), {0, 0}};
  CHECK(build_standard(g, an) == sum(parts.a, parts.n));
}

TEST_CASE("standard construction validates its inputs") {
  SemisimpleRealization g = build_chevalley('A', 2);
  IwasawaParts parts = iwasawa_parts(g);
  ParabolicData pd = parabolic_data(g, {0});
  Subspace<Q> V = intersect(pd.z, parts.t);
  KarolinskyTriple ok{{0}, V, identity_involution(g.rs), {1, 0}};
  CHECK(is_lagrangian(g, build_standard(g, ok)));
  KarolinskyTriple off_s{{0}, V, identity_involution(g.rs), {1, 1}};
  CHECK_THROWS_AS(build_standard(g, off_s), std::domain_error);
  KarolinskyTriple zero_on_s{{0}, V, identity_involution(g.rs), {0, 0}};
  CHECK_THROWS_AS(build_standard(g, zero_on_s), std::domain_error);
  KarolinskyTriple big_v{{0}, pd.z, identity_involution(g.rs), {1, 0}};
  CHECK_THROWS_AS(build_standard(g, big_v), std::domain_error);
  KarolinskyTriple flip_off{{0}, V, flip_involution(g.rs), {1, 0}};
  CHECK_THROWS_AS(build_standard(g, flip_off), std::domain_error);
}

TEST_CASE("parity invariant distinguishes the two Lagrangian families") {
  SemisimpleRealization g1 = build_chevalley('A', 1);
  IwasawaParts p1 = iwasawa_parts(g1);
  CHECK(epsilon_of(g1, p1.t, {}) == 1);
  CHECK(epsilon_of(g1, p1.a, {}) == -1);

  SemisimpleRealization g2 = build_chevalley('A', 2);
  IwasawaParts p2 = iwasawa_parts(g2);
  CHECK(epsilon_of(g2, p2.t, {}) == 1);
  CHECK(epsilon_of(g2, p2.a, {}) == 1);  // even intersection parity
  // a mixed Lagrangian with one torus direction has odd parity
  Vec<Q> w = Q(1, 2) * g2.basis_h(0);
  for (size_t i = 0; i < w.size(); ++i) w[i] += g2.basis_h(1)[i];
  Subspace<Q> mixed = span_of<Q>({g2.basis_Jh(0), w}, g2.nre);
  CHECK(epsilon_of(g2, mixed, {}) == -1);
}

TEST_CASE("compact ranks via generic centralizers") {
  SemisimpleRealization g = build_chevalley('A', 2);
  IwasawaParts parts = iwasawa_parts(g);
  CHECK(rank_compact(g, parts.k) == 2);
  CHECK(rank_compact(g, parts.t) == 2);
  CHECK(rank_compact(g, Subspace<Q>::zero(g.nre)) == 0);
  SemisimpleRealization g1 = build_chevalley('A', 1);
  CHECK(rank_compact(g1, fixed_space(g1.theta_mat)) == 1);
  // the split-type fixed algebra so(3) inside su(3) has rank 1
  ExtendedSignature outer = make_signature(g.rs, {1, 1}, flip_involution(g.rs));
  Subspace<Q> so3 = intersect(build_l_d_sigma(g, outer), parts.k);
  CHECK(rank_compact(g, so3) == 1);
  // a pair of opposite root lines is not bracket closed
  Subspace<Q> open = span_of<Q>({g.basis_e(0), g.basis_e(g.rs.negative_of(0))}, g.nre);
  CHECK_THROWS_AS(rank_compact(g, open), std::domain_error);
}

TEST_CASE("membership in the component of the compact form") {
  SemisimpleRealization g = build_chevalley('A', 2);
  IwasawaParts parts = iwasawa_parts(g);
  CHECK(in_L0(g, parts.k));
  CHECK(!in_L0(g, sum(parts.a, parts.n)));
  ExtendedSignature inner = make_signature(g.rs, {1, -1}, identity_involution(g.rs));
  CHECK(in_L0(g, build_l_d_sigma(g, inner)));
  ExtendedSignature outer = make_signature(g.rs, {1, 1}, flip_involution(g.rs));
  CHECK(!in_L0(g, build_l_d_sigma(g, outer)));
}

TEST_CASE("model points: fixed subalgebras and easy non-examples") {
  SemisimpleRealization g = build_chevalley('A', 2);
  IwasawaParts parts = iwasawa_parts(g);
  CHECK(is_model_point(g, parts.k));
  CHECK(is_model_point(g, sum(parts.t, parts.n)));
  CHECK(!is_model_point(g, sum(parts.a, parts.n)));
  CHECK(intersect_with_k(g, sum(parts.t, parts.n)) == parts.t);
}

TEST_CASE("essential and inessential strata") {
  RootSystem a1 = build_root_system('A', 1);
  CHECK(!is_essential(LagrangianData{{}, 1, identity_involution(a1)}, a1));
  CHECK(is_essential(LagrangianData{{}, -1, identity_involution(a1)}, a1));
  CHECK(is_essential(LagrangianData{{0}, 1, identity_involution(a1)}, a1));

  RootSystem a2 = build_root_system('A', 2);
  CHECK(!is_essential(LagrangianData{{0}, 1, identity_involution(a2)}, a2));
  CHECK(!is_essential(LagrangianData{{1}, 1, identity_involution(a2)}, a2));
  CHECK(is_essential(LagrangianData{{0}, -1, identity_involution(a2)}, a2));
  CHECK(is_essential(LagrangianData{{}, 1, identity_involution(a2)}, a2));
  CHECK(is_essential(LagrangianData{{0, 1}, 1, identity_involution(a2)}, a2));
  CHECK(is_essential(LagrangianData{{0, 1}, 1, flip_involution(a2)}, a2));

  RootSystem a3 = build_root_system('A', 3);
  DiagramInvolution swap02{{2, 1, 0}};
  CHECK(!is_essential(LagrangianData{{0, 2}, 1, swap02}, a3));
  CHECK(!is_essential(LagrangianData{{0, 2}, 1, identity_involution(a3)}, a3));
  CHECK(!is_essential(LagrangianData{{0, 1}, 1, identity_involution(a3)}, a3));
  // the flip of the A2 sub-diagram {0,1} extends to no full involution
  DiagramInvolution swap01{{1, 0, 2}};
  CHECK(is_essential(LagrangianData{{0, 1}, 1, swap01}, a3));
  CHECK(is_essential(LagrangianData{{0, 2}, -1, swap02}, a3));
}

TEST_CASE("component inventory for sl(2)") {
  SemisimpleRealization g = build_chevalley('A', 1);
  auto recs = enumerate_components(g);
  REQUIRE(recs.size() == 3);
  int essential = 0;
  std::vector<int> essential_dims;
  for (const auto& r : recs) {
    if (r.essential) {
      ++essential;
      essential_dims.push_back(r.dim);
    }
  }
  CHECK(essential == 2);
  std::sort(essential_dims.begin(), essential_dims.end());
  CHECK(essential_dims == std::vector<int>{2, 3});
}

TEST_CASE("diagram involution inventories") {
  RootSystem a1 = build_root_system('A', 1);
  CHECK(full_diagram_involutions(a1).size() == 1);
  RootSystem a2 = build_root_system('A', 2);
  CHECK(full_diagram_involutions(a2).size() == 2);
  CHECK(subdiagram_involutions(a2, {0}).size() == 1);
  CHECK(subdiagram_involutions(a2, {0, 1}).size() == 2);
  RootSystem a3 = build_root_system('A', 3);
  CHECK(subdiagram_involutions(a3, {0, 2}).size() == 2);
  CHECK(subdiagram_involutions(a3, {0, 1}).size() == 2);
}

TEST_CASE("torus-twisted signature points") {
  SemisimpleRealization g = build_chevalley('A', 1);
  IwasawaParts parts = iwasawa_parts(g);
  ExtendedSignature plus = make_signature(g.rs, {1}, identity_involution(g.rs));
  Vec<Q> chars{Q(3)};
  Subspace<Q> l = l_H_sigma(g, plus, chars);
  CHECK(is_lagrangian(g, l));
  CHECK(intersect_with_k(g, l) == parts.t);
  SemisimpleRealization g2 = build_chevalley('A', 2);
  ExtendedSignature fp = make_signature(g2.rs, {1, 1}, flip_involution(g2.rs));
  Vec<Q> chars2{Q(2), Q(2)};
  CHECK_THROWS_AS(l_H_sigma(g2, fp, chars2), std::domain_error);
}

TEST_CASE("normalizer of the nilpotent part is the borel") {
  SemisimpleRealization g = build_chevalley('A', 1);
  IwasawaParts parts = iwasawa_parts(g);
  Subspace<Q> N = normalizer_in(g, parts.n, Subspace<Q>::full(g.nre));
  CHECK(N == sum(complex_span(g, {g.h_index(0)}), parts.n));
  CHECK(N.dim() == 4);
}
