#pragma once

#include "lagr/lagrange.hpp"

namespace lagr {

// bivector on the quotient V/V0, expressed in a chosen complement basis
// (rows of comp span a complement of V0 in V); lambda is antisymmetric
struct QuotientBivector {
  Subspace<Q> V;
  Subspace<Q> V0;
  Mat<Q> comp;
  Mat<Q> lambda;
};

// base-point datum of a Poisson homogeneous space: isotropy subalgebra
// u_m inside u and the bivector class on u/u_m; scale records the solved
// normalization constant when the datum came from a closed formula
struct HomogeneousSpec {
  ManinTriple triple;
  Subspace<Q> u_m;
  QuotientBivector lambda;
  Q scale{0};
};

// d_l = {x in d : [x, l] subset l}
Subspace<Q> stabilizer_dl(const ManinTriple& t, const Subspace<Q>& l);

// 2<#f1, [#f2, #f3]> = 0 for all basis triples of the annihilator of d_l
bool check_Pi_jacobi(const ManinTriple& t, const Subspace<Q>& l);

// every contraction (xi+x) -| R = x - xi is congruent to 2x modulo d_l,
// i.e. the induced tangent vector lies in the image of u
bool check_tangency(const ManinTriple& t, const Subspace<Q>& l);

// T(l) = u_l + (u + u_l^perp) cap l, with u_l the normalizer of l in u
Subspace<Q> T_map(const ManinTriple& t, const Subspace<Q>& l);

// l = u_m + span{x_t + f_t : f_t basis covector vanishing on u_m,
//                x_t the lambda-contraction representative}
Subspace<Q> drinfeld_l_from_pi(const HomogeneousSpec& spec);

// unique lambda with W_lambda = W; optional explicit complement basis
QuotientBivector lambda_from_W(const ManinTriple& t, const Subspace<Q>& W,
                               const Subspace<Q>& V0, const Mat<Q>* comp = nullptr);

// induced bivector on V/V1 for V0 inside V1
QuotientBivector pushforward(const ManinTriple& t, const QuotientBivector& qb0,
                             const Subspace<Q>& V1, const Mat<Q>* comp1 = nullptr);

// true iff pushforward(qb0) == qb1, checked equivalent to the subspace
// identity W_{lambda1} = V1 + (u + V1^perp) cap W_{lambda0}
bool pushforward_check(const ManinTriple& t, const QuotientBivector& qb0,
                       const QuotientBivector& qb1);

// abelian triple on Q^{2n} with the hyperbolic pairing of V and V*
ManinTriple linear_triple(int n);

// invariant bivector kappa * sum_a X_a wedge Y_a on the compact form,
// with kappa solved from the cobracket compatibility of the Iwasawa triple
struct KBivector {
  Mat<Q> matrix;
  Q scale{0};
};
KBivector pi_K_Lambda(const SemisimpleRealization& g);

// bivector of the torus-twisted signature point: 2x2 blocks
// c / (1 - sigma(a) s(a)^2) on X_a wedge Y_a over the support roots,
// with c solved once from a reference instance
HomogeneousSpec pi_H_sigma(const SemisimpleRealization& g, const ExtendedSignature& sigma,
                           const Vec<Q>& chars);

}  // namespace lagr
