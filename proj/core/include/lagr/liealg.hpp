#pragma once

#include "lagr/rootsys.hpp"
#include "lagr/subspace.hpp"

#include <vector>

namespace lagr {

// Complex semisimple Lie algebra with a fixed Chevalley-type basis, realified
// over the rationals. Complex basis order: coroots h_0..h_{rank-1}, then root
// vectors e_alpha in root order. Real basis interleaves: index 2m is b_m,
// index 2m+1 is J b_m.
struct SemisimpleRealization {
  RootSystem rs;
  int ncx{0};
  int nre{0};
  std::vector<std::vector<Vec<Q>>> cbr;  // cbr[i][j] = [b_i, b_j] in complex coords
  Mat<Q> kc;                             // Killing gram on the complex basis
  Mat<Q> re_gram, im_gram;               // Re/Im of the form on the real basis
  Mat<Q> Jmat;                           // complex structure on the real basis
  Mat<Q> theta_mat;                      // Cartan involution on the real basis

  int h_index(int i) const { return i; }
  int e_index(int root_idx) const { return rs.rank + root_idx; }

  Vec<Gq> to_cx(const Vec<Q>& x) const;
  Vec<Q> to_re(const Vec<Gq>& z) const;

  Vec<Gq> bracket_cx(const Vec<Gq>& z, const Vec<Gq>& w) const;
  Vec<Q> bracket_re(const Vec<Q>& x, const Vec<Q>& y) const;
  Mat<Q> ad_re(const Vec<Q>& x) const;
  Gq form_cx(const Vec<Q>& x, const Vec<Q>& y) const;  // bilinear extension of Killing

  Vec<Q> basis_h(int i) const;
  Vec<Q> basis_Jh(int i) const;
  Vec<Q> basis_e(int root_idx) const;
  Vec<Q> basis_Je(int root_idx) const;
  Vec<Q> X_alpha(int pos_root_idx) const;  // e_a - e_{-a}
  Vec<Q> Y_alpha(int pos_root_idx) const;  // J(e_a + e_{-a})

  // coefficient of [e_a, e_b] on e_{a+b} (complex structure constant)
  Q N_coeff(int root_a, int root_b) const;
};

// Type A realization via elementary matrices of sl(rank+1); integral structure
// constants whose extraspecial-pair coefficients are all +1.
SemisimpleRealization build_chevalley(char type, int rank);

// real subspace spanned by arbitrary complex combinations of the listed
// complex basis elements (each contributes the pair b, Jb)
Subspace<Q> complex_span(const SemisimpleRealization& g, const std::vector<int>& cx_indices);

struct IwasawaParts {
  Subspace<Q> k, a, n, t;
};
IwasawaParts iwasawa_parts(const SemisimpleRealization& g);

// does [W, W] lie in W
bool bracket_closed(const SemisimpleRealization& g, const Subspace<Q>& W);

struct ParabolicData {
  std::vector<int> S;
  Subspace<Q> m, n, p, z, m1;  // Levi, nilradical, parabolic, center of Levi, [m,m]
  int n_minus_count{0};        // number of positive roots outside [S]
};
ParabolicData parabolic_data(const SemisimpleRealization& g, const std::vector<int>& S);

// diagonal torus character sign (-1)^{alpha(rho1)} acting on e_alpha; identity on h
Mat<Q> a_sigma_matrix(const SemisimpleRealization& g, const ExtendedSignature& s);
Mat<Q> a_sigma_matrix(const SemisimpleRealization& g, const std::vector<int>& values);

// diagram automorphism fixed by bracket recursion through the root order;
// acts as d on the sub-diagram simples, identity on the centre of the Levi of
// S and on root spaces outside [S]
Mat<Q> gamma_d_on(const SemisimpleRealization& g, const std::vector<int>& S,
                  const DiagramInvolution& d);
Mat<Q> gamma_d(const SemisimpleRealization& g, const DiagramInvolution& d);
// same full-diagram automorphism on complex coordinates (ncx by ncx)
Mat<Q> gamma_d_complex(const SemisimpleRealization& g, const DiagramInvolution& d);

// antilinear involution a_sigma . gamma_d . theta (real matrix); S defaults to
// the support of sigma
Mat<Q> tau_d_sigma(const SemisimpleRealization& g, const ExtendedSignature& s);

// positive rational character values s = (s_1..s_l) acting on e_alpha by
// prod s_i^{m_i}; the value s(alpha) and the induced real matrix
Q char_value(const RootSystem& rs, const Vec<Q>& s, int root_idx);
Mat<Q> torus_ad(const SemisimpleRealization& g, const Vec<Q>& s);

// exp(t ad_x) for nilpotent ad_x; throws std::domain_error otherwise
Mat<Q> exp_ad_nilpotent(const SemisimpleRealization& g, const Vec<Q>& x, const Q& t);

// exp(ad e_a) exp(-ad e_{-a}) exp(ad e_a) for a simple root index
Mat<Q> weyl_rep(const SemisimpleRealization& g, int simple_idx);

// fixed space ker(A - id)
Subspace<Q> fixed_space(const Mat<Q>& A);

// image of a subspace under a linear map
Subspace<Q> map_subspace(const Mat<Q>& A, const Subspace<Q>& W);

}  // namespace lagr
