#pragma once

#include "lagr/lagrange.hpp"

#include <algorithm>

namespace lagr {

// rational ad_H eigenvalue per real basis coordinate
struct WeightGrading {
  std::vector<Q> weights;
};

// H given by the rational values alpha_i(H) on the simple roots
WeightGrading grading_from_H(const SemisimpleRealization& g, const Vec<Q>& alphaH);
// the same weights per complex basis index
std::vector<Q> complex_weights_from_H(const SemisimpleRealization& g, const Vec<Q>& alphaH);
// [g_mu, g_nu] lies in g_{mu+nu} on every basis pair
bool grading_respects_bracket(const SemisimpleRealization& g, const WeightGrading& grading);

// associated graded of the filtration induced by a rational weight vector:
// direct sum over mu of proj_mu(L cap F_{<= mu})
template <class T>
Subspace<T> limit_subspace(const Subspace<T>& L, const std::vector<Q>& weights) {
  if (static_cast<int>(weights.size()) != L.ambient)
    throw std::invalid_argument("limit_subspace: one weight per coordinate required");
  std::vector<Q> mus = weights;
  std::sort(mus.begin(), mus.end());
  mus.erase(std::unique(mus.begin(), mus.end()), mus.end());
  Mat<T> rows(0, L.ambient);
  for (const Q& mu : mus) {
    Mat<T> frows(0, L.ambient);
    for (int j = 0; j < L.ambient; ++j)
      if (weights[j] <= mu) {
        Vec<T> e(L.ambient, T(0));
        e[j] = T(1);
        frows.push_row(e);
      }
    Subspace<T> cap = intersect(L, canonicalize(frows, L.ambient));
    for (int r = 0; r < cap.dim(); ++r) {
      Vec<T> v = cap.basis.row(r);
      Vec<T> p(L.ambient, T(0));
      for (int j = 0; j < L.ambient; ++j)
        if (weights[j] == mu) p[j] = v[j];
      if (!is_zero(p)) rows.push_row(p);
    }
  }
  return canonicalize(rows, L.ambient);
}

inline Subspace<Q> limit_subspace(const Subspace<Q>& L, const WeightGrading& grading) {
  return limit_subspace(L, grading.weights);
}

// g + g over Gaussian rationals: componentwise bracket, the difference form
// I((x1,x2),(y1,y2)) = <<x1,y1>> - <<x2,y2>>, and the antilinear swap
// tau(X,Y) = (theta Y, theta X)
struct DoubleAmbient {
  SemisimpleRealization g;
  int n{0};  // complex dimension 2 * ncx
  BilinearForm<Gq> I;
  Mat<Gq> theta_cx;  // complex-coordinate matrix of theta; theta(z) = theta_cx . conj(z)

  Vec<Gq> bracket(const Vec<Gq>& z, const Vec<Gq>& w) const;
  Vec<Gq> tau(const Vec<Gq>& z) const;
};

DoubleAmbient double_ambient(const SemisimpleRealization& g);

// complex span of {(v, theta v) : v in l}
Subspace<Gq> complexify_subspace(const SemisimpleRealization& g, const Subspace<Q>& l);
// {v in g : (v, theta v) in W}, inverting complexify_subspace
Subspace<Q> real_points(const SemisimpleRealization& g, const Subspace<Gq>& W);

CheckReport lagrangian_I_axioms(const DoubleAmbient& D, const Subspace<Gq>& W);
bool is_lagrangian_I(const DoubleAmbient& D, const Subspace<Gq>& W);
// tau(W) == W
bool real_structure_test(const DoubleAmbient& D, const Subspace<Gq>& W);

// {(X, gamma_d X) : X in m_eta} + (n_eta)_1 + gamma_d(n_eta^-)_2
Subspace<Gq> build_g_d_eta(const SemisimpleRealization& g, const DiagramInvolution& d,
                           const std::vector<int>& eta);

// associated graded with the doubled weights (mu, -mu)
Subspace<Gq> limit_in_double(const SemisimpleRealization& g, const Subspace<Gq>& W,
                             const Vec<Q>& alphaH);

}  // namespace lagr
