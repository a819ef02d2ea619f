#pragma once

#include "lagr/check.hpp"
#include "lagr/liealg.hpp"
#include "lagr/subspace.hpp"

#include <functional>

namespace lagr {

using Bracket = std::function<Vec<Q>(const Vec<Q>&, const Vec<Q>&)>;

// Lie algebra with an invariant nondegenerate symmetric form, coordinates fixed.
struct QuadraticLieAlgebra {
  int dim{0};
  Bracket bracket;
  BilinearForm<Q> form;
};

// (d, u, u*): complementary isotropic subalgebras; e/eta are dual bases,
// <e_i, eta_j> = delta_ij.
struct ManinTriple {
  QuadraticLieAlgebra d;
  Subspace<Q> u, ustar;
  Mat<Q> e_basis;
  Mat<Q> eta_basis;
};

// validates transversality, isotropy and the pairing, and fixes dual bases
ManinTriple make_triple(QuadraticLieAlgebra d, Subspace<Q> u, Subspace<Q> ustar);

// all axioms, one named item each
CheckReport check_manin(const ManinTriple& t);

// R = sum eta_i wedge e_i as an antisymmetric matrix R[j][k]
Mat<Q> build_R(const ManinTriple& t);

// v with form(v, .) = f, for a coordinate functional f
Vec<Q> sharp(const ManinTriple& t, const Vec<Q>& functional);

// (f -| R)_k = sum_j f_j R[j][k]
Vec<Q> contract_R(const Mat<Q>& R, const Vec<Q>& functional);

// decomposition v = x + xi with x in u, xi in u*
std::pair<Vec<Q>, Vec<Q>> split_uv(const ManinTriple& t, const Vec<Q>& v);

// {x in ambient : [x, W] lies in W}
Subspace<Q> normalizer_in(const Bracket& bracket, const Subspace<Q>& W,
                          const Subspace<Q>& ambient);

// realified complex simple algebra with twice the imaginary part of the
// Killing form; u = compact part, u* = a + n
ManinTriple iwasawa_double(const SemisimpleRealization& g);

// 3-dim Heisenberg algebra acting on its dual by coadjoint action
ManinTriple heisenberg_double();

// split form plus abelian Cartan; u, u* are the graphs of the two opposite
// Borel embeddings x + H -> (x + H, +-H)
ManinTriple borel_double(const SemisimpleRealization& g);

}  // namespace lagr
