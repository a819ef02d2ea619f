#pragma once

#include "lagr/manin.hpp"

#include <cstdint>

namespace lagr {

// (S, V, tau) data: parabolic type, Lagrangian subspace of the centre of the
// Levi, and a real-form involution of the semisimple Levi part given by a
// sub-diagram involution d (identity off S) and signs sigma (+-1 on S, 0 off).
struct KarolinskyTriple {
  std::vector<int> S;
  Subspace<Q> V;
  DiagramInvolution d;
  std::vector<int> sigma;
};

struct LagrangianData {
  std::vector<int> S;
  int epsilon{1};
  DiagramInvolution d;
};

struct ComponentRecord {
  LagrangianData data;
  int dim{0};
  bool essential{true};
};

// half dimension + isotropy for Im<<,>> + bracket closure, one item each
CheckReport lagrangian_axioms(const SemisimpleRealization& g, const Subspace<Q>& W);
bool is_lagrangian(const SemisimpleRealization& g, const Subspace<Q>& W);

// same axioms relative to an abstract triple's form and bracket
CheckReport lagrangian_axioms_triple(const ManinTriple& t, const Subspace<Q>& W);
bool is_lagrangian_triple(const ManinTriple& t, const Subspace<Q>& W);

// m_{S,1}^tau + V + n_S
Subspace<Q> build_standard(const SemisimpleRealization& g, const KarolinskyTriple& kt);

// m_sigma^{tau_{d,sigma}} + n_sigma with the full-diagram involution carried by sigma
Subspace<Q> build_l_d_sigma(const SemisimpleRealization& g, const ExtendedSignature& s);

// {x in ambient : [x, W] subset W}
Subspace<Q> normalizer_in(const SemisimpleRealization& g, const Subspace<Q>& W,
                          const Subspace<Q>& ambient);

// l cap k == normalizer of l in k
bool is_model_point(const SemisimpleRealization& g, const Subspace<Q>& l);
bool is_model_point_triple(const ManinTriple& t, const Subspace<Q>& l);

// +1 iff dim(V cap (z_S cap t)) == dim V (mod 2)
int epsilon_of(const SemisimpleRealization& g, const Subspace<Q>& V, const std::vector<int>& S);
LagrangianData lagrangian_data(const SemisimpleRealization& g, const KarolinskyTriple& kt);

// generic-centralizer dimension inside a compact subalgebra s of k,
// minimized over a fixed number of deterministic pseudo-random retries
int rank_compact(const SemisimpleRealization& g, const Subspace<Q>& s, std::uint64_t seed = 0x5eed);
bool in_L0(const SemisimpleRealization& g, const Subspace<Q>& l);

// all full-diagram involutions of the root system (id, and the flip when distinct)
std::vector<DiagramInvolution> full_diagram_involutions(const RootSystem& rs);
// involutions of the sub-diagram S, represented identity off S
std::vector<DiagramInvolution> subdiagram_involutions(const RootSystem& rs,
                                                      const std::vector<int>& S);

bool is_essential(const LagrangianData& ld, const RootSystem& rs);
std::vector<ComponentRecord> enumerate_components(const SemisimpleRealization& g);

// torus-twisted signature Lagrangian Ad_{exp H} l_sigma via rational characters
Subspace<Q> l_H_sigma(const SemisimpleRealization& g, const ExtendedSignature& s,
                      const Vec<Q>& chars);
Subspace<Q> intersect_with_k(const SemisimpleRealization& g, const Subspace<Q>& l);

}  // namespace lagr
