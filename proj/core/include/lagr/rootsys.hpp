#pragma once

#include "lagr/matrix.hpp"

#include <string>
#include <vector>

namespace lagr {

// Finite root system in simple-root coordinates. Positive roots come first,
// ordered by (height, leftmost support); roots[i + npos] = -roots[i].
struct RootSystem {
  char type{'A'};
  int rank{0};
  std::vector<std::vector<int>> cartan;  // cartan[i][j] = alpha_j(coroot_i)
  std::vector<std::vector<int>> roots;
  int npos{0};
  Mat<Q> cartan_inv;  // fundamental coweights: column j = coweight_j in coroot coords

  int nroots() const { return static_cast<int>(roots.size()); }
  bool is_positive(int idx) const { return idx < npos; }
  int negative_of(int idx) const { return idx < npos ? idx + npos : idx - npos; }
  int root_index(const std::vector<int>& alpha) const;
  int height(int idx) const;
  // alpha(coroot_i), an integer
  int pair_coroot(int root_idx, int i) const;
  // alpha(H) for H given by its simple-root values H_i = alpha_i(H)
  Q pair_H(int root_idx, const Vec<Q>& H) const;
  // fundamental coweight in coroot coordinates
  Vec<Q> coweight(int j) const;
  // simple-root index of a root of height one, -1 otherwise
  int simple_index(int root_idx) const;
};

RootSystem build_root_system(char type, int rank);

struct DiagramInvolution {
  std::vector<int> perm;  // on simple-root indices

  bool is_identity() const {
    for (size_t i = 0; i < perm.size(); ++i)
      if (perm[i] != static_cast<int>(i)) return false;
    return true;
  }
};

DiagramInvolution identity_involution(const RootSystem& rs);
DiagramInvolution flip_involution(const RootSystem& rs);
// perm must be an involution preserving the Cartan matrix
void validate_involution(const RootSystem& rs, const DiagramInvolution& d);
// same, restricted to a sub-diagram
void validate_involution_on(const RootSystem& rs, const std::vector<int>& simples,
                            const DiagramInvolution& d);

// sigma: simple roots -> {-1,0,+1}, constant on d-orbits, extended to all
// roots multiplicatively.
struct ExtendedSignature {
  std::vector<int> values;
  DiagramInvolution d;
};

ExtendedSignature make_signature(const RootSystem& rs, std::vector<int> values,
                                 DiagramInvolution d);
int sigma_value(const RootSystem& rs, const ExtendedSignature& s, int root_idx);

struct SignatureSets {
  std::vector<int> S;         // simple indices with sigma != 0
  std::vector<int> supp;      // root indices spanned by S
  std::vector<int> sigma_one; // root indices with sigma = +1
};
SignatureSets signature_sets(const RootSystem& rs, const ExtendedSignature& s);

// coweight sum over sigma(alpha_i) = -1; alpha(rho1) is an integer
int pair_rho1(const RootSystem& rs, const ExtendedSignature& s, int root_idx);

std::vector<ExtendedSignature> enumerate_extended_signatures(const RootSystem& rs,
                                                             const DiagramInvolution& d);

// Weyl group elements stored as permutations of the root list.
struct WeylGroup {
  std::vector<std::vector<int>> elements;
};

std::vector<int> simple_reflection(const RootSystem& rs, int i);
std::vector<int> root_reflection(const RootSystem& rs, int root_idx);
WeylGroup generate_group(const RootSystem& rs, const std::vector<std::vector<int>>& gens);
WeylGroup weyl_enumerate(const RootSystem& rs);
WeylGroup subgroup_W_sigma(const RootSystem& rs, const ExtendedSignature& s);
// {w in W_sigma : w(Sigma_sigma) = Sigma_sigma}
WeylGroup subgroup_W0_sigma(const RootSystem& rs, const ExtendedSignature& s);
// generated by reflections in roots with sigma = 1
WeylGroup subgroup_R_sigma(const RootSystem& rs, const ExtendedSignature& s);

struct QuotientGroup {
  int order{0};
  bool normal{false};
  std::vector<std::vector<std::vector<int>>> cosets;
};
QuotientGroup Z_sigma(const RootSystem& rs, const ExtendedSignature& s);

// {w in W_sigma : w(Sigma_sigma) = Sigma_sigma, wH = H}; H by values alpha_i(H)
WeylGroup W_H_sigma(const RootSystem& rs, const ExtendedSignature& s, const Vec<Q>& H);

}  // namespace lagr
