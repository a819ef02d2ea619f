#include "lagr/lagrange.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace lagr {

CheckReport lagrangian_axioms(const SemisimpleRealization& g, const Subspace<Q>& W) {
  CheckReport rep;
  rep.add("half_dimension", W.dim() == g.ncx);
  rep.add("isotropic", is_isotropic(W, BilinearForm<Q>(g.im_gram)));
  rep.add("closed", bracket_closed(g, W));
  return rep;
}

bool is_lagrangian(const SemisimpleRealization& g, const Subspace<Q>& W) {
  return lagrangian_axioms(g, W).all_pass();
}

CheckReport lagrangian_axioms_triple(const ManinTriple& t, const Subspace<Q>& W) {
  CheckReport rep;
  rep.add("half_dimension", 2 * W.dim() == t.d.dim);
  rep.add("isotropic", is_isotropic(W, t.d.form));
  bool closed = true;
  for (int i = 0; i < W.dim() && closed; ++i)
    for (int j = i + 1; j < W.dim(); ++j)
      if (!W.contains(t.d.bracket(W.basis.row(i), W.basis.row(j)))) {
        closed = false;
        break;
      }
  rep.add("closed", closed);
  return rep;
}

bool is_lagrangian_triple(const ManinTriple& t, const Subspace<Q>& W) {
  return lagrangian_axioms_triple(t, W).all_pass();
}

Subspace<Q> build_standard(const SemisimpleRealization& g, const KarolinskyTriple& kt) {
  std::set<int> sset(kt.S.begin(), kt.S.end());
  if (static_cast<int>(kt.sigma.size()) != g.rs.rank)
    throw std::domain_error("build_standard: sigma has wrong size");
  for (int i = 0; i < g.rs.rank; ++i) {
    if (sset.count(i) && kt.sigma[i] * kt.sigma[i] != 1)
      throw std::domain_error("build_standard: sigma must be +-1 on S");
    if (!sset.count(i) && kt.sigma[i] != 0)
      throw std::domain_error("build_standard: sigma must vanish off S");
    if (!sset.count(i) && kt.d.perm[i] != i)
      throw std::domain_error("build_standard: d must be identity off S");
    if (kt.sigma[kt.d.perm[i]] != kt.sigma[i])
      throw std::domain_error("build_standard: sigma not constant on d-orbits");
  }

  ParabolicData pd = parabolic_data(g, kt.S);
  int z = g.rs.rank - static_cast<int>(sset.size());
  if (kt.V.ambient != g.nre || !pd.z.contains(kt.V) || kt.V.dim() != z ||
      !is_isotropic(kt.V, BilinearForm<Q>(g.im_gram)))
    throw std::domain_error("build_standard: V is not Lagrangian in the center");

  Mat<Q> tau = a_sigma_matrix(g, kt.sigma) * gamma_d_on(g, kt.S, kt.d) * g.theta_mat;
  if (!(tau * tau == Mat<Q>::identity(g.nre)))
    throw std::logic_error("build_standard: tau is not an involution");
  Subspace<Q> m1tau = intersect(fixed_space(tau), pd.m1);
  return sum(sum(m1tau, kt.V), pd.n);
}

Subspace<Q> build_l_d_sigma(const SemisimpleRealization& g, const ExtendedSignature& s) {
  std::vector<int> S;
  for (int i = 0; i < g.rs.rank; ++i)
    if (s.values[i] != 0) S.push_back(i);
  ParabolicData pd = parabolic_data(g, S);
  Mat<Q> tau = tau_d_sigma(g, s);
  Subspace<Q> mtau = intersect(fixed_space(tau), pd.m);
  return sum(mtau, pd.n);
}

Subspace<Q> normalizer_in(const SemisimpleRealization& g, const Subspace<Q>& W,
                          const Subspace<Q>& ambient) {
  Bracket br = [&g](const Vec<Q>& x, const Vec<Q>& y) { return g.bracket_re(x, y); };
  return normalizer_in(br, W, ambient);
}

bool is_model_point(const SemisimpleRealization& g, const Subspace<Q>& l) {
  Subspace<Q> k = fixed_space(g.theta_mat);
  return intersect(l, k) == normalizer_in(g, l, k);
}

bool is_model_point_triple(const ManinTriple& t, const Subspace<Q>& l) {
  return intersect(l, t.u) == normalizer_in(t.d.bracket, l, t.u);
}

int epsilon_of(const SemisimpleRealization& g, const Subspace<Q>& V, const std::vector<int>& S) {
  ParabolicData pd = parabolic_data(g, S);
  IwasawaParts parts = iwasawa_parts(g);
  Subspace<Q> zt = intersect(pd.z, parts.t);
  int d = intersect(V, zt).dim();
  return ((d - V.dim()) % 2 == 0) ? 1 : -1;
}

LagrangianData lagrangian_data(const SemisimpleRealization& g, const KarolinskyTriple& kt) {
  LagrangianData ld;
  ld.S = kt.S;
  ld.d = kt.d;
  ld.epsilon = epsilon_of(g, kt.V, kt.S);
  return ld;
}

int rank_compact(const SemisimpleRealization& g, const Subspace<Q>& s, std::uint64_t seed) {
  if (!bracket_closed(g, s)) throw std::domain_error("rank_compact: not a subalgebra");
  if (s.dim() == 0) return 0;
  Rng rng(seed);
  int best = s.dim();
  for (int retry = 0; retry < 8; ++retry) {
    Vec<Q> x(g.nre, Q(0));
    for (int i = 0; i < s.dim(); ++i) x = x + rng.rational() * s.basis.row(i);
    // centralizer of x inside s
    Mat<Q> cond(g.nre, s.dim());
    for (int a = 0; a < s.dim(); ++a) {
      Vec<Q> br = g.bracket_re(s.basis.row(a), x);
      for (int r = 0; r < g.nre; ++r) cond.at(r, a) = br[r];
    }
    int dim_cent = s.dim() - rank(cond);
    best = std::min(best, dim_cent);
  }
  return best;
}

bool in_L0(const SemisimpleRealization& g, const Subspace<Q>& l) {
  Subspace<Q> k = fixed_space(g.theta_mat);
  return rank_compact(g, intersect(l, k)) == rank_compact(g, k);
}

namespace {
std::vector<std::vector<int>> involutions_of(const std::vector<int>& elems) {
  // all involutive permutations of elems, as full maps elems[i] -> image
  std::vector<std::vector<int>> out;
  std::vector<int> img(elems.begin(), elems.end());
  std::sort(img.begin(), img.end());
  do {
    bool inv = true;
    for (size_t i = 0; i < elems.size() && inv; ++i) {
      // position of img[i] in elems
      size_t p = std::find(elems.begin(), elems.end(), img[i]) - elems.begin();
      if (img[p] != elems[i]) inv = false;
    }
    if (inv) out.push_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}
}  // namespace

std::vector<DiagramInvolution> subdiagram_involutions(const RootSystem& rs,
                                                      const std::vector<int>& S) {
  std::vector<int> sorted(S.begin(), S.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<DiagramInvolution> out;
  for (const auto& img : involutions_of(sorted)) {
    DiagramInvolution d;
    d.perm.resize(rs.rank);
    for (int i = 0; i < rs.rank; ++i) d.perm[i] = i;
    for (size_t i = 0; i < sorted.size(); ++i) d.perm[sorted[i]] = img[i];
    bool ok = true;
    for (int i : sorted)
      for (int j : sorted)
        if (rs.cartan[d.perm[i]][d.perm[j]] != rs.cartan[i][j]) ok = false;
    if (ok) out.push_back(d);
  }
  return out;
}

std::vector<DiagramInvolution> full_diagram_involutions(const RootSystem& rs) {
  std::vector<int> all(rs.rank);
  std::iota(all.begin(), all.end(), 0);
  return subdiagram_involutions(rs, all);
}

bool is_essential(const LagrangianData& ld, const RootSystem& rs) {
  if (static_cast<int>(ld.S.size()) != rs.rank - 1) return true;
  if (ld.epsilon != 1) return true;
  std::set<int> sset(ld.S.begin(), ld.S.end());
  for (const auto& dp : full_diagram_involutions(rs)) {
    bool preserves = true;
    for (int i : ld.S)
      if (!sset.count(dp.perm[i]) || dp.perm[i] != ld.d.perm[i]) preserves = false;
    if (preserves) return false;  // restricts from a full-diagram involution
  }
  return true;
}

std::vector<ComponentRecord> enumerate_components(const SemisimpleRealization& g) {
  if (g.rs.rank > 3) throw std::domain_error("enumerate_components: rank capped at 3");
  std::vector<ComponentRecord> out;
  for (unsigned mask = 0; mask < (1u << g.rs.rank); ++mask) {
    std::vector<int> S;
    for (int i = 0; i < g.rs.rank; ++i)
      if (mask & (1u << i)) S.push_back(i);
    int z = g.rs.rank - static_cast<int>(S.size());
    std::vector<int> eps_options = (z == 0) ? std::vector<int>{1} : std::vector<int>{1, -1};
    for (const auto& d : subdiagram_involutions(g.rs, S)) {
      for (int eps : eps_options) {
        ComponentRecord rec;
        rec.data.S = S;
        rec.data.epsilon = eps;
        rec.data.d = d;
        rec.dim = g.ncx + z * (z - 3) / 2;
        rec.essential = is_essential(rec.data, g.rs);
        out.push_back(rec);
      }
    }
  }
  return out;
}

Subspace<Q> l_H_sigma(const SemisimpleRealization& g, const ExtendedSignature& s,
                      const Vec<Q>& chars) {
  if (!s.d.is_identity()) throw std::domain_error("l_H_sigma: requires d = id");
  return map_subspace(torus_ad(g, chars), build_l_d_sigma(g, s));
}

Subspace<Q> intersect_with_k(const SemisimpleRealization& g, const Subspace<Q>& l) {
  return intersect(l, fixed_space(g.theta_mat));
}

}  // namespace lagr
