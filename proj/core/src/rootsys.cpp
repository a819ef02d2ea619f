#include "lagr/rootsys.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace lagr {

namespace {

int height_of(const std::vector<int>& m) {
  int h = 0;
  for (int c : m) h += c;
  return h;
}

// order positives by height, then by leftmost support (larger coordinate at
// the first differing index comes first)
bool root_less(const std::vector<int>& a, const std::vector<int>& b) {
  int ha = height_of(a), hb = height_of(b);
  if (ha != hb) return ha < hb;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] > b[i];
  return false;
}

// invariant symmetric form from the Cartan matrix (simply laced: (x,y) = sum x_i y_j C_ij)
long form_sym(const RootSystem& rs, const std::vector<int>& a, const std::vector<int>& b) {
  long s = 0;
  for (int i = 0; i < rs.rank; ++i)
    for (int j = 0; j < rs.rank; ++j) s += static_cast<long>(a[i]) * b[j] * rs.cartan[i][j];
  return s;
}

std::vector<int> reflect(const RootSystem& rs, const std::vector<int>& beta,
                         const std::vector<int>& alpha) {
  long num = 2 * form_sym(rs, beta, alpha);
  long den = form_sym(rs, alpha, alpha);
  if (den == 0 || num % den != 0) throw std::logic_error("reflect: non-integral pairing");
  long c = num / den;
  std::vector<int> out = beta;
  for (int i = 0; i < rs.rank; ++i) out[i] -= static_cast<int>(c) * alpha[i];
  return out;
}

}  // namespace

int RootSystem::root_index(const std::vector<int>& alpha) const {
  for (int i = 0; i < nroots(); ++i)
    if (roots[i] == alpha) return i;
  return -1;
}

int RootSystem::height(int idx) const { return height_of(roots[idx]); }

int RootSystem::pair_coroot(int root_idx, int i) const {
  int s = 0;
  for (int j = 0; j < rank; ++j) s += roots[root_idx][j] * cartan[i][j];
  return s;
}

Q RootSystem::pair_H(int root_idx, const Vec<Q>& H) const {
  Q s = 0;
  for (int i = 0; i < rank; ++i) s += Q(roots[root_idx][i]) * H[i];
  return s;
}

Vec<Q> RootSystem::coweight(int j) const {
  Vec<Q> w(rank, Q(0));
  for (int k = 0; k < rank; ++k) w[k] = cartan_inv.at(k, j);
  return w;
}

int RootSystem::simple_index(int root_idx) const {
  if (height(root_idx) != 1) return -1;
  for (int i = 0; i < rank; ++i)
    if (roots[root_idx][i] == 1) return i;
  return -1;
}

RootSystem build_root_system(char type, int rank) {
  if (type != 'A') throw std::domain_error("build_root_system: only type A is supported");
  if (rank < 1 || rank > 8) throw std::domain_error("build_root_system: rank out of range");

  RootSystem rs;
  rs.type = type;
  rs.rank = rank;
  rs.cartan.assign(rank, std::vector<int>(rank, 0));
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) rs.cartan[i][j] = (i == j) ? 2 : (std::abs(i - j) == 1 ? -1 : 0);

  // closure of the simple roots under all simple reflections
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> queue;
  for (int i = 0; i < rank; ++i) {
    std::vector<int> a(rank, 0);
    a[i] = 1;
    seen.insert(a);
    queue.push_back(a);
  }
  while (!queue.empty()) {
    std::vector<int> b = queue.back();
    queue.pop_back();
    for (int i = 0; i < rank; ++i) {
      std::vector<int> s(rank, 0);
      s[i] = 1;
      std::vector<int> r = reflect(rs, b, s);
      if (seen.insert(r).second) queue.push_back(r);
    }
  }

  std::vector<std::vector<int>> pos;
  for (const auto& r : seen) {
    bool nonneg = true, nonpos = true;
    for (int c : r) {
      if (c < 0) nonneg = false;
      if (c > 0) nonpos = false;
    }
    if (!nonneg && !nonpos) throw std::logic_error("build_root_system: mixed-sign root");
    if (nonneg) pos.push_back(r);
  }
  std::sort(pos.begin(), pos.end(), root_less);
  rs.npos = static_cast<int>(pos.size());
  rs.roots = pos;
  for (const auto& r : pos) {
    std::vector<int> neg(rank);
    for (int i = 0; i < rank; ++i) neg[i] = -r[i];
    rs.roots.push_back(neg);
  }

  Mat<Q> C(rank, rank);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) C.at(i, j) = Q(rs.cartan[i][j]);
  rs.cartan_inv = inverse(C).value();
  return rs;
}

DiagramInvolution identity_involution(const RootSystem& rs) {
  DiagramInvolution d;
  d.perm.resize(rs.rank);
  for (int i = 0; i < rs.rank; ++i) d.perm[i] = i;
  return d;
}

DiagramInvolution flip_involution(const RootSystem& rs) {
  DiagramInvolution d;
  d.perm.resize(rs.rank);
  for (int i = 0; i < rs.rank; ++i) d.perm[i] = rs.rank - 1 - i;
  validate_involution(rs, d);
  return d;
}

void validate_involution(const RootSystem& rs, const DiagramInvolution& d) {
  std::vector<int> all(rs.rank);
  for (int i = 0; i < rs.rank; ++i) all[i] = i;
  validate_involution_on(rs, all, d);
}

void validate_involution_on(const RootSystem& rs, const std::vector<int>& simples,
                            const DiagramInvolution& d) {
  if (static_cast<int>(d.perm.size()) != rs.rank)
    throw std::domain_error("diagram involution: wrong size");
  std::set<int> sub(simples.begin(), simples.end());
  for (int i = 0; i < rs.rank; ++i) {
    int p = d.perm[i];
    if (p < 0 || p >= rs.rank) throw std::domain_error("diagram involution: out of range");
    if (d.perm[p] != i) throw std::domain_error("diagram involution: not an involution");
    if (sub.count(i) != sub.count(p))
      throw std::domain_error("diagram involution: does not preserve the sub-diagram");
  }
  for (int i : simples)
    for (int j : simples)
      if (rs.cartan[d.perm[i]][d.perm[j]] != rs.cartan[i][j])
        throw std::domain_error("diagram involution: does not preserve the Cartan matrix");
}

ExtendedSignature make_signature(const RootSystem& rs, std::vector<int> values,
                                 DiagramInvolution d) {
  validate_involution(rs, d);
  if (static_cast<int>(values.size()) != rs.rank)
    throw std::domain_error("signature: wrong number of values");
  for (int i = 0; i < rs.rank; ++i) {
    if (values[i] < -1 || values[i] > 1) throw std::domain_error("signature: values must be -1,0,1");
    if (values[d.perm[i]] != values[i])
      throw std::domain_error("signature: not constant on involution orbits");
  }
  return ExtendedSignature{std::move(values), std::move(d)};
}

int sigma_value(const RootSystem& rs, const ExtendedSignature& s, int root_idx) {
  int v = 1;
  for (int i = 0; i < rs.rank; ++i) {
    int m = rs.roots[root_idx][i];
    if (m == 0) continue;
    if (s.values[i] == 0) return 0;
    if (s.values[i] == -1 && (m % 2 != 0)) v = -v;
  }
  return v;
}

SignatureSets signature_sets(const RootSystem& rs, const ExtendedSignature& s) {
  SignatureSets out;
  for (int i = 0; i < rs.rank; ++i)
    if (s.values[i] != 0) out.S.push_back(i);
  for (int r = 0; r < rs.nroots(); ++r) {
    bool in_span = true;
    for (int i = 0; i < rs.rank; ++i)
      if (rs.roots[r][i] != 0 && s.values[i] == 0) in_span = false;
    if (in_span) out.supp.push_back(r);
    if (sigma_value(rs, s, r) == 1) out.sigma_one.push_back(r);
  }
  return out;
}

int pair_rho1(const RootSystem& rs, const ExtendedSignature& s, int root_idx) {
  int v = 0;
  for (int i = 0; i < rs.rank; ++i)
    if (s.values[i] == -1) v += rs.roots[root_idx][i];
  return v;
}

std::vector<ExtendedSignature> enumerate_extended_signatures(const RootSystem& rs,
                                                             const DiagramInvolution& d) {
  validate_involution(rs, d);
  std::vector<int> reps;  // one representative per orbit
  for (int i = 0; i < rs.rank; ++i)
    if (d.perm[i] >= i) reps.push_back(i);
  std::vector<ExtendedSignature> out;
  size_t total = 1;
  for (size_t k = 0; k < reps.size(); ++k) total *= 3;
  for (size_t code = 0; code < total; ++code) {
    size_t c = code;
    std::vector<int> vals(rs.rank, 0);
    for (int r : reps) {
      int v = static_cast<int>(c % 3) - 1;
      c /= 3;
      vals[r] = v;
      vals[d.perm[r]] = v;
    }
    out.push_back(make_signature(rs, vals, d));
  }
  return out;
}

std::vector<int> simple_reflection(const RootSystem& rs, int i) {
  std::vector<int> a(rs.rank, 0);
  a[i] = 1;
  return root_reflection(rs, rs.root_index(a));
}

std::vector<int> root_reflection(const RootSystem& rs, int root_idx) {
  std::vector<int> perm(rs.nroots());
  for (int r = 0; r < rs.nroots(); ++r) {
    std::vector<int> img = reflect(rs, rs.roots[r], rs.roots[root_idx]);
    int k = rs.root_index(img);
    if (k < 0) throw std::logic_error("root_reflection: image is not a root");
    perm[r] = k;
  }
  return perm;
}

namespace {
std::vector<int> compose(const std::vector<int>& a, const std::vector<int>& b) {
  // (a*b)(r) = a(b(r))
  std::vector<int> c(b.size());
  for (size_t r = 0; r < b.size(); ++r) c[r] = a[b[r]];
  return c;
}
}  // namespace

WeylGroup generate_group(const RootSystem& rs, const std::vector<std::vector<int>>& gens) {
  std::vector<int> id(rs.nroots());
  for (int r = 0; r < rs.nroots(); ++r) id[r] = r;
  std::set<std::vector<int>> seen{id};
  std::vector<std::vector<int>> queue{id};
  while (!queue.empty()) {
    std::vector<int> w = queue.back();
    queue.pop_back();
    for (const auto& g : gens) {
      std::vector<int> wg = compose(g, w);
      if (seen.insert(wg).second) queue.push_back(wg);
    }
  }
  WeylGroup out;
  out.elements.assign(seen.begin(), seen.end());
  return out;
}

WeylGroup weyl_enumerate(const RootSystem& rs) {
  std::vector<std::vector<int>> gens;
  for (int i = 0; i < rs.rank; ++i) gens.push_back(simple_reflection(rs, i));
  return generate_group(rs, gens);
}

WeylGroup subgroup_W_sigma(const RootSystem& rs, const ExtendedSignature& s) {
  std::vector<std::vector<int>> gens;
  for (int i = 0; i < rs.rank; ++i)
    if (s.values[i] != 0) gens.push_back(simple_reflection(rs, i));
  return generate_group(rs, gens);
}

namespace {
bool preserves_set(const std::vector<int>& w, const std::vector<int>& set) {
  std::set<int> target(set.begin(), set.end());
  for (int r : set)
    if (!target.count(w[r])) return false;
  return true;
}
}  // namespace

WeylGroup subgroup_W0_sigma(const RootSystem& rs, const ExtendedSignature& s) {
  WeylGroup big = subgroup_W_sigma(rs, s);
  SignatureSets sets = signature_sets(rs, s);
  WeylGroup out;
  for (const auto& w : big.elements)
    if (preserves_set(w, sets.sigma_one)) out.elements.push_back(w);
  return out;
}

WeylGroup subgroup_R_sigma(const RootSystem& rs, const ExtendedSignature& s) {
  SignatureSets sets = signature_sets(rs, s);
  std::vector<std::vector<int>> gens;
  for (int r : sets.sigma_one) gens.push_back(root_reflection(rs, r));
  return generate_group(rs, gens);
}

QuotientGroup Z_sigma(const RootSystem& rs, const ExtendedSignature& s) {
  WeylGroup w0 = subgroup_W0_sigma(rs, s);
  WeylGroup r = subgroup_R_sigma(rs, s);
  std::set<std::vector<int>> rset(r.elements.begin(), r.elements.end());
  for (const auto& e : r.elements)
    if (std::find(w0.elements.begin(), w0.elements.end(), e) == w0.elements.end())
      throw std::logic_error("Z_sigma: reflection subgroup not contained in W0");

  QuotientGroup out;
  // normality: w g w^{-1} in R for generators g of R and all w in W0
  out.normal = true;
  for (const auto& w : w0.elements) {
    std::vector<int> winv(w.size());
    for (size_t i = 0; i < w.size(); ++i) winv[w[i]] = static_cast<int>(i);
    for (const auto& g : r.elements) {
      if (!rset.count(compose(w, compose(g, winv)))) {
        out.normal = false;
        break;
      }
    }
    if (!out.normal) break;
  }

  std::set<std::vector<int>> assigned;
  for (const auto& w : w0.elements) {
    if (assigned.count(w)) continue;
    std::vector<std::vector<int>> coset;
    for (const auto& g : r.elements) {
      std::vector<int> wg = compose(w, g);
      coset.push_back(wg);
      assigned.insert(wg);
    }
    std::sort(coset.begin(), coset.end());
    out.cosets.push_back(coset);
  }
  out.order = static_cast<int>(out.cosets.size());
  return out;
}

WeylGroup W_H_sigma(const RootSystem& rs, const ExtendedSignature& s, const Vec<Q>& H) {
  if (static_cast<int>(H.size()) != rs.rank) throw std::domain_error("W_H_sigma: H has wrong size");
  WeylGroup w0 = subgroup_W0_sigma(rs, s);
  // values alpha(H) for every root; w fixes H iff alpha(wH) = (w^{-1}alpha)(H)
  // equals alpha(H) for all alpha
  std::vector<Q> hv(rs.nroots());
  for (int r = 0; r < rs.nroots(); ++r) hv[r] = rs.pair_H(r, H);
  WeylGroup out;
  for (const auto& w : w0.elements) {
    std::vector<int> winv(w.size());
    for (size_t i = 0; i < w.size(); ++i) winv[w[i]] = static_cast<int>(i);
    bool fixes = true;
    for (int r = 0; r < rs.nroots() && fixes; ++r)
      if (hv[winv[r]] != hv[r]) fixes = false;
    if (fixes) out.elements.push_back(w);
  }
  return out;
}

}  // namespace lagr
