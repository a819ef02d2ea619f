#include "lagr/suite.hpp"

#include "lagr/degen.hpp"
#include "lagr/poisson.hpp"
#include "lagr/sl2model.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lagr {
namespace {

// ---------------------------------------------------------------------------
// naming helpers

std::string sigma_str(const std::vector<int>& v) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += v[i] > 0 ? "+" : v[i] < 0 ? "-" : "0";
  }
  return out;
}

std::string diagram_str(const DiagramInvolution& d) {
  if (d.is_identity()) return "id";
  std::string out;
  for (size_t i = 0; i < d.perm.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(d.perm[i]);
  }
  return "perm(" + out + ")";
}

std::string set_str(const std::vector<int>& s) {
  std::string out = "{";
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s[i]);
  }
  return out + "}";
}

std::string count_str(int got, int total) {
  return std::to_string(got) + "/" + std::to_string(total);
}

std::string subspace_key(const Subspace<Q>& s) {
  std::ostringstream os;
  os << s.ambient << '/' << s.dim();
  for (int i = 0; i < s.basis.rows; ++i)
    for (int j = 0; j < s.basis.cols; ++j) os << ',' << to_string(s.basis.at(i, j));
  return os.str();
}

std::string first_failure(const CheckReport& r) {
  for (const auto& it : r.items)
    if (!it.pass) return "failed axiom: " + it.id;
  return std::string();
}

// ---------------------------------------------------------------------------
// shared corpora

struct NamedL {
  std::string name;
  Subspace<Q> l;
};

struct Sweep {
  SemisimpleRealization g;
  ManinTriple triple;
  IwasawaParts parts;
  std::vector<NamedL> base;  // k, t+n, a+n and every signature subalgebra
};

Sweep make_sweep(int rank) {
  Sweep sw;
  sw.g = build_chevalley('A', rank);
  sw.triple = iwasawa_double(sw.g);
  sw.parts = iwasawa_parts(sw.g);
  sw.base.push_back({"k", sw.parts.k});
  sw.base.push_back({"t+n", sum(sw.parts.t, sw.parts.n)});
  sw.base.push_back({"a+n", sum(sw.parts.a, sw.parts.n)});
  for (const DiagramInvolution& d : full_diagram_involutions(sw.g.rs))
    for (const ExtendedSignature& s : enumerate_extended_signatures(sw.g.rs, d))
      sw.base.push_back({"l[" + diagram_str(d) + ";" + sigma_str(s.values) + "]",
                         build_l_d_sigma(sw.g, s)});
  return sw;
}

struct NamedKT {
  std::string name;
  KarolinskyTriple kt;
};

// graph {x + J A x} over the real part of the Cartan, with A skew for the
// restricted invariant form; an isotropic complement transverse to both the
// compact and the split halves (rank >= 2)
Subspace<Q> skew_graph_V(const SemisimpleRealization& g) {
  const int r = g.rs.rank;
  Mat<Q> B(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) B.at(i, j) = g.kc.at(i, j);
  Mat<Q> K(r, r);
  K.at(0, 1) = Q(1);
  K.at(1, 0) = Q(-1);
  Mat<Q> A = inverse(B).value() * K;
  Mat<Q> rows(0, g.nre);
  for (int i = 0; i < r; ++i) {
    Vec<Q> x(r, Q(0));
    x[i] = Q(1);
    Vec<Q> ax = A.apply(x);
    Vec<Q> v = g.basis_h(i);
    for (int j = 0; j < r; ++j) v = v + ax[j] * g.basis_Jh(j);
    rows.push_row(v);
  }
  return canonicalize(rows, g.nre);
}

// every (S, V, involution, signs) construction datum the suite exercises:
// all parabolic types, all sub-diagram involutions, all sign vectors, and
// the centre sections V = z cap t, V = z cap a, plus one skew graph
std::vector<NamedKT> standard_triples(const SemisimpleRealization& g) {
  IwasawaParts parts = iwasawa_parts(g);
  const int r = g.rs.rank;
  std::vector<NamedKT> out;
  for (int mask = 0; mask < (1 << r); ++mask) {
    std::vector<int> S;
    for (int i = 0; i < r; ++i)
      if (mask & (1 << i)) S.push_back(i);
    ParabolicData pd = parabolic_data(g, S);
    std::vector<std::pair<std::string, Subspace<Q>>> vs;
    Subspace<Q> zt = intersect(pd.z, parts.t);
    Subspace<Q> za = intersect(pd.z, parts.a);
    vs.push_back({"z&t", zt});
    if (!(za == zt)) vs.push_back({"z&a", za});
    if (S.empty() && r >= 2) vs.push_back({"graph", skew_graph_V(g)});
    for (const DiagramInvolution& d : subdiagram_involutions(g.rs, S)) {
      const int m = static_cast<int>(S.size());
      for (int smask = 0; smask < (1 << m); ++smask) {
        std::vector<int> sigma(r, 0);
        for (int a = 0; a < m; ++a) sigma[S[a]] = (smask >> a & 1) ? -1 : 1;
        bool orbit_ok = true;
        for (int i : S)
          if (sigma[d.perm[i]] != sigma[i]) orbit_ok = false;
        if (!orbit_ok) continue;
        for (const auto& [vname, V] : vs)
          out.push_back({"l(S=" + set_str(S) + ";V=" + vname + ";" + diagram_str(d) + ";" +
                             sigma_str(sigma) + ")",
                         KarolinskyTriple{S, V, d, sigma}});
      }
    }
  }
  return out;
}

// form-preserving rational inner automorphisms used to spread the corpora
std::vector<std::pair<std::string, Mat<Q>>> adjoint_words(const SemisimpleRealization& g) {
  const int r = g.rs.rank;
  Vec<Q> chars(r, Q(0));
  for (int i = 0; i < r; ++i) chars[i] = Q(2 + i);
  std::vector<std::pair<std::string, Mat<Q>>> words;
  words.push_back({"Ad[s]", torus_ad(g, chars)});
  words.push_back({"Ad[w0]", weyl_rep(g, 0)});
  words.push_back({"Ad[exp(e0)]", exp_ad_nilpotent(g, g.basis_e(0), Q(1))});
  if (r >= 2) words.push_back({"Ad[w1.s]", weyl_rep(g, 1) * torus_ad(g, chars)});
  words.push_back(
      {"Ad[exp(Je0).s]", exp_ad_nilpotent(g, g.basis_Je(0), Q(1, 2)) * torus_ad(g, chars)});
  return words;
}

// base sweep + construction data + their images under the adjoint words,
// with exact duplicates removed
std::vector<NamedL> full_corpus(const Sweep& sw, const std::vector<NamedKT>* kts) {
  std::vector<NamedL> all = sw.base;
  if (kts)
    for (const NamedKT& nk : *kts) all.push_back({nk.name, build_standard(sw.g, nk.kt)});
  const size_t nbase = all.size();
  for (const auto& [wname, wmat] : adjoint_words(sw.g))
    for (size_t i = 0; i < nbase; ++i)
      all.push_back({wname + " " + all[i].name, map_subspace(wmat, all[i].l)});
  std::vector<NamedL> out;
  std::map<std::string, bool> seen;
  for (auto& nl : all) {
    std::string key = subspace_key(nl.l);
    if (seen.count(key)) continue;
    seen[key] = true;
    out.push_back(std::move(nl));
  }
  return out;
}

Subspace<Q> random_halfdim(const SemisimpleRealization& g, Rng& rng) {
  const int h = g.nre / 2;
  for (;;) {
    Mat<Q> m(0, g.nre);
    for (int i = 0; i < h; ++i) {
      Vec<Q> v(g.nre, Q(0));
      for (int j = 0; j < g.nre; ++j) v[j] = rng.rational(3, 2);
      m.push_row(v);
    }
    Subspace<Q> W = canonicalize(m, g.nre);
    if (W.dim() == h) return W;
  }
}

// one-parameter degeneration instances: a signature with larger support, the
// signature it degenerates to, and the grading direction realizing the limit
struct LimitPair {
  ExtendedSignature hi, lo;
  Vec<Q> H;
  std::string name;
};

std::vector<LimitPair> comparable_pairs(const RootSystem& rs) {
  std::vector<LimitPair> out;
  for (const DiagramInvolution& d : full_diagram_involutions(rs)) {
    std::vector<ExtendedSignature> sigs = enumerate_extended_signatures(rs, d);
    for (const ExtendedSignature& hi : sigs)
      for (const ExtendedSignature& lo : sigs) {
        bool comparable = true, strict = false;
        for (int i = 0; i < rs.rank; ++i) {
          if (lo.values[i] == 0) {
            if (hi.values[i] != 0) strict = true;
          } else if (lo.values[i] != hi.values[i]) {
            comparable = false;
          }
        }
        if (!comparable || !strict) continue;
        Vec<Q> H(rs.rank, Q(0));
        for (int i = 0; i < rs.rank; ++i)
          if (lo.values[i] == 0) H[i] = Q(1);
        out.push_back({hi, lo, H,
                       diagram_str(d) + " " + sigma_str(hi.values) + " -> " +
                           sigma_str(lo.values)});
      }
  }
  return out;
}

// matrix of ad_x read off an abstract bracket
Mat<Q> ad_from_bracket(const Bracket& br, int dim, const Vec<Q>& x) {
  Mat<Q> ad(dim, dim);
  for (int j = 0; j < dim; ++j) {
    Vec<Q> e(dim, Q(0));
    e[j] = Q(1);
    Vec<Q> col = br(x, e);
    for (int i = 0; i < dim; ++i) ad.at(i, j) = col[i];
  }
  return ad;
}

Mat<Q> exp_nilpotent(const Mat<Q>& a) {
  const int n = a.rows;
  Mat<Q> out = Mat<Q>::identity(n);
  Mat<Q> term = Mat<Q>::identity(n);
  for (int k = 1; k <= n; ++k) {
    term = Q(1, k) * (term * a);
    if (term.is_zero()) return out;
    out = out + term;
  }
  throw std::domain_error("exp_nilpotent: matrix is not nilpotent");
}

}  // namespace

// ---------------------------------------------------------------------------
// 1. axiom sweep + random counterexamples

CheckReport criterion_1() {
  CheckReport rep;
  for (int rank : {1, 2}) {
    Sweep sw = make_sweep(rank);
    std::string tag = "A" + std::to_string(rank) + " ";
    for (const NamedL& nl : sw.base) {
      CheckReport ax = lagrangian_axioms(sw.g, nl.l);
      rep.add(tag + nl.name, ax.all_pass(), first_failure(ax));
    }
    Rng rng(0xC1A0 + static_cast<std::uint64_t>(rank));
    const int trials = rank == 1 ? 8 : 12;
    int rejected = 0;
    for (int t = 0; t < trials; ++t) {
      Subspace<Q> W = random_halfdim(sw.g, rng);
      CheckReport ax = lagrangian_axioms(sw.g, W);
      bool named = false;
      for (const auto& it : ax.items)
        if (!it.pass && !it.id.empty()) named = true;
      if (named && !is_lagrangian(sw.g, W)) ++rejected;
    }
    rep.add(tag + "random half-dimension subspaces rejected", rejected == trials,
            count_str(rejected, trials) + " fail with a named axiom");
  }
  return rep;
}

// ---------------------------------------------------------------------------
// 2. quotient bivector <-> graph subspace round trips on abelian doubles

CheckReport criterion_2() {
  CheckReport rep;
  Rng rng(0xD21F);
  const int trials = 100;
  int round_ok = 0, push_ok = 0;
  for (int t = 0; t < trials; ++t) {
    const int n = 1 + static_cast<int>(rng.below(6));
    ManinTriple tri = linear_triple(n);
    Subspace<Q> V = tri.u;
    const int k = static_cast<int>(rng.below(static_cast<std::uint64_t>(n) + 1));
    Mat<Q> rows(0, 2 * n);
    for (int i = 0; i < k; ++i) {
      Vec<Q> v(2 * n, Q(0));
      for (int j = 0; j < n; ++j) v[j] = rng.rational();
      rows.push_row(v);
    }
    Subspace<Q> V0 = canonicalize(rows, 2 * n);
    Mat<Q> comp = complement_basis(V0, V);
    const int m = comp.rows;
    Mat<Q> lam(m, m);
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) {
        lam.at(i, j) = rng.rational();
        lam.at(j, i) = -lam.at(i, j);
      }
    QuotientBivector qb0{V, V0, comp, lam};
    Subspace<Q> W = drinfeld_l_from_pi(HomogeneousSpec{tri, V0, qb0, Q(0)});
    QuotientBivector back = lambda_from_W(tri, W, V0, &comp);
    if (back.lambda == lam &&
        drinfeld_l_from_pi(HomogeneousSpec{tri, V0, back, Q(0)}) == W)
      ++round_ok;
    Mat<Q> upr(0, 2 * n);
    const int extra =
        m == 0 ? 0 : static_cast<int>(rng.below(static_cast<std::uint64_t>(m) + 1));
    for (int i = 0; i < extra; ++i) upr.push_row(comp.row(i));
    Subspace<Q> V1 = sum(V0, canonicalize(upr, 2 * n));
    QuotientBivector qb1 = pushforward(tri, qb0, V1);
    if (pushforward_check(tri, qb0, qb1)) ++push_ok;
  }
  rep.add("bivector <-> graph round trip", round_ok == trials, count_str(round_ok, trials));
  rep.add("pushforward subspace identity", push_ok == trials, count_str(push_ok, trials));
  return rep;
}

// ---------------------------------------------------------------------------
// 3. T-map values

CheckReport criterion_3() {
  CheckReport rep;
  for (int rank : {1, 2}) {
    Sweep sw = make_sweep(rank);
    Subspace<Q> an = sum(sw.parts.a, sw.parts.n);
    Subspace<Q> tn = sum(sw.parts.t, sw.parts.n);
    rep.add("A" + std::to_string(rank) + " T(a+n) = t+n", T_map(sw.triple, an) == tn);
  }
  Sweep sw = make_sweep(2);
  int ok = 0;
  std::vector<NamedKT> kts = standard_triples(sw.g);
  for (const NamedKT& nk : kts) {
    Subspace<Q> l = build_standard(sw.g, nk.kt);
    KarolinskyTriple model = nk.kt;
    model.V = intersect(parabolic_data(sw.g, nk.kt.S).z, sw.parts.t);
    Subspace<Q> expected = build_standard(sw.g, model);
    Subspace<Q> tl = T_map(sw.triple, l);
    if (tl == expected && T_map(sw.triple, tl) == tl) ++ok;
    else rep.add("A2 T " + nk.name, false, "image or idempotence mismatch");
  }
  rep.add("A2 T replaces V by z&t and is idempotent", ok == static_cast<int>(kts.size()),
          count_str(ok, static_cast<int>(kts.size())));
  ManinTriple ht = heisenberg_double();
  auto unit_span = [](std::vector<int> idx) {
    Mat<Q> m(0, 6);
    for (int i : idx) {
      Vec<Q> v(6, Q(0));
      v[i] = Q(1);
      m.push_row(v);
    }
    return canonicalize(m, 6);
  };
  Subspace<Q> l0 = unit_span({0, 4, 5});  // X, fY, fZ
  Subspace<Q> l1 = unit_span({0, 2, 4});  // X, Z, fY
  Subspace<Q> t1 = T_map(ht, l0);
  Subspace<Q> t2 = T_map(ht, t1);
  rep.add("heisenberg T(X,fY,fZ) = (X,Z,fY)", t1 == l1);
  rep.add("heisenberg T^2(X,fY,fZ) = u", t2 == ht.u);
  rep.add("heisenberg T^2 != T there", !(t2 == t1));
  return rep;
}

// ---------------------------------------------------------------------------
// 4. bivector certificates across the full corpus

CheckReport criterion_4() {
  CheckReport rep;
  int total = 0;
  for (int rank : {1, 2}) {
    Sweep sw = make_sweep(rank);
    std::vector<NamedKT> kts;
    if (rank == 2) kts = standard_triples(sw.g);
    std::vector<NamedL> corpus = full_corpus(sw, rank == 2 ? &kts : nullptr);
    total += static_cast<int>(corpus.size());
    std::string tag = "A" + std::to_string(rank) + " ";
    int jac = 0, tan = 0, fix = 0;
    for (const NamedL& nl : corpus) {
      if (check_Pi_jacobi(sw.triple, nl.l)) ++jac;
      else rep.add(tag + "jacobi " + nl.name, false);
      if (check_tangency(sw.triple, nl.l)) ++tan;
      else rep.add(tag + "tangency " + nl.name, false);
      bool fixed = T_map(sw.triple, nl.l) == nl.l;
      if (fixed == is_model_point(sw.g, nl.l)) ++fix;
      else rep.add(tag + "fixed-iff-model " + nl.name, false);
    }
    const int n = static_cast<int>(corpus.size());
    rep.add(tag + "bivector Jacobi certificates", jac == n, count_str(jac, n));
    rep.add(tag + "tangency certificates", tan == n, count_str(tan, n));
    rep.add(tag + "T-fixed exactly on model points", fix == n, count_str(fix, n));
  }
  rep.add("corpus has at least 40 subalgebras", total >= 40,
          std::to_string(total) + " distinct subalgebras");
  return rep;
}

// ---------------------------------------------------------------------------
// 5. normalizer formulas and dimension identities

CheckReport criterion_5() {
  CheckReport rep;
  {
    Sweep sw = make_sweep(2);
    Subspace<Q> g_full = Subspace<Q>::full(sw.g.nre);
    std::vector<NamedKT> kts = standard_triples(sw.g);
    int ok = 0;
    for (const NamedKT& nk : kts) {
      Subspace<Q> l = build_standard(sw.g, nk.kt);
      ParabolicData pd = parabolic_data(sw.g, nk.kt.S);
      Mat<Q> tau = a_sigma_matrix(sw.g, nk.kt.sigma) * gamma_d_on(sw.g, nk.kt.S, nk.kt.d) *
                   sw.g.theta_mat;
      Subspace<Q> rhs = sum(sum(intersect(fixed_space(tau), pd.m1), pd.z), pd.n);
      if (normalizer_in(sw.g, l, g_full) == rhs) ++ok;
      else rep.add("A2 normalizer formula " + nk.name, false);
    }
    rep.add("A2 normalizer of every construction equals m1^tau + z + n",
            ok == static_cast<int>(kts.size()), count_str(ok, static_cast<int>(kts.size())));
  }
  for (int rank : {1, 2}) {
    Sweep sw = make_sweep(rank);
    Subspace<Q> g_full = Subspace<Q>::full(sw.g.nre);
    std::string tag = "A" + std::to_string(rank) + " ";
    int self_ok = 0, self_n = 0, dim_ok = 0, dim_n = 0;
    for (const DiagramInvolution& d : full_diagram_involutions(sw.g.rs))
      for (const ExtendedSignature& s : enumerate_extended_signatures(sw.g.rs, d)) {
        Subspace<Q> l = build_l_d_sigma(sw.g, s);
        Subspace<Q> N = normalizer_in(sw.g, l, g_full);
        int supp = 0;
        for (int v : s.values)
          if (v != 0) ++supp;
        ++dim_n;
        if (sw.g.nre - N.dim() == sw.g.ncx - (sw.g.rs.rank - supp)) ++dim_ok;
        else rep.add(tag + "codimension " + diagram_str(d) + ";" + sigma_str(s.values), false);
        bool nowhere_zero = supp == sw.g.rs.rank;
        if (nowhere_zero) {
          ++self_n;
          if (N == l) ++self_ok;
          else rep.add(tag + "self-normalizing " + diagram_str(d) + ";" + sigma_str(s.values),
                       false);
        }
      }
    rep.add(tag + "real forms self-normalize", self_ok == self_n, count_str(self_ok, self_n));
    rep.add(tag + "normalizer codimension = complex codimension of the centre",
            dim_ok == dim_n, count_str(dim_ok, dim_n));
  }
  return rep;
}

// ---------------------------------------------------------------------------
// 6. component inventory

CheckReport criterion_6() {
  CheckReport rep;
  {
    SemisimpleRealization g = build_chevalley('A', 1);
    std::vector<ComponentRecord> recs = enumerate_components(g);
    std::vector<int> ess;
    for (const ComponentRecord& r : recs)
      if (r.essential) ess.push_back(r.dim);
    std::sort(ess.begin(), ess.end());
    rep.add("A1 two components of dims {2,3}", ess == std::vector<int>({2, 3}),
            std::to_string(recs.size()) + " strata, " + std::to_string(ess.size()) +
                " essential");
  }
  {
    SemisimpleRealization g = build_chevalley('A', 2);
    std::vector<ComponentRecord> recs = enumerate_components(g);
    int ess = 0;
    std::vector<int> dims;
    for (const ComponentRecord& r : recs)
      if (r.essential) {
        ++ess;
        dims.push_back(r.dim);
      }
    std::sort(dims.begin(), dims.end());
    rep.add("A2 eight strata", static_cast<int>(recs.size()) == 8,
            std::to_string(recs.size()) + " strata");
    rep.add("A2 six essential components", ess == 6, std::to_string(ess) + " essential");
    rep.add("A2 essential dims {7,7,7,7,8,8}", dims == std::vector<int>({7, 7, 7, 7, 8, 8}));
  }
  for (int rank : {1, 2, 3}) {
    SemisimpleRealization g = build_chevalley('A', rank);
    const int dim_k = fixed_space(g.theta_mat).dim();
    std::vector<ComponentRecord> recs = enumerate_components(g);
    int ok = 0;
    for (const ComponentRecord& r : recs) {
      ParabolicData pd = parabolic_data(g, r.data.S);
      const int z = pd.z.dim() / 2;  // complex dimension of the centre
      if (r.dim == dim_k + z * (z - 3) / 2) ++ok;
    }
    rep.add("A" + std::to_string(rank) + " dimension formula dim k + z(z-3)/2",
            ok == static_cast<int>(recs.size()),
            count_str(ok, static_cast<int>(recs.size())) + " strata");
  }
  return rep;
}

// ---------------------------------------------------------------------------
// 7. model points

CheckReport criterion_7() {
  CheckReport rep;
  Sweep sw = make_sweep(2);
  std::vector<NamedKT> kts = standard_triples(sw.g);
  int agree = 0;
  for (const NamedKT& nk : kts) {
    ParabolicData pd = parabolic_data(sw.g, nk.kt.S);
    bool crit = nk.kt.V == intersect(pd.z, sw.parts.t);
    bool direct = is_model_point(sw.g, build_standard(sw.g, nk.kt));
    if (crit == direct) ++agree;
    else rep.add("A2 model criterion " + nk.name, false);
  }
  rep.add("A2 centre criterion V = z&t agrees with the direct check",
          agree == static_cast<int>(kts.size()), count_str(agree, static_cast<int>(kts.size())));

  // sampled orbit of the points containing the compact torus
  std::vector<std::pair<std::string, Mat<Q>>> words = adjoint_words(sw.g);
  words.push_back({"Ad[word2]", exp_ad_nilpotent(sw.g, sw.g.basis_e(2), Q(1, 3)) *
                                    weyl_rep(sw.g, 0) *
                                    exp_ad_nilpotent(sw.g, sw.g.basis_Je(1), Q(2))});
  int sampled = 0, good = 0;
  for (const NamedKT& nk : kts) {
    if (!nk.kt.d.is_identity()) continue;
    if (!(nk.kt.V == intersect(parabolic_data(sw.g, nk.kt.S).z, sw.parts.t))) continue;
    Subspace<Q> l = build_standard(sw.g, nk.kt);
    for (const auto& [wname, wmat] : words) {
      Subspace<Q> img = map_subspace(wmat, l);
      ++sampled;
      if (in_L0(sw.g, img) && is_model_point(sw.g, img)) ++good;
      else rep.add("A2 sampled point " + wname + " " + nk.name, false);
    }
  }
  rep.add("A2 sampled orbit points stay in the k-component and are model points",
          sampled == good && sampled >= 20, count_str(good, sampled));

  // an outer real form is a model point yet not in the k-component
  ExtendedSignature outer =
      make_signature(sw.g.rs, {1, 1}, flip_involution(sw.g.rs));
  Subspace<Q> outer_form = build_l_d_sigma(sw.g, outer);
  rep.add("A2 outer real form: model point outside the k-component",
          is_model_point(sw.g, outer_form) && !in_L0(sw.g, outer_form));
  rep.add("A2 a+n lies outside the k-component",
          !in_L0(sw.g, sum(sw.parts.a, sw.parts.n)));

  // opposite-borel double: base point model, long-element conjugate not
  SemisimpleRealization g1 = build_chevalley('A', 1);
  ManinTriple bt = borel_double(g1);
  rep.add("borel double: b+ is a model point", is_model_point_triple(bt, bt.u));
  const int nd = bt.d.dim;
  Vec<Q> e(nd, Q(0)), f(nd, Q(0));
  e[g1.e_index(0)] = Q(1);
  f[g1.e_index(1)] = Q(1);
  Mat<Q> w = exp_nilpotent(ad_from_bracket(bt.d.bracket, nd, e)) *
             exp_nilpotent(Q(-1) * ad_from_bracket(bt.d.bracket, nd, f)) *
             exp_nilpotent(ad_from_bracket(bt.d.bracket, nd, e));
  Subspace<Q> img = map_subspace(w, bt.u);
  rep.add("borel double: long-element conjugate equals b- and is not a model point",
          img == bt.ustar && !is_model_point_triple(bt, img));
  return rep;
}

// ---------------------------------------------------------------------------
// 8. one-parameter limits

CheckReport criterion_8() {
  CheckReport rep;
  Sweep sw = make_sweep(2);
  std::vector<LimitPair> pairs = comparable_pairs(sw.g.rs);
  int ok = 0;
  for (const LimitPair& p : pairs) {
    Subspace<Q> lim =
        limit_subspace(build_l_d_sigma(sw.g, p.hi), grading_from_H(sw.g, p.H));
    if (lim == build_l_d_sigma(sw.g, p.lo)) ++ok;
    else rep.add("A2 limit " + p.name, false);
  }
  rep.add("A2 all comparable signature limits",
          ok == static_cast<int>(pairs.size()) && pairs.size() == 18,
          count_str(ok, static_cast<int>(pairs.size())));

  DiagramInvolution flip = flip_involution(sw.g.rs);
  ExtendedSignature s0 = make_signature(sw.g.rs, {0, 0}, flip);
  ExtendedSignature s1 = make_signature(sw.g.rs, {1, 1}, flip);
  Vec<Q> H{Q(1), Q(1)};
  Subspace<Q> lim =
      limit_subspace(build_l_d_sigma(sw.g, s1), grading_from_H(sw.g, H));
  std::vector<int> hidx(sw.g.rs.rank);
  for (int i = 0; i < sw.g.rs.rank; ++i) hidx[i] = i;
  Subspace<Q> htau =
      intersect(fixed_space(tau_d_sigma(sw.g, s0)), complex_span(sw.g, hidx));
  rep.add("A2 twisted-diagonal limit = h^tau + n", lim == sum(htau, sw.parts.n));
  rep.add("A2 dim(h^tau cap t) = 1", intersect(htau, sw.parts.t).dim() == 1);
  rep.add("A2 T(limit) = t+n",
          T_map(sw.triple, lim) == sum(sw.parts.t, sw.parts.n));
  return rep;
}

// ---------------------------------------------------------------------------
// 9. complexification dictionary

CheckReport criterion_9() {
  CheckReport rep;
  for (int rank : {1, 2}) {
    Sweep sw = make_sweep(rank);
    DoubleAmbient D = double_ambient(sw.g);
    std::vector<NamedKT> kts;
    if (rank == 2) kts = standard_triples(sw.g);
    std::vector<NamedL> corpus = full_corpus(sw, rank == 2 ? &kts : nullptr);
    std::string tag = "A" + std::to_string(rank) + " ";
    int equiv = 0, stable = 0, round = 0;
    for (const NamedL& nl : corpus) {
      Subspace<Gq> W = complexify_subspace(sw.g, nl.l);
      if (is_lagrangian(sw.g, nl.l) == is_lagrangian_I(D, W)) ++equiv;
      else rep.add(tag + "dictionary " + nl.name, false);
      if (real_structure_test(D, W)) ++stable;
      else rep.add(tag + "tau-stability " + nl.name, false);
      if (real_points(sw.g, W) == nl.l) ++round;
      else rep.add(tag + "real points " + nl.name, false);
    }
    const int n = static_cast<int>(corpus.size());
    rep.add(tag + "Lagrangian dictionary on the corpus", equiv == n, count_str(equiv, n));
    rep.add(tag + "tau-stability of every complexified member", stable == n,
            count_str(stable, n));
    rep.add(tag + "real-points round trip", round == n, count_str(round, n));

    Rng rng(0x99 + static_cast<std::uint64_t>(rank));
    const int trials = 6;
    int neg = 0;
    for (int t = 0; t < trials; ++t) {
      Subspace<Q> W = random_halfdim(sw.g, rng);
      if (is_lagrangian(sw.g, W) == is_lagrangian_I(D, complexify_subspace(sw.g, W))) ++neg;
    }
    rep.add(tag + "dictionary on random subspaces", neg == trials, count_str(neg, trials));

    int eta_ok = 0, eta_n = 0;
    for (const DiagramInvolution& d : full_diagram_involutions(sw.g.rs)) {
      const int r = sw.g.rs.rank;
      for (int mask = 0; mask < (1 << r); ++mask) {
        std::vector<int> eta(r, 0);
        for (int i = 0; i < r; ++i) eta[i] = (mask >> i) & 1;
        bool dconst = true;
        for (int i = 0; i < r; ++i)
          if (eta[d.perm[i]] != eta[i]) dconst = false;
        if (!dconst) continue;
        ++eta_n;
        ExtendedSignature s = make_signature(sw.g.rs, eta, d);
        if (build_g_d_eta(sw.g, d, eta) ==
            complexify_subspace(sw.g, build_l_d_sigma(sw.g, s)))
          ++eta_ok;
        else
          rep.add(tag + "graph algebra " + diagram_str(d) + ";eta=" + sigma_str(eta), false);
      }
    }
    rep.add(tag + "graph algebras match complexified signature points", eta_ok == eta_n,
            count_str(eta_ok, eta_n));
  }

  Sweep sw = make_sweep(2);
  std::vector<LimitPair> pairs = comparable_pairs(sw.g.rs);
  int lim_ok = 0;
  for (const LimitPair& p : pairs) {
    Subspace<Q> l_hi = build_l_d_sigma(sw.g, p.hi);
    Subspace<Gq> lhs = limit_in_double(sw.g, complexify_subspace(sw.g, l_hi), p.H);
    Subspace<Gq> rhs =
        complexify_subspace(sw.g, limit_subspace(l_hi, grading_from_H(sw.g, p.H)));
    if (lhs == rhs && lhs == complexify_subspace(sw.g, build_l_d_sigma(sw.g, p.lo)))
      ++lim_ok;
    else rep.add("A2 doubled limit " + p.name, false);
  }
  rep.add("A2 doubled limits commute with complexification",
          lim_ok == static_cast<int>(pairs.size()),
          count_str(lim_ok, static_cast<int>(pairs.size())));
  return rep;
}

// ---------------------------------------------------------------------------
// 10. torus-twisted bivectors

CheckReport criterion_10() {
  CheckReport rep;
  for (int rank : {1, 2}) {
    Sweep sw = make_sweep(rank);
    std::string tag = "A" + std::to_string(rank) + " ";
    Vec<Q> chars(rank, Q(0));
    for (int i = 0; i < rank; ++i) chars[i] = Q(2 + i);
    DiagramInvolution id = identity_involution(sw.g.rs);
    int dr_ok = 0, k_ok = 0, n = 0;
    for (const ExtendedSignature& s : enumerate_extended_signatures(sw.g.rs, id)) {
      ++n;
      Subspace<Q> lhs = l_H_sigma(sw.g, s, chars);
      if (drinfeld_l_from_pi(pi_H_sigma(sw.g, s, chars)) == lhs) ++dr_ok;
      else rep.add(tag + "drinfeld image sigma=" + sigma_str(s.values), false);
      if (intersect_with_k(sw.g, lhs) == sw.parts.t) ++k_ok;
      else rep.add(tag + "compact intersection sigma=" + sigma_str(s.values), false);
    }
    rep.add(tag + "bivector images equal the torus-twisted subalgebras", dr_ok == n,
            count_str(dr_ok, n));
    rep.add(tag + "l cap k = t for non-unit characters", k_ok == n, count_str(k_ok, n));
  }
  {
    Sweep sw = make_sweep(1);
    ExtendedSignature plus = make_signature(sw.g.rs, {1}, identity_involution(sw.g.rs));
    Vec<Q> ones{Q(1)};
    rep.add("A1 unit character: l cap k = k != t",
            intersect_with_k(sw.g, l_H_sigma(sw.g, plus, ones)) == sw.parts.k);
    bool named = false;
    try {
      pi_H_sigma(sw.g, plus, ones);
    } catch (const std::domain_error& e) {
      named = std::string(e.what()).find("alpha") != std::string::npos;
    }
    rep.add("A1 singular coefficient raises the named-root error", named);
  }
  {
    Sweep sw = make_sweep(2);
    ExtendedSignature s = make_signature(sw.g.rs, {1, 0}, identity_involution(sw.g.rs));
    Vec<Q> bad{Q(1), Q(5)};
    Subspace<Q> lk = intersect_with_k(sw.g, l_H_sigma(sw.g, s, bad));
    rep.add("A2 unit character on the support breaks l cap k = t",
            !(lk == sw.parts.t) && lk.contains(sw.parts.t));
    bool named = false;
    try {
      pi_H_sigma(sw.g, s, bad);
    } catch (const std::domain_error& e) {
      named = std::string(e.what()).find("alpha") != std::string::npos;
    }
    rep.add("A2 singular coefficient raises the named-root error", named);
  }
  return rep;
}

// ---------------------------------------------------------------------------
// 11. 2x2 Hermitian model

CheckReport criterion_11() {
  CheckReport rep;
  PolyPoisson derived = derive_hermitian_Pi();
  PolyPoisson ref;
  ref.nvars = 4;
  ref.names = {"x", "y", "u", "v"};
  ref.table.assign(4, std::vector<Poly>(4, Poly(4)));
  auto set = [&ref](int i, int j, const Poly& p) {
    ref.table[i][j] = p;
    ref.table[j][i] = -p;
  };
  Poly x = Poly::var(4, 0), y = Poly::var(4, 1), u = Poly::var(4, 2), v = Poly::var(4, 3);
  set(0, 1, Poly(4));                   // {x,y} = 0
  set(0, 2, Q(-1, 4) * (y * v));        // {x,u} = -1/4 y v
  set(0, 3, Q(1, 4) * (y * u));         // {x,v} = +1/4 y u
  set(1, 2, Q(1, 4) * (y * v));         // {y,u} = +1/4 y v
  set(1, 3, Q(-1, 4) * (y * u));        // {y,v} = -1/4 y u
  set(2, 3, Q(1, 8) * (y * (y - x)));   // {u,v} = 1/8 y (y - x)
  Q rho(0);
  bool prop = true;
  try {
    rho = solve_table_scale(derived, ref);
  } catch (const std::logic_error&) {
    prop = false;
  }
  rep.add("derived table proportional to the reference table", prop);
  rep.add("solved scale equals 1", prop && rho == 1,
          prop ? "scale = " + to_string(rho) : "tables not proportional");
  bool eq = prop;
  for (int i = 0; i < 4 && eq; ++i)
    for (int j = 0; j < 4 && eq; ++j)
      if (!(derived.table[i][j] == ref.table[i][j])) eq = false;
  rep.add("entrywise equality of all six brackets", eq);
  rep.add("symbolic Jacobi identity", jacobi_certificate(derived));
  rep.add("c1 = x + y is a Casimir", casimir_check(derived, hermitian_c1()));
  rep.add("c2 = xy - u^2 - v^2 is a Casimir", casimir_check(derived, hermitian_c2()));
  PolyPoisson sym = sphere_family_symbolic();
  rep.add("sphere family: symbolic Jacobi", jacobi_certificate(sym));
  rep.add("sphere family: radius is a Casimir", casimir_check(sym, sphere_casimir(4)));
  rep.add("sphere family: Jacobi at sampled parameters",
          jacobi_certificate(sphere_family(Q(0))) &&
              jacobi_certificate(sphere_family(Q(1, 2))) &&
              jacobi_certificate(sphere_family(Q(7, 3))));
  bool half = antipodal_check(Q(1, 2));
  bool others = !antipodal_check(Q(0)) && !antipodal_check(Q(1)) &&
                !antipodal_check(Q(1, 4)) && !antipodal_check(Q(3, 4));
  rep.add("antipodal symmetry exactly at a = 1/2", half && others);
  return rep;
}

// ---------------------------------------------------------------------------
// 12. component groups of signature stabilizers

CheckReport criterion_12() {
  CheckReport rep;
  RootSystem rs = build_root_system('A', 1);
  DiagramInvolution id = identity_involution(rs);
  QuotientGroup zm = Z_sigma(rs, make_signature(rs, {-1}, id));
  QuotientGroup zp = Z_sigma(rs, make_signature(rs, {1}, id));
  rep.add("A1 sigma = -1: order 2", zm.order == 2, "order " + std::to_string(zm.order));
  rep.add("A1 sigma = +1: trivial", zp.order == 1, "order " + std::to_string(zp.order));
  return rep;
}

std::vector<SuiteResult> run_suite() {
  return {
      {1, "Lagrangian axioms and counterexamples", criterion_1()},
      {2, "bivector/graph round trips", criterion_2()},
      {3, "T-map values", criterion_3()},
      {4, "bivector certificates", criterion_4()},
      {5, "normalizers and dimensions", criterion_5()},
      {6, "component inventory", criterion_6()},
      {7, "model points", criterion_7()},
      {8, "one-parameter limits", criterion_8()},
      {9, "complexification dictionary", criterion_9()},
      {10, "torus-twisted bivectors", criterion_10()},
      {11, "Hermitian model and sphere family", criterion_11()},
      {12, "signature component groups", criterion_12()},
  };
}

}  // namespace lagr
