// Command-line driver for exact structure checks on Lagrangian subalgebras
// of complex semisimple Lie algebras viewed as real quadratic Lie algebras.
//
// Every task emits a deterministic report (JSON or markdown) listing each
// check it ran.  Exit status: 0 when all checks pass, 1 when a named check
// fails, 2 on a usage/configuration error.

#include "lagr/degen.hpp"
#include "lagr/poisson.hpp"
#include "lagr/sl2model.hpp"
#include "lagr/suite.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cctype>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using nlohmann::ordered_json;
using namespace lagr;

namespace {

struct Options {
  std::string algebra = "A2";
  std::string task;
  std::string sigma;
  std::string diagram = "id";
  std::string chars;
  std::string H;
  std::uint64_t seed = 1;
  std::string out;
  std::string format = "json";
};

// ---------------------------------------------------------------- parsing

int parse_rank(const std::string& s) {
  bool ok = s.size() >= 2 && s[0] == 'A';
  for (size_t i = 1; ok && i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) ok = false;
  if (!ok) throw std::invalid_argument("--algebra must look like A1..A8 (type A only)");
  int rank = std::stoi(s.substr(1));
  if (rank < 1 || rank > 8) throw std::invalid_argument("--algebra rank must be between 1 and 8");
  return rank;
}

std::vector<std::string> split_list(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::vector<int> parse_sigma(const std::string& s, int rank) {
  if (s.empty()) return std::vector<int>(rank, 1);
  std::vector<int> vals;
  for (const std::string& tok : split_list(s, ',')) {
    if (tok == "+" || tok == "+1" || tok == "1")
      vals.push_back(1);
    else if (tok == "-" || tok == "-1")
      vals.push_back(-1);
    else if (tok == "0")
      vals.push_back(0);
    else
      throw std::invalid_argument("--sigma entries must be one of +,-,0 (got '" + tok + "')");
  }
  if (static_cast<int>(vals.size()) != rank)
    throw std::invalid_argument("--sigma needs exactly one entry per simple root");
  return vals;
}

DiagramInvolution parse_diagram(const std::string& s, const RootSystem& rs) {
  if (s.empty() || s == "id") return identity_involution(rs);
  if (s == "flip") return flip_involution(rs);
  throw std::invalid_argument("--diagram must be 'id' or 'flip'");
}

Q parse_rational(const std::string& tok) {
  try {
    return Q(tok);
  } catch (...) {
    throw std::invalid_argument("expected a rational number, got '" + tok + "'");
  }
}

Vec<Q> parse_rational_list(const std::string& s, int rank, const char* flag) {
  Vec<Q> vals;
  for (const std::string& tok : split_list(s, ',')) vals.push_back(parse_rational(tok));
  if (static_cast<int>(vals.size()) != rank)
    throw std::invalid_argument(std::string(flag) + " needs exactly one entry per simple root");
  return vals;
}

Vec<Q> default_chars(int rank) {
  Vec<Q> s;
  for (int i = 0; i < rank; ++i) s.push_back(Q(i + 2));
  return s;
}

void require_rank_at_most(int rank, int cap, const std::string& task) {
  if (rank > cap) {
    std::ostringstream msg;
    msg << "task '" << task << "' supports rank <= " << cap << " (got rank " << rank << ")";
    throw std::invalid_argument(msg.str());
  }
}

// ------------------------------------------------------------- rendering

std::string sigma_str(const std::vector<int>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += (v[i] > 0 ? "+" : (v[i] < 0 ? "-" : "0"));
  }
  return s;
}

std::string diagram_str(const DiagramInvolution& d) {
  if (d.is_identity()) return "id";
  std::string s = "perm(";
  for (size_t i = 0; i < d.perm.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(d.perm[i]);
  }
  return s + ")";
}

template <class T>
std::string row_str(const Mat<T>& m, int i) {
  std::string s = "[";
  for (int j = 0; j < m.cols; ++j) {
    if (j) s += ", ";
    s += to_string(m.at(i, j));
  }
  return s + "]";
}

template <class T>
ordered_json subspace_json(const Subspace<T>& s) {
  ordered_json out;
  out["ambient"] = s.ambient;
  out["dim"] = s.dim();
  ordered_json rows = ordered_json::array();
  for (int i = 0; i < s.basis.rows; ++i) rows.push_back(row_str(s.basis, i));
  out["basis"] = rows;
  return out;
}

ordered_json matrix_json(const Mat<Q>& m) {
  ordered_json rows = ordered_json::array();
  for (int i = 0; i < m.rows; ++i) rows.push_back(row_str(m, i));
  return rows;
}

ordered_json checks_json(const CheckReport& rep) {
  ordered_json arr = ordered_json::array();
  for (const auto& it : rep.items) {
    ordered_json c;
    c["name"] = it.id;
    c["pass"] = it.pass;
    if (!it.detail.empty()) c["detail"] = it.detail;
    arr.push_back(c);
  }
  return arr;
}

std::string scalar_md(const ordered_json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void render_md(std::ostream& os, const std::string& key, const ordered_json& v, int level) {
  if (v.is_object()) {
    os << "\n" << std::string(static_cast<size_t>(level), '#') << " " << key << "\n\n";
    for (const auto& [k, val] : v.items()) render_md(os, k, val, level + 1);
  } else if (v.is_array()) {
    os << "\n" << std::string(static_cast<size_t>(level), '#') << " " << key << "\n\n";
    for (const auto& el : v) {
      if (el.is_object()) {
        os << "- ";
        bool first = true;
        for (const auto& [k, val] : el.items()) {
          if (!first) os << ", ";
          os << k << " = " << scalar_md(val);
          first = false;
        }
        os << "\n";
      } else {
        os << "- " << scalar_md(el) << "\n";
      }
    }
  } else {
    os << "- " << key << ": " << scalar_md(v) << "\n";
  }
}

std::string render_markdown(const ordered_json& report) {
  std::ostringstream os;
  os << "# " << report.at("task").get<std::string>() << " report\n";
  for (const auto& [k, v] : report.items()) {
    if (k == "task" || k == "checks" || k == "pass") continue;
    render_md(os, k, v, 2);
  }
  os << "\n## checks\n\n";
  for (const auto& c : report.at("checks")) {
    os << "- [" << (c.at("pass").get<bool>() ? "x" : " ") << "] "
       << c.at("name").get<std::string>();
    if (c.contains("detail")) os << " — " << c.at("detail").get<std::string>();
    os << "\n";
  }
  os << "\nresult: " << (report.at("pass").get<bool>() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

// ----------------------------------------------------------------- tasks

ordered_json task_roots(const Options& o, CheckReport& rep) {
  int rank = parse_rank(o.algebra);
  RootSystem rs = build_root_system('A', rank);
  ordered_json res;
  res["rank"] = rs.rank;
  ordered_json pos = ordered_json::array();
  for (int i = 0; i < rs.npos; ++i) pos.push_back(rs.roots[static_cast<size_t>(i)]);
  res["positive_roots"] = pos;
  res["cartan_matrix"] = rs.cartan;
  rep.add("positive root count equals rank(rank+1)/2", rs.npos == rank * (rank + 1) / 2);
  bool mirror = true;
  for (int i = 0; i < rs.npos; ++i)
    for (int j = 0; j < rank; ++j)
      if (rs.roots[static_cast<size_t>(i + rs.npos)][static_cast<size_t>(j)] !=
          -rs.roots[static_cast<size_t>(i)][static_cast<size_t>(j)])
        mirror = false;
  rep.add("negative roots mirror the positive roots", mirror);
  if (rank <= 6) {
    WeylGroup w = weyl_enumerate(rs);
    long expected = 1;
    for (int i = 2; i <= rank + 1; ++i) expected *= i;
    res["weyl_order"] = w.elements.size();
    rep.add("weyl group order equals (rank+1)!",
            static_cast<long>(w.elements.size()) == expected);
  }
  return res;
}

ordered_json task_signatures(const Options& o, CheckReport& rep) {
  int rank = parse_rank(o.algebra);
  require_rank_at_most(rank, 4, "signatures");
  RootSystem rs = build_root_system('A', rank);
  DiagramInvolution d = parse_diagram(o.diagram, rs);
  auto sigs = enumerate_extended_signatures(rs, d);
  ordered_json res;
  res["diagram"] = diagram_str(d);
  res["count"] = sigs.size();
  ordered_json list = ordered_json::array();
  for (const auto& s : sigs) {
    SignatureSets sets = signature_sets(rs, s);
    WeylGroup wsig = subgroup_W_sigma(rs, s);
    WeylGroup w0 = subgroup_W0_sigma(rs, s);
    WeylGroup r = subgroup_R_sigma(rs, s);
    QuotientGroup z = Z_sigma(rs, s);
    ordered_json e;
    e["sigma"] = sigma_str(s.values);
    e["support"] = sets.S;
    e["W_sigma_order"] = wsig.elements.size();
    e["W0_order"] = w0.elements.size();
    e["R_order"] = r.elements.size();
    e["Z_order"] = z.order;
    list.push_back(e);
    rep.add("component group has order |W0|/|R| (sigma=" + sigma_str(s.values) + ")",
            z.normal && z.order * static_cast<int>(r.elements.size()) ==
                            static_cast<int>(w0.elements.size()));
  }
  res["signatures"] = list;
  return res;
}

ordered_json task_build(const Options& o, CheckReport& rep) {
  int rank = parse_rank(o.algebra);
  require_rank_at_most(rank, 4, "build");
  SemisimpleRealization g = build_chevalley('A', rank);
  DiagramInvolution d = parse_diagram(o.diagram, g.rs);
  ExtendedSignature s = make_signature(g.rs, parse_sigma(o.sigma, rank), d);
  Subspace<Q> l = build_l_d_sigma(g, s);
  ordered_json res;
  res["sigma"] = sigma_str(s.values);
  res["diagram"] = diagram_str(d);
  res["l"] = subspace_json(l);
  for (const auto& it : lagrangian_axioms(g, l).items) rep.add(it.id, it.pass, it.detail);
  if (!o.chars.empty()) {
    Vec<Q> chars = parse_rational_list(o.chars, rank, "--chars");
    Subspace<Q> lh = l_H_sigma(g, s, chars);
    res["l_twisted"] = subspace_json(lh);
    rep.add("torus-twisted subalgebra is Lagrangian", is_lagrangian(g, lh));
  }
  return res;
}

ordered_json task_check(const Options& o, CheckReport& rep) {
  int rank = parse_rank(o.algebra);
  require_rank_at_most(rank, 3, "check");
  SemisimpleRealization g = build_chevalley('A', rank);
  IwasawaParts parts = iwasawa_parts(g);
  std::vector<std::pair<std::string, Subspace<Q>>> members;
  members.emplace_back("k", parts.k);
  members.emplace_back("t+n", sum(parts.t, parts.n));
  members.emplace_back("a+n", sum(parts.a, parts.n));
  for (const auto& d : full_diagram_involutions(g.rs))
    for (const auto& s : enumerate_extended_signatures(g.rs, d))
      members.emplace_back("l(sigma=" + sigma_str(s.values) + ";" + diagram_str(d) + ")",
                           build_l_d_sigma(g, s));
  ordered_json list = ordered_json::array();
  for (const auto& [name, l] : members) {
    CheckReport ax = lagrangian_axioms(g, l);
    std::string why;
    for (const auto& it : ax.items)
      if (!it.pass && why.empty()) why = it.id;
    rep.add("axioms hold for " + name, ax.all_pass(), why);
    ordered_json e;
    e["name"] = name;
    e["dim"] = l.dim();
    e["pass"] = ax.all_pass();
    list.push_back(e);
  }
  // seeded counterexamples: random half-dimensional subspaces must be rejected
  Rng rng(o.seed);
  int rejected = 0;
  const int trials = 5;
  for (int t = 0; t < trials; ++t) {
    Mat<Q> m(0, g.nre);
    while (true) {
      m = Mat<Q>(0, g.nre);
      for (int i = 0; i < g.nre / 2; ++i) {
        Vec<Q> row;
        for (int j = 0; j < g.nre; ++j) row.push_back(rng.rational(3, 2));
        m.push_row(row);
      }
      if (lagr::rank(m) == g.nre / 2) break;
    }
    if (!lagrangian_axioms(g, canonicalize(m, g.nre)).all_pass()) ++rejected;
  }
  rep.add("random half-dimensional subspaces are rejected", rejected == trials,
          std::to_string(rejected) + "/" + std::to_string(trials));
  ordered_json res;
  res["subspaces_checked"] = members.size();
  res["members"] = list;
  return res;
}

ordered_json task_normalizer(const Options& o, CheckReport& rep) {
  int rank = parse_rank(o.algebra);
  require_rank_at_most(rank, 4, "normalizer");
  SemisimpleRealization g = build_chevalley('A', rank);
  DiagramInvolution d = parse_diagram(o.diagram, g.rs);
  ExtendedSignature s = make_signature(g.rs, parse_sigma(o.sigma, rank), d);
  Subspace<Q> l = build_l_d_sigma(g, s);
  Subspace<Q> n = normalizer_in(g, l, Subspace<Q>::full(g.nre));
  SignatureSets sets = signature_sets(g.rs, s);
  int zdim = rank - static_cast<int>(sets.S.size());
  ordered_json res;
  res["sigma"] = sigma_str(s.values);
  res["diagram"] = diagram_str(d);
  res["dim_l"] = l.dim();
  res["dim_normalizer"] = n.dim();
  res["normalizer"] = subspace_json(n);
  rep.add("normalizer contains the subalgebra", n.contains(l));
  rep.add("real codim of normalizer equals complex codim of the sigma-centre",
          g.nre - n.dim() == g.ncx - zdim);
  return res;
}

ordered_json task_model_point(const Options& o, CheckReport& rep) {
  int rank = parse_rank(o.algebra);
  require_rank_at_most(rank, 3, "model-point");
  SemisimpleRealization g = build_chevalley('A', rank);
  DiagramInvolution d = parse_diagram(o.diagram, g.rs);
  ExtendedSignature s = make_signature(g.rs, parse_sigma(o.sigma, rank), d);
  Subspace<Q> l = o.chars.empty()
                      ? build_l_d_sigma(g, s)
                      : l_H_sigma(g, s, parse_rational_list(o.chars, rank, "--chars"));
  ManinTriple tri = iwasawa_double(g);
  bool fixed = T_map(tri, l) == l;
  bool model = is_model_point(g, l);
  ordered_json res;
  res["sigma"] = sigma_str(s.values);
  res["diagram"] = diagram_str(d);
  if (!o.chars.empty()) res["chars"] = o.chars;
  res["dim_l"] = l.dim();
  res["is_model_point"] = model;
  res["T_fixed"] = fixed;
  res["in_L0"] = in_L0(g, l);
  res["dim_l_cap_k"] = intersect_with_k(g, l).dim();
  rep.add("T-fixedness agrees with the normalizer criterion", fixed == model);
  return res;
}

ordered_json task_components(const Options& o, CheckReport& rep) {
  int rank = parse_rank(o.algebra);
  SemisimpleRealization g = build_chevalley('A', rank);
  auto recs = enumerate_components(g);
  ordered_json res;
  ordered_json list = ordered_json::array();
  int essential = 0;
  for (const auto& r : recs) {
    ordered_json e;
    e["S"] = r.data.S;
    e["epsilon"] = r.data.epsilon;
    e["diagram"] = diagram_str(r.data.d);
    e["dim"] = r.dim;
    e["essential"] = r.essential;
    list.push_back(e);
    if (r.essential) ++essential;
    int z = rank - static_cast<int>(r.data.S.size());
    std::ostringstream name;
    name << "dim = dim k + z(z-3)/2 for S={";
    for (size_t i = 0; i < r.data.S.size(); ++i) name << (i ? "," : "") << r.data.S[i];
    name << "}, eps=" << r.data.epsilon << ", " << diagram_str(r.data.d);
    rep.add(name.str(), 2 * r.dim == 2 * g.ncx + z * (z - 3));
  }
  res["stratum_count"] = recs.size();
  res["essential_count"] = essential;
  res["strata"] = list;
  return res;
}

ordered_json task_drinfeld(const Options& o, CheckReport& rep) {
  int rank = parse_rank(o.algebra);
  require_rank_at_most(rank, 3, "drinfeld");
  SemisimpleRealization g = build_chevalley('A', rank);
  DiagramInvolution d = parse_diagram(o.diagram, g.rs);
  ExtendedSignature s = make_signature(g.rs, parse_sigma(o.sigma, rank), d);
  Vec<Q> chars =
      o.chars.empty() ? default_chars(rank) : parse_rational_list(o.chars, rank, "--chars");
  HomogeneousSpec spec = pi_H_sigma(g, s, chars);
  Subspace<Q> img = drinfeld_l_from_pi(spec);
  Subspace<Q> lh = l_H_sigma(g, s, chars);
  IwasawaParts parts = iwasawa_parts(g);
  ordered_json res;
  res["sigma"] = sigma_str(s.values);
  res["chars"] = [&] {
    std::string cs;
    for (size_t i = 0; i < chars.size(); ++i) cs += (i ? "," : "") + to_string(chars[i]);
    return cs;
  }();
  res["scale"] = to_string(spec.scale);
  res["lambda"] = matrix_json(spec.lambda.lambda);
  res["image"] = subspace_json(img);
  rep.add("drinfeld image equals the torus-twisted Lagrangian", img == lh);
  rep.add("image meets k exactly in the maximal torus", intersect_with_k(g, img) == parts.t);
  return res;
}

ordered_json task_pi(const Options& o, CheckReport& rep) {
  int rank = parse_rank(o.algebra);
  require_rank_at_most(rank, 3, "pi");
  SemisimpleRealization g = build_chevalley('A', rank);
  KBivector kb = pi_K_Lambda(g);
  ordered_json res;
  res["scale"] = to_string(kb.scale);
  res["matrix"] = matrix_json(kb.matrix);
  rep.add("bivector matrix is antisymmetric", kb.matrix == Q(-1) * kb.matrix.transpose());
  rep.add("solved scale is nonzero", !(kb.scale == Q(0)));
  return res;
}

ordered_json task_limit(const Options& o, CheckReport& rep) {
  int rank = parse_rank(o.algebra);
  require_rank_at_most(rank, 3, "limit");
  SemisimpleRealization g = build_chevalley('A', rank);
  DiagramInvolution d = parse_diagram(o.diagram, g.rs);
  ExtendedSignature s = make_signature(g.rs, parse_sigma(o.sigma, rank), d);
  Vec<Q> H = o.H.empty() ? Vec<Q>(static_cast<size_t>(rank), Q(1))
                         : parse_rational_list(o.H, rank, "--H");
  for (const Q& h : H)
    if (h < 0) throw std::invalid_argument("--H entries must be non-negative");
  Subspace<Q> l = build_l_d_sigma(g, s);
  Subspace<Q> lim = limit_subspace(l, grading_from_H(g, H));
  std::vector<int> lo = s.values;
  for (int i = 0; i < rank; ++i)
    if (!(H[static_cast<size_t>(i)] == 0)) lo[static_cast<size_t>(i)] = 0;
  Subspace<Q> llo = build_l_d_sigma(g, make_signature(g.rs, lo, d));
  ManinTriple tri = iwasawa_double(g);
  IwasawaParts parts = iwasawa_parts(g);
  ordered_json res;
  res["sigma"] = sigma_str(s.values);
  res["sigma_limit"] = sigma_str(lo);
  res["diagram"] = diagram_str(d);
  res["limit"] = subspace_json(lim);
  res["T_of_limit_is_t_plus_n"] = (T_map(tri, lim) == sum(parts.t, parts.n));
  rep.add("limit subspace is Lagrangian", is_lagrangian(g, lim));
  rep.add("limit equals the zeroed-signature subalgebra", lim == llo);
  return res;
}

ordered_json task_complexify(const Options& o, CheckReport& rep) {
  int rank = parse_rank(o.algebra);
  require_rank_at_most(rank, 3, "complexify");
  SemisimpleRealization g = build_chevalley('A', rank);
  DiagramInvolution d = parse_diagram(o.diagram, g.rs);
  ExtendedSignature s = make_signature(g.rs, parse_sigma(o.sigma, rank), d);
  Subspace<Q> l = build_l_d_sigma(g, s);
  DoubleAmbient D = double_ambient(g);
  Subspace<Gq> W = complexify_subspace(g, l);
  ordered_json res;
  res["sigma"] = sigma_str(s.values);
  res["diagram"] = diagram_str(d);
  res["dim_l"] = l.dim();
  res["complexification"] = subspace_json(W);
  rep.add("complexification is Lagrangian for the doubled pairing", is_lagrangian_I(D, W));
  rep.add("complexification is stable under the real structure", real_structure_test(D, W));
  rep.add("real points recover the original subalgebra", real_points(g, W) == l);
  bool eta_like = true;
  for (int v : s.values)
    if (v != 0 && v != 1) eta_like = false;
  if (eta_like) {
    std::vector<int> eta(s.values.begin(), s.values.end());
    rep.add("graph-form model matches the complexification", build_g_d_eta(g, d, eta) == W);
  }
  return res;
}

ordered_json task_sl2_demo(const Options&, CheckReport& rep) {
  PolyPoisson pp = derive_hermitian_Pi();
  ordered_json res;
  ordered_json brackets = ordered_json::array();
  for (int i = 0; i < pp.nvars; ++i)
    for (int j = i + 1; j < pp.nvars; ++j)
      brackets.push_back("{" + pp.names[static_cast<size_t>(i)] + "," +
                         pp.names[static_cast<size_t>(j)] +
                         "} = " + poly_to_string(pp.table[static_cast<size_t>(i)][static_cast<size_t>(j)], pp.names));
  res["brackets"] = brackets;
  ordered_json casimirs = ordered_json::array();
  for (const Poly& c : {hermitian_c1(), hermitian_c2()}) {
    ordered_json e;
    e["function"] = poly_to_string(c, pp.names);
    e["is_casimir"] = casimir_check(pp, c);
    casimirs.push_back(e);
  }
  res["casimirs"] = casimirs;
  PolyPoisson half = sphere_family(Q(1, 2));
  ordered_json sphere;
  sphere["bracket_xy_at_a=1/2"] = poly_to_string(half.table[0][1], half.names);
  sphere["antipodal_at_a=1/2"] = antipodal_check(Q(1, 2));
  sphere["antipodal_at_a=0"] = antipodal_check(Q(0));
  res["sphere_family"] = sphere;
  for (const auto& it : criterion_11().items) rep.add(it.id, it.pass, it.detail);
  return res;
}

ordered_json task_suite(const Options&, CheckReport& rep) {
  auto results = run_suite();
  ordered_json res;
  ordered_json list = ordered_json::array();
  for (const auto& r : results) {
    ordered_json e;
    e["criterion"] = r.number;
    e["title"] = r.title;
    e["checks"] = r.report.items.size();
    e["pass"] = r.report.all_pass();
    ordered_json fails = ordered_json::array();
    for (const auto& it : r.report.items)
      if (!it.pass) fails.push_back(it.id);
    if (!fails.empty()) e["failures"] = fails;
    list.push_back(e);
    std::ostringstream name;
    name << "criterion " << (r.number < 10 ? "0" : "") << r.number << ": " << r.title;
    rep.add(name.str(), r.report.all_pass());
  }
  res["criteria"] = list;
  return res;
}

// -------------------------------------------------------------- dispatch

using Handler = ordered_json (*)(const Options&, CheckReport&);

struct TaskDef {
  const char* name;
  const char* help;
  Handler fn;
};

const TaskDef kTasks[] = {
    {"roots", "root system data and counting checks", task_roots},
    {"signatures", "extended signatures and their Weyl-theoretic invariants", task_signatures},
    {"build", "build the Lagrangian subalgebra of a signature", task_build},
    {"check", "Lagrangian axiom sweep plus random counterexamples", task_check},
    {"normalizer", "normalizer of a signature subalgebra and its codimension", task_normalizer},
    {"model-point", "model-point and T-fixedness tests for a subalgebra", task_model_point},
    {"components", "component inventory with dimensions and essential flags", task_components},
    {"drinfeld", "torus-twisted bivector and its Drinfeld image", task_drinfeld},
    {"pi", "invariant bivector on the compact form", task_pi},
    {"limit", "one-parameter degeneration of a signature subalgebra", task_limit},
    {"complexify", "complexification dictionary checks for a subalgebra", task_complexify},
    {"sl2-demo", "2x2 Hermitian Poisson model and the sphere family", task_sl2_demo},
    {"suite", "run the full acceptance battery", task_suite},
};

int run_task(const Options& o) {
  Handler fn = nullptr;
  for (const auto& t : kTasks)
    if (o.task == t.name) fn = t.fn;
  if (!fn) throw std::invalid_argument("unknown task '" + o.task + "'");

  ordered_json report;
  report["task"] = o.task;
  report["algebra"] = o.algebra;
  ordered_json params;
  if (!o.sigma.empty()) params["sigma"] = o.sigma;
  if (!o.diagram.empty() && o.diagram != "id") params["diagram"] = o.diagram;
  if (!o.chars.empty()) params["chars"] = o.chars;
  if (!o.H.empty()) params["H"] = o.H;
  params["seed"] = o.seed;
  report["parameters"] = params;

  CheckReport rep;
  report["results"] = fn(o, rep);
  report["checks"] = checks_json(rep);
  report["pass"] = rep.all_pass();

  std::string text =
      o.format == "md" ? render_markdown(report) : report.dump(2) + "\n";
  if (o.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(o.out, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open output file '" + o.out + "'");
    f << text;
  }
  if (!rep.all_pass()) {
    for (const auto& it : rep.items)
      if (!it.pass) {
        std::cerr << "FAILED: " << it.id << "\n";
        break;
      }
    return 1;
  }
  return 0;
}

void apply_config_file(const std::string& path, const CLI::App& app, const std::string& sub_task,
                       Options& o) {
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot open config file '" + path + "'");
  ordered_json cfg;
  try {
    f >> cfg;
  } catch (const std::exception& e) {
    throw std::invalid_argument(std::string("bad config file: ") + e.what());
  }
  if (!cfg.is_object()) throw std::invalid_argument("config file must hold a JSON object");
  auto str_of = [](const ordered_json& v) -> std::string {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
  };
  for (const auto& [key, val] : cfg.items()) {
    if (key == "task") {
      if (sub_task.empty() && app.count("--task") == 0) o.task = str_of(val);
    } else if (key == "algebra") {
      if (app.count("--algebra") == 0) o.algebra = str_of(val);
    } else if (key == "sigma") {
      if (app.count("--sigma") == 0) o.sigma = str_of(val);
    } else if (key == "diagram") {
      if (app.count("--diagram") == 0) o.diagram = str_of(val);
    } else if (key == "chars") {
      if (app.count("--chars") == 0) o.chars = str_of(val);
    } else if (key == "H") {
      if (app.count("--H") == 0) o.H = str_of(val);
    } else if (key == "seed") {
      if (app.count("--seed") == 0) o.seed = val.is_number() ? val.get<std::uint64_t>()
                                                             : std::stoull(str_of(val));
    } else if (key == "out") {
      if (app.count("--out") == 0) o.out = str_of(val);
    } else if (key == "format") {
      if (app.count("--format") == 0) o.format = str_of(val);
    } else {
      throw std::invalid_argument("unknown config key '" + key + "'");
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  std::string config_path;
  std::string sub_task;

  CLI::App app{"exact checker for Lagrangian subalgebras of doubled semisimple Lie algebras"};
  app.fallthrough();
  app.add_option("--algebra", o.algebra, "algebra label, A1..A8 (type A)")
      ->capture_default_str();
  app.add_option("--task", o.task, "task name (alternative to the subcommand form)");
  app.add_option("--sigma", o.sigma, "signature values per simple root, e.g. +,-,0");
  app.add_option("--diagram", o.diagram, "diagram involution: id or flip")
      ->capture_default_str();
  app.add_option("--chars", o.chars, "positive rational character values, e.g. 2,3");
  app.add_option("--H", o.H, "grading element by simple-root values, e.g. 1,1");
  app.add_option("--seed", o.seed, "seed for the randomized rejection checks")
      ->capture_default_str();
  app.add_option("--out", o.out, "write the report to this file instead of stdout");
  app.add_option("--format", o.format, "report format")
      ->check(CLI::IsMember({"json", "md"}))
      ->capture_default_str();
  app.add_option("--config", config_path, "JSON file with the same keys as the flags");

  for (const auto& t : kTasks) {
    CLI::App* sub = app.add_subcommand(t.name, t.help);
    sub->fallthrough();
    sub->callback([&sub_task, name = std::string(t.name)] { sub_task = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    if (!config_path.empty()) apply_config_file(config_path, app, sub_task, o);
    if (!sub_task.empty()) o.task = sub_task;
    if (o.task.empty())
      throw std::invalid_argument("no task given; pass a subcommand or --task NAME");
    return run_task(o);
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
