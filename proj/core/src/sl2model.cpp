#include "lagr/sl2model.hpp"

#include <array>
#include <sstream>
#include <stdexcept>

namespace lagr {

Poly Poly::constant(int n, const Q& c) {
  Poly p(n);
  p.add_term(std::vector<int>(n, 0), c);
  return p;
}

Poly Poly::var(int n, int i) {
  Poly p(n);
  std::vector<int> e(n, 0);
  e[i] = 1;
  p.add_term(e, Q(1));
  return p;
}

void Poly::add_term(const std::vector<int>& expo, const Q& c) {
  if (c == 0) return;
  auto it = terms.find(expo);
  if (it == terms.end()) {
    terms.emplace(expo, c);
  } else {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

Poly operator+(const Poly& a, const Poly& b) {
  if (a.nvars != b.nvars) throw std::invalid_argument("poly arity mismatch");
  Poly out = a;
  for (const auto& [e, c] : b.terms) out.add_term(e, c);
  return out;
}

Poly operator-(const Poly& a, const Poly& b) {
  if (a.nvars != b.nvars) throw std::invalid_argument("poly arity mismatch");
  Poly out = a;
  for (const auto& [e, c] : b.terms) out.add_term(e, -c);
  return out;
}

Poly operator-(const Poly& a) {
  Poly out(a.nvars);
  for (const auto& [e, c] : a.terms) out.terms.emplace(e, -c);
  return out;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.nvars != b.nvars) throw std::invalid_argument("poly arity mismatch");
  Poly out(a.nvars);
  for (const auto& [ea, ca] : a.terms)
    for (const auto& [eb, cb] : b.terms) {
      std::vector<int> e(a.nvars);
      for (int i = 0; i < a.nvars; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

Poly operator*(const Q& c, const Poly& a) {
  Poly out(a.nvars);
  if (c == 0) return out;
  for (const auto& [e, coef] : a.terms) out.terms.emplace(e, c * coef);
  return out;
}

Poly derivative(const Poly& p, int var) {
  Poly out(p.nvars);
  for (const auto& [e, c] : p.terms) {
    if (e[var] == 0) continue;
    std::vector<int> e2 = e;
    e2[var] -= 1;
    out.add_term(e2, c * Q(e[var]));
  }
  return out;
}

Poly substitute_signs(const Poly& p, const std::vector<int>& signs) {
  Poly out(p.nvars);
  for (const auto& [e, c] : p.terms) {
    Q coef = c;
    for (int i = 0; i < p.nvars; ++i)
      if (signs[i] < 0 && e[i] % 2 == 1) coef = -coef;
    out.add_term(e, coef);
  }
  return out;
}

Poly substitute_value(const Poly& p, int var, const Q& value) {
  Poly out(p.nvars);
  for (const auto& [e, c] : p.terms) {
    Q coef = c;
    for (int k = 0; k < e[var]; ++k) coef *= value;
    std::vector<int> e2 = e;
    e2[var] = 0;
    out.add_term(e2, coef);
  }
  return out;
}

std::string poly_to_string(const Poly& p, const std::vector<std::string>& names) {
  if (p.terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p.terms) {
    Q abs = c < 0 ? Q(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    bool has_var = false;
    for (int i = 0; i < p.nvars; ++i) has_var = has_var || e[i] > 0;
    if (abs != 1 || !has_var) os << to_string(abs);
    bool printed = abs != 1 || !has_var;
    for (int i = 0; i < p.nvars; ++i) {
      if (e[i] == 0) continue;
      if (printed) os << "*";
      os << names[i];
      if (e[i] > 1) os << "^" << e[i];
      printed = true;
    }
  }
  return os.str();
}

Poly PolyPoisson::bracket(const Poly& f, const Poly& g) const {
  Poly out(nvars);
  for (int i = 0; i < nvars; ++i) {
    Poly df = derivative(f, i);
    if (df.is_zero()) continue;
    for (int j = 0; j < nvars; ++j) {
      if (table[i][j].is_zero()) continue;
      out = out + table[i][j] * df * derivative(g, j);
    }
  }
  return out;
}

namespace {

// complex polynomial: re + i*im
struct CPoly {
  Poly re, im;
};

CPoly cp_add(const CPoly& a, const CPoly& b) { return {a.re + b.re, a.im + b.im}; }

CPoly cp_scale(const Gq& s, const CPoly& p) {
  return {s.re * p.re - s.im * p.im, s.re * p.im + s.im * p.re};
}

using CMat2 = std::array<std::array<Gq, 2>, 2>;
using CPMat2 = std::array<std::array<CPoly, 2>, 2>;

CMat2 conj_transpose(const CMat2& m) {
  return {{{m[0][0].conj(), m[1][0].conj()}, {m[0][1].conj(), m[1][1].conj()}}};
}

CPMat2 act(const CMat2& xi, const CPMat2& X) {
  // xi X + X xi^*
  CMat2 xs = conj_transpose(xi);
  CPMat2 out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      CPoly acc{Poly(4), Poly(4)};
      for (int k = 0; k < 2; ++k) {
        acc = cp_add(acc, cp_scale(xi[i][k], X[k][j]));
        acc = cp_add(acc, cp_scale(xs[k][j], X[i][k]));
      }
      out[i][j] = acc;
    }
  return out;
}

// components of the linear vector field v_xi on coordinates (x, y, u, v)
std::array<Poly, 4> vector_field(const CMat2& xi, const CPMat2& X) {
  CPMat2 M = act(xi, X);
  if (!M[0][0].im.is_zero() || !M[1][1].im.is_zero())
    throw std::logic_error("hermitian action: diagonal is not real");
  if (M[1][0].re != M[0][1].re || !(M[1][0].im + M[0][1].im).is_zero())
    throw std::logic_error("hermitian action: result is not Hermitian");
  return {M[0][0].re, M[1][1].re, M[0][1].re, M[0][1].im};
}

}  // namespace

PolyPoisson derive_hermitian_Pi() {
  const Q h(1, 2);
  Poly x = Poly::var(4, 0), y = Poly::var(4, 1), u = Poly::var(4, 2), v = Poly::var(4, 3);
  Poly zero(4);
  // X = [[x, u+iv], [u-iv, y]]
  CPMat2 X = {{{CPoly{x, zero}, CPoly{u, v}}, {CPoly{u, -v}, CPoly{y, zero}}}};

  const Gq i1 = gq_i;
  CMat2 D = {{{Gq(1), Gq(0)}, {Gq(0), Gq(-1)}}};
  CMat2 iD = {{{i1, Gq(0)}, {Gq(0), Gq(0) - i1}}};
  CMat2 Xa = {{{Gq(0), Gq(Q(1, 2))}, {Gq(Q(-1, 2)), Gq(0)}}};
  CMat2 Ya = {{{Gq(0), Gq(Q(0), Q(1, 2))}, {Gq(Q(0), Q(1, 2)), Gq(0)}}};
  CMat2 Ea = {{{Gq(0), Gq(Q(1, 2))}, {Gq(0), Gq(0)}}};
  CMat2 iEa = {{{Gq(0), Gq(Q(0), Q(1, 2))}, {Gq(0), Gq(0)}}};

  // R written over the integral coroot D = 2 sqrt(2) h:
  // -1/2 ih wedge h = -1/16 iD wedge D
  struct Term {
    CMat2 a, b;
    Q coeff;
  };
  std::vector<Term> terms = {{iD, D, Q(-1, 16)}, {Xa, iEa, Q(1, 2)}, {Ya, Ea, Q(-1, 2)}};

  PolyPoisson out;
  out.nvars = 4;
  out.names = {"x", "y", "u", "v"};
  out.table.assign(4, std::vector<Poly>(4, Poly(4)));
  for (const Term& t : terms) {
    std::array<Poly, 4> va = vector_field(t.a, X);
    std::array<Poly, 4> vb = vector_field(t.b, X);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        out.table[i][j] =
            out.table[i][j] + (h * t.coeff) * (va[i] * vb[j] - vb[i] * va[j]);
  }
  return out;
}

bool jacobi_certificate(const PolyPoisson& p) {
  for (int i = 0; i < p.nvars; ++i)
    for (int j = i + 1; j < p.nvars; ++j)
      for (int k = j + 1; k < p.nvars; ++k) {
        Poly fi = Poly::var(p.nvars, i), fj = Poly::var(p.nvars, j), fk = Poly::var(p.nvars, k);
        Poly cyc = p.bracket(fi, p.bracket(fj, fk)) + p.bracket(fj, p.bracket(fk, fi)) +
                   p.bracket(fk, p.bracket(fi, fj));
        if (!cyc.is_zero()) return false;
      }
  return true;
}

bool casimir_check(const PolyPoisson& p, const Poly& c) {
  for (int i = 0; i < p.nvars; ++i)
    if (!p.bracket(c, Poly::var(p.nvars, i)).is_zero()) return false;
  return true;
}

namespace {

PolyPoisson sphere_table(int nvars, const Poly& factor) {
  // {x,y} = f z, {y,z} = f x, {z,x} = f y
  PolyPoisson out;
  out.nvars = nvars;
  out.names = {"x", "y", "z"};
  if (nvars == 4) out.names.push_back("a");
  out.table.assign(nvars, std::vector<Poly>(nvars, Poly(nvars)));
  Poly x = Poly::var(nvars, 0), y = Poly::var(nvars, 1), z = Poly::var(nvars, 2);
  out.table[0][1] = factor * z;
  out.table[1][0] = -out.table[0][1];
  out.table[1][2] = factor * x;
  out.table[2][1] = -out.table[1][2];
  out.table[2][0] = factor * y;
  out.table[0][2] = -out.table[2][0];
  return out;
}

}  // namespace

PolyPoisson sphere_family(const Q& a) {
  // 1/4 (x + 2a - 1)
  Poly factor = Q(1, 4) * (Poly::var(3, 0) + Poly::constant(3, 2 * a - 1));
  return sphere_table(3, factor);
}

PolyPoisson sphere_family_symbolic() {
  Poly factor =
      Q(1, 4) * (Poly::var(4, 0) + Q(2) * Poly::var(4, 3) + Poly::constant(4, Q(-1)));
  return sphere_table(4, factor);
}

bool antipodal_check(const Q& a) {
  PolyPoisson p = sphere_family(a);
  std::vector<int> signs = {-1, -1, -1};
  for (int i = 0; i < p.nvars; ++i)
    for (int j = 0; j < p.nvars; ++j)
      if (substitute_signs(p.table[i][j], signs) != p.table[i][j]) return false;
  return true;
}

Q solve_table_scale(const PolyPoisson& derived, const PolyPoisson& reference) {
  if (derived.nvars != reference.nvars)
    throw std::logic_error("solve_table_scale: arity mismatch");
  Q rho(0);
  bool found = false;
  for (int i = 0; i < derived.nvars; ++i)
    for (int j = 0; j < derived.nvars; ++j) {
      const Poly& d = derived.table[i][j];
      const Poly& r = reference.table[i][j];
      if (r.is_zero()) {
        if (!d.is_zero()) throw std::logic_error("solve_table_scale: tables not proportional");
        continue;
      }
      // candidate from the first reference term
      auto it = r.terms.begin();
      auto dit = d.terms.find(it->first);
      Q cand = (dit == d.terms.end()) ? Q(0) : Q(dit->second / it->second);
      if (!(d == cand * r)) throw std::logic_error("solve_table_scale: tables not proportional");
      if (d.is_zero()) continue;
      if (!found) {
        rho = cand;
        found = true;
      } else if (cand != rho) {
        throw std::logic_error("solve_table_scale: entries disagree on the scale");
      }
    }
  if (!found) throw std::logic_error("solve_table_scale: nothing to compare");
  return rho;
}

Poly hermitian_c1() { return Poly::var(4, 0) + Poly::var(4, 1); }

Poly hermitian_c2() {
  Poly x = Poly::var(4, 0), y = Poly::var(4, 1), u = Poly::var(4, 2), v = Poly::var(4, 3);
  return x * y - u * u - v * v;
}

Poly sphere_casimir(int nvars) {
  Poly x = Poly::var(nvars, 0), y = Poly::var(nvars, 1), z = Poly::var(nvars, 2);
  return x * x + y * y + z * z;
}

}  // namespace lagr
