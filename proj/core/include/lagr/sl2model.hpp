#pragma once

#include "lagr/scalar.hpp"

#include <map>
#include <string>
#include <vector>

namespace lagr {

// sparse exact multivariate polynomial: exponent vector -> coefficient
struct Poly {
  int nvars{0};
  std::map<std::vector<int>, Q> terms;

  Poly() = default;
  explicit Poly(int n) : nvars(n) {}

  static Poly constant(int n, const Q& c);
  static Poly var(int n, int i);

  bool is_zero() const { return terms.empty(); }
  void add_term(const std::vector<int>& expo, const Q& c);

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Q& c, const Poly& a);
  friend bool operator==(const Poly& a, const Poly& b) {
    return a.nvars == b.nvars && a.terms == b.terms;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
};

Poly derivative(const Poly& p, int var);
// x_i -> signs[i] * x_i
Poly substitute_signs(const Poly& p, const std::vector<int>& signs);
// fix one variable to a rational value (exponent folded into the coefficient)
Poly substitute_value(const Poly& p, int var, const Q& value);
std::string poly_to_string(const Poly& p, const std::vector<std::string>& names);

// Poisson structure with polynomial coefficients: table[i][j] = {x_i, x_j}
struct PolyPoisson {
  int nvars{0};
  std::vector<std::string> names;
  std::vector<std::vector<Poly>> table;

  Poly bracket(const Poly& f, const Poly& g) const;
};

// quadratic Poisson structure on 2x2 Hermitian coordinates {x, y, u, v},
// derived term by term from the R-matrix via the infinitesimal action
// v_xi(X) = xi X + X xi^*
PolyPoisson derive_hermitian_Pi();

// sum over cyclic {f,{g,h}} vanishes for all coordinate triples
bool jacobi_certificate(const PolyPoisson& p);
// {c, x_i} = 0 for every coordinate
bool casimir_check(const PolyPoisson& p, const Poly& c);

// rotation-invariant family on {x, y, z}: {x,y} = 1/4 (x+2a-1) z cyclically
PolyPoisson sphere_family(const Q& a);
// same family with the parameter as a fourth, Poisson-central variable
PolyPoisson sphere_family_symbolic();
// the sign flip (x,y,z) -> (-x,-y,-z) preserves the bracket table
bool antipodal_check(const Q& a);

// rho with derived = rho * reference for every entry; throws std::logic_error
// when the tables are not proportional
Q solve_table_scale(const PolyPoisson& derived, const PolyPoisson& reference);

// x + y  /  xy - u^2 - v^2  /  x^2 + y^2 + z^2 in the ambient variable count
Poly hermitian_c1();
Poly hermitian_c2();
Poly sphere_casimir(int nvars);

}  // namespace lagr
