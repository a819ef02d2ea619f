#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lagr {

// Exact rational scalar. mpq keeps gcd(num,den)=1 and den>0 invariantly.
using Q = boost::multiprecision::mpq_rational;

inline Q parse_q(const std::string& s) {
  try {
    return Q(s);
  } catch (const std::exception&) {
    throw std::invalid_argument("not a rational: '" + s + "'");
  }
}

inline std::string to_string(const Q& q) { return q.str(); }

// Gaussian rational a + b*i.
struct Gq {
  Q re{0}, im{0};

  Gq() = default;
  Gq(Q r) : re(std::move(r)) {}
  Gq(int r) : re(r) {}
  Gq(Q r, Q i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return re == 0 && im == 0; }
  Gq conj() const { return {re, -im}; }

  friend Gq operator+(const Gq& a, const Gq& b) { return {a.re + b.re, a.im + b.im}; }
  friend Gq operator-(const Gq& a, const Gq& b) { return {a.re - b.re, a.im - b.im}; }
  friend Gq operator-(const Gq& a) { return {-a.re, -a.im}; }
  friend Gq operator*(const Gq& a, const Gq& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Gq operator/(const Gq& a, const Gq& b) {
    Q n = b.re * b.re + b.im * b.im;
    if (n == 0) throw std::domain_error("division by zero");
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
  }
  Gq& operator+=(const Gq& b) { return *this = *this + b; }
  Gq& operator-=(const Gq& b) { return *this = *this - b; }
  Gq& operator*=(const Gq& b) { return *this = *this * b; }
  Gq& operator/=(const Gq& b) { return *this = *this / b; }
  friend bool operator==(const Gq& a, const Gq& b) { return a.re == b.re && a.im == b.im; }
  friend bool operator!=(const Gq& a, const Gq& b) { return !(a == b); }
};

inline const Gq gq_i{Q(0), Q(1)};

inline std::string to_string(const Gq& z) {
  if (z.im == 0) return z.re.str();
  if (z.re == 0) return z.im.str() + "i";
  std::string im = z.im.str();
  if (!im.empty() && im[0] == '-') return z.re.str() + im + "i";
  return z.re.str() + "+" + im + "i";
}

// scalar_traits unifies Q and Gq for the templated linear algebra.
template <class T>
struct scalar_traits;

template <>
struct scalar_traits<Q> {
  static bool is_zero(const Q& x) { return x == 0; }
  static Q conj(const Q& x) { return x; }
};

template <>
struct scalar_traits<Gq> {
  static bool is_zero(const Gq& x) { return x.is_zero(); }
  static Gq conj(const Gq& x) { return x.conj(); }
};

// Deterministic 64-bit generator (splitmix64); used for all seeded
// pseudo-random rational data so every run is reproducible.
struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  // uniform in [0, n)
  std::uint64_t below(std::uint64_t n) { return next() % n; }
  // small rational with |num| <= m, 1 <= den <= d
  Q rational(int m = 9, int d = 4) {
    long num = static_cast<long>(below(2 * m + 1)) - m;
    long den = static_cast<long>(below(d)) + 1;
    return Q(num, den);
  }
};

}  // namespace lagr
