#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace reflex {

// All geometry in this library is exact: arbitrary-precision integers for
// lattice data, rationals only where intersections/interpolation demand them.
using Int = mpz_class;
using Rat = mpq_class;

// A lattice point (or integer vector); its dimension is its length.
using Vec = std::vector<Int>;

inline Rat make_rat(Int num, Int den) {
  Rat q(std::move(num), std::move(den));
  q.canonicalize();
  return q;
}

inline Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Int ceil_div(const Int& a, const Int& b) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Exact division; quotient must be integral.
inline Int exact_div(const Int& a, const Int& b) {
  Int q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Int floor_rat(const Rat& q) { return floor_div(q.get_num(), q.get_den()); }
inline Int ceil_rat(const Rat& q) { return ceil_div(q.get_num(), q.get_den()); }

inline bool is_integral(const Rat& q) { return q.get_den() == 1; }

inline Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

// gcd of all entries (nonnegative; 0 for the zero vector).
inline Int gcd_all(const Vec& v) {
  Int g = 0;
  for (const Int& x : v) g = gcd(g, x);
  return g;
}

inline Int dot(const Vec& a, const Vec& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Int binomial(const Int& n, unsigned long k) {
  Int b;
  mpz_bin_ui(b.get_mpz_t(), n.get_mpz_t(), k);
  return b;
}

inline std::string to_string(const Int& x) { return x.get_str(); }
inline std::string to_string(const Rat& q) { return q.get_str(); }

std::string to_string(const Vec& v);  // "(a, b, c)"

}  // namespace reflex
