#include "umbilic/resultant.hpp"

#include <cmath>

#include "umbilic/errors.hpp"
#include "umbilic/modular.hpp"
#include "umbilic/zpoly.hpp"

namespace umbilic {

namespace {

using modular::ModPoly;
using modular::PrimeField;
using modular::u64;

// Coefficients of f in the eliminated variable, highest first, each an integer
// polynomial in the kept variable (low to high).
struct IntegerRows {
  std::vector<ZPoly> coeffs;  // coeffs[0] = leading coefficient
  Integer denominator;        // f = (sum coeffs) / denominator
  int kept_degree = 0;
};

IntegerRows split(const BiPoly& f, std::size_t eliminate) {
  const std::size_t kept = 1 - eliminate;
  IntegerRows out;
  out.denominator = 1;
  for (const auto& [e, c] : f.terms()) {
    mpz_lcm(out.denominator.get_mpz_t(), out.denominator.get_mpz_t(), c.get_den_mpz_t());
  }
  const int m = f.degree_in(eliminate);
  out.kept_degree = std::max(f.degree_in(kept), 0);
  out.coeffs.assign(static_cast<std::size_t>(m + 1), ZPoly(static_cast<std::size_t>(out.kept_degree + 1)));
  for (const auto& [e, c] : f.terms()) {
    const Integer z = c.get_num() * (out.denominator / c.get_den());
    out.coeffs[static_cast<std::size_t>(m - e[eliminate])][static_cast<std::size_t>(e[kept])] = z;
  }
  return out;
}

double log2_abs(const Integer& z) {
  if (z == 0) return -1e300;
  long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, z.get_mpz_t());
  return std::log2(std::fabs(mant)) + static_cast<double>(exp);
}

double log2_norm1(const ZPoly& p) {
  Integer s(0);
  for (const auto& c : p) s += abs(c);
  return log2_abs(s);
}

u64 determinant(const PrimeField& field, std::vector<u64> a, std::size_t size) {
  u64 det = 1;
  for (std::size_t col = 0; col < size; ++col) {
    std::size_t pivot = col;
    while (pivot < size && a[pivot * size + col] == 0) ++pivot;
    if (pivot == size) return 0;
    if (pivot != col) {
      for (std::size_t j = 0; j < size; ++j) std::swap(a[pivot * size + j], a[col * size + j]);
      det = field.sub(0, det);
    }
    const u64 pv = a[col * size + col];
    det = field.mul(det, pv);
    const u64 inv = field.inv(pv);
    for (std::size_t r = col + 1; r < size; ++r) {
      const u64 factor = field.mul(a[r * size + col], inv);
      if (factor == 0) continue;
      for (std::size_t j = col; j < size; ++j) {
        a[r * size + j] = field.sub(a[r * size + j], field.mul(factor, a[col * size + j]));
      }
    }
  }
  return det;
}

// Newton interpolation through (0, y0), (1, y1), ..., returning coefficients low to high.
ModPoly interpolate(const PrimeField& field, const std::vector<u64>& ys) {
  const std::size_t count = ys.size();
  std::vector<u64> dd = ys;
  for (std::size_t level = 1; level < count; ++level) {
    const u64 inv = field.inv(level);
    for (std::size_t i = count - 1; i >= level; --i) {
      dd[i] = field.mul(field.sub(dd[i], dd[i - 1]), inv);
    }
  }
  ModPoly poly(count, 0);
  // Horner on the Newton basis: p = dd0 + (x - 0)(dd1 + (x - 1)(dd2 + ...)).
  for (std::size_t k = count; k-- > 0;) {
    // poly <- poly * (x - k) + dd[k]
    ModPoly next(count, 0);
    const u64 node = k;
    for (std::size_t i = 0; i < count; ++i) {
      if (poly[i] == 0) continue;
      if (i + 1 < count) next[i + 1] = field.add(next[i + 1], poly[i]);
      next[i] = field.sub(next[i], field.mul(poly[i], node));
    }
    next[0] = field.add(next[0], dd[k]);
    poly = std::move(next);
  }
  return poly;
}

ZPoly integer_resultant(const IntegerRows& f, const IntegerRows& g) {
  const std::size_t m = f.coeffs.size() - 1;
  const std::size_t n = g.coeffs.size() - 1;
  const std::size_t size = m + n;
  // Degree bound of the determinant in the kept variable.
  const std::size_t bound_deg = n * static_cast<std::size_t>(f.kept_degree) +
                                m * static_cast<std::size_t>(g.kept_degree);
  // Coefficient bound: |coef| <= max over |z| = 1 of |det| <= prod of row 2-norms of 1-norms.
  double bits = 0.0;
  {
    double rf = 0.0;
    for (const auto& c : f.coeffs) rf += std::exp2(2.0 * std::min(log2_norm1(c), 900.0));
    double rg = 0.0;
    for (const auto& c : g.coeffs) rg += std::exp2(2.0 * std::min(log2_norm1(c), 900.0));
    bits = 0.5 * (static_cast<double>(n) * std::log2(rf) + static_cast<double>(m) * std::log2(rg));
  }
  const double needed_bits = std::max(bits, 0.0) + 4.0;

  modular::CrtAccumulator acc(bound_deg + 1);
  for (std::size_t idx = 0;
       static_cast<double>(mpz_sizeinbase(acc.modulus().get_mpz_t(), 2)) < needed_bits; ++idx) {
    const u64 p = modular::large_primes(idx + 1)[idx];
    const PrimeField field{p};
    std::vector<ModPoly> fr(f.coeffs.size());
    std::vector<ModPoly> gr(g.coeffs.size());
    for (std::size_t i = 0; i < fr.size(); ++i) {
      for (const auto& c : f.coeffs[i]) fr[i].push_back(field.reduce(c));
    }
    for (std::size_t i = 0; i < gr.size(); ++i) {
      for (const auto& c : g.coeffs[i]) gr[i].push_back(field.reduce(c));
    }
    std::vector<u64> values(bound_deg + 1);
    std::vector<u64> matrix(size * size);
    for (std::size_t x = 0; x <= bound_deg; ++x) {
      std::fill(matrix.begin(), matrix.end(), 0);
      for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t i = 0; i <= m; ++i) matrix[r * size + r + i] = modular::eval(field, fr[i], x);
      }
      for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t i = 0; i <= n; ++i) matrix[(n + r) * size + r + i] = modular::eval(field, gr[i], x);
      }
      values[x] = determinant(field, matrix, size);
    }
    acc.add(p, interpolate(field, values));
  }
  ZPoly out = acc.symmetric();
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

}  // namespace

UPoly resultant_univariate(const BiPoly& f, const BiPoly& g, std::size_t eliminate) {
  if (eliminate > 1) throw DomainError("eliminated variable must be x or y");
  if (f.is_zero() || g.is_zero()) throw DomainError("resultant of a zero polynomial");
  const int m = f.degree_in(eliminate);
  const int n = g.degree_in(eliminate);
  if (m == 0 && n == 0) throw DomainError("both polynomials are constant in the eliminated variable");
  const std::size_t kept = 1 - eliminate;
  if (m == 0) return UPoly::from_poly(f.pow(static_cast<unsigned>(n)), kept);
  if (n == 0) return UPoly::from_poly(g.pow(static_cast<unsigned>(m)), kept);
  const IntegerRows fi = split(f, eliminate);
  const IntegerRows gi = split(g, eliminate);
  const ZPoly r = integer_resultant(fi, gi);
  // f = F / df contributes df^{-n}; g = G / dg contributes dg^{-m}.
  Integer scale;
  Integer part;
  mpz_pow_ui(scale.get_mpz_t(), fi.denominator.get_mpz_t(), static_cast<unsigned long>(n));
  mpz_pow_ui(part.get_mpz_t(), gi.denominator.get_mpz_t(), static_cast<unsigned long>(m));
  scale *= part;
  std::vector<Rational> c(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) {
    c[i] = Rational(r[i], scale);
    c[i].canonicalize();
  }
  return UPoly(std::move(c));
}

BiPoly resultant(const BiPoly& f, const BiPoly& g, std::size_t eliminate) {
  return resultant_univariate(f, g, eliminate).to_poly<2>(1 - eliminate);
}

}  // namespace umbilic
