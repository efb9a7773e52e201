#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "umbilic/poly.hpp"
#include "umbilic/rational.hpp"

namespace umbilic {

/// Dense univariate polynomial over Q, coefficients stored low to high and trimmed.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs);

  static UPoly constant(const Rational& c);
  static UPoly identity();  // the polynomial t

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(int i) const;
  Rational leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

  Rational evaluate(const Rational& t) const;
  double evaluate(double t) const;
  UPoly derivative() const;
  UPoly monic() const;

  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  UPoly& operator*=(const Rational& s);
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(UPoly a, const Rational& s) { return a *= s; }
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator-(UPoly a) { return a *= Rational(-1); }
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

  /// Reads a polynomial that only involves variable `var`.
  template <std::size_t N>
  static UPoly from_poly(const Poly<N>& p, std::size_t var);

  template <std::size_t N>
  Poly<N> to_poly(std::size_t var) const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Quotient and remainder; b must be nonzero.
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
UPoly operator%(const UPoly& a, const UPoly& b);

/// Exact quotient; throws InternalError if b does not divide a.
UPoly exact_div(const UPoly& a, const UPoly& b);

/// Monic gcd (zero only if both inputs are zero).
UPoly gcd(const UPoly& a, const UPoly& b);

/// Square-free factors (Yun): pairs (g_i, i) with a = c * prod g_i^i, g_i monic square-free coprime.
std::vector<std::pair<UPoly, int>> squarefree_decomposition(const UPoly& a);

template <std::size_t N>
UPoly UPoly::from_poly(const Poly<N>& p, std::size_t var) {
  std::vector<Rational> c(static_cast<std::size_t>(std::max(p.degree_in(var), 0) + 1));
  for (const auto& [e, coeff] : p.terms()) {
    for (std::size_t v = 0; v < N; ++v) {
      if (v != var && e[v] != 0) throw DomainError("polynomial is not univariate");
    }
    c[static_cast<std::size_t>(e[var])] += coeff;
  }
  return UPoly(std::move(c));
}

template <std::size_t N>
Poly<N> UPoly::to_poly(std::size_t var) const {
  Poly<N> p;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    typename Poly<N>::Exponents e{};
    e.at(var) = static_cast<int>(i);
    p.add_term(e, coeffs_[i]);
  }
  return p;
}

/// Reduces every coefficient of p, viewed as a polynomial in `var`, modulo g.
template <std::size_t N>
Poly<N> reduce_mod(const Poly<N>& p, std::size_t var, const UPoly& g) {
  if (g.degree() < 1) throw DomainError("modulus must have positive degree");
  if (p.degree_in(var) < g.degree()) return p;
  std::map<typename Poly<N>::Exponents, std::vector<Rational>> groups;
  for (const auto& [e, c] : p.terms()) {
    auto key = e;
    key[var] = 0;
    auto& vec = groups[key];
    if (vec.size() <= static_cast<std::size_t>(e[var])) vec.resize(static_cast<std::size_t>(e[var]) + 1);
    vec[static_cast<std::size_t>(e[var])] += c;
  }
  Poly<N> out;
  for (auto& [key, vec] : groups) {
    UPoly r = UPoly(std::move(vec)) % g;
    for (int i = 0; i <= r.degree(); ++i) {
      auto e = key;
      e[var] = i;
      out.add_term(e, r.coeff(i));
    }
  }
  return out;
}

}  // namespace umbilic
