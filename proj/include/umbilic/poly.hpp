#pragma once

// Sparse multivariate polynomials with exact rational coefficients.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <map>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "umbilic/errors.hpp"
#include "umbilic/rational.hpp"

namespace umbilic {

/// Degree reported for the zero polynomial; stands in for -infinity.
inline constexpr int kZeroDegree = -1;

template <std::size_t N>
class Poly {
 public:
  using Exponents = std::array<int, N>;
  using Terms = std::map<Exponents, Rational>;

  Poly() = default;

  static Poly constant(const Rational& c) {
    Poly p;
    if (c != 0) p.terms_.emplace(Exponents{}, c);
    return p;
  }

  static Poly variable(std::size_t var) {
    Exponents e{};
    e.at(var) = 1;
    return monomial(e, Rational(1));
  }

  static Poly monomial(const Exponents& e, const Rational& c) {
    Poly p;
    if (c != 0) p.terms_.emplace(e, c);
    return p;
  }

  /// Builds from (exponents, coefficient) pairs; duplicates are summed.
  static Poly from_terms(std::initializer_list<std::pair<Exponents, Rational>> list) {
    Poly p;
    for (const auto& [e, c] : list) p.add_term(e, c);
    return p;
  }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponents{});
  }

  Rational coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(const Exponents& e, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  static int total(const Exponents& e) {
    int s = 0;
    for (int k : e) s += k;
    return s;
  }

  int degree() const {
    int d = kZeroDegree;
    for (const auto& [e, c] : terms_) d = std::max(d, total(e));
    return d;
  }

  int degree_in(std::size_t var) const {
    int d = kZeroDegree;
    for (const auto& [e, c] : terms_) d = std::max(d, e.at(var));
    return d;
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    const int d = total(terms_.begin()->first);
    return std::all_of(terms_.begin(), terms_.end(),
                       [d](const auto& t) { return total(t.first) == d; });
  }

  Poly homogeneous_part(int d) const {
    Poly p;
    for (const auto& [e, c] : terms_) {
      if (total(e) == d) p.terms_.emplace(e, c);
    }
    return p;
  }

  /// Components f_0..f_n with f = sum f_i; empty for the zero polynomial.
  std::vector<Poly> homogeneous_components() const {
    std::vector<Poly> parts(static_cast<std::size_t>(degree() + 1));
    for (const auto& [e, c] : terms_) parts[static_cast<std::size_t>(total(e))].terms_.emplace(e, c);
    return parts;
  }

  Poly partial(std::size_t var, int order = 1) const {
    Poly p;
    for (const auto& [e, c] : terms_) {
      const int k = e.at(var);
      if (k < order) continue;
      Rational factor(1);
      for (int i = 0; i < order; ++i) factor *= k - i;
      Exponents ne = e;
      ne[var] -= order;
      p.terms_.emplace(ne, c * factor);
    }
    return p;
  }

  Rational evaluate(std::span<const Rational, N> point) const {
    Rational sum(0);
    for (const auto& [e, c] : terms_) {
      Rational m = c;
      for (std::size_t v = 0; v < N; ++v) {
        if (e[v] != 0) m *= rpow(point[v], static_cast<unsigned>(e[v]));
      }
      sum += m;
    }
    return sum;
  }

  Rational evaluate(const std::array<Rational, N>& point) const {
    return evaluate(std::span<const Rational, N>(point));
  }

  /// Substitutes a constant for one variable; the variable's exponent becomes 0.
  Poly restrict(std::size_t var, const Rational& value) const {
    Poly p;
    for (const auto& [e, c] : terms_) {
      Exponents ne = e;
      ne[var] = 0;
      p.add_term(ne, c * rpow(value, static_cast<unsigned>(e[var])));
    }
    return p;
  }

  /// Exact division by var^times; returns false (and leaves out untouched) when not divisible.
  bool divide_by_variable(std::size_t var, int times, Poly& out) const {
    Poly q;
    for (const auto& [e, c] : terms_) {
      if (e[var] < times) return false;
      Exponents ne = e;
      ne[var] -= times;
      q.terms_.emplace(ne, c);
    }
    out = std::move(q);
    return true;
  }

  /// Drops every term whose total degree in the selected variables exceeds max_degree.
  Poly truncated(const std::array<bool, N>& vars, int max_degree) const {
    Poly p;
    for (const auto& [e, c] : terms_) {
      int d = 0;
      for (std::size_t v = 0; v < N; ++v) {
        if (vars[v]) d += e[v];
      }
      if (d <= max_degree) p.terms_.emplace(e, c);
    }
    return p;
  }

  Poly& operator+=(const Poly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  Poly& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
    } else {
      for (auto& [e, c] : terms_) c *= s;
    }
    return *this;
  }
  Poly& operator*=(const Poly& o) {
    *this = *this * o;
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
  friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
  friend Poly operator-(Poly a) {
    for (auto& [e, c] : a.terms_) c = -c;
    return a;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly p;
    Rational prod;
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        Exponents e;
        for (std::size_t v = 0; v < N; ++v) e[v] = ea[v] + eb[v];
        prod = ca * cb;
        p.add_term(e, prod);
      }
    }
    return p;
  }

  /// Product keeping only terms of total degree <= max_degree in the selected variables.
  static Poly multiply_truncated(const Poly& a, const Poly& b, const std::array<bool, N>& vars,
                                 int max_degree) {
    auto weight = [&vars](const Exponents& e) {
      int d = 0;
      for (std::size_t v = 0; v < N; ++v) {
        if (vars[v]) d += e[v];
      }
      return d;
    };
    Poly p;
    Rational prod;
    for (const auto& [ea, ca] : a.terms_) {
      const int wa = weight(ea);
      if (wa > max_degree) continue;
      for (const auto& [eb, cb] : b.terms_) {
        if (wa + weight(eb) > max_degree) continue;
        Exponents e;
        for (std::size_t v = 0; v < N; ++v) e[v] = ea[v] + eb[v];
        prod = ca * cb;
        p.add_term(e, prod);
      }
    }
    return p;
  }

  Poly pow(unsigned k) const {
    Poly result = constant(Rational(1));
    Poly base = *this;
    while (k != 0) {
      if ((k & 1U) != 0) result = result * base;
      k >>= 1U;
      if (k != 0) base = base * base;
    }
    return result;
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  /// Renders in the input grammar, e.g. "x^3 - 3*x*y^2 + 1/2".
  std::string to_string(const std::array<std::string_view, N>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Highest total degree first, then lexicographically descending exponents.
    std::vector<std::pair<Exponents, Rational>> ordered(terms_.begin(), terms_.end());
    std::stable_sort(ordered.begin(), ordered.end(), [](const auto& l, const auto& r) {
      const int dl = total(l.first);
      const int dr = total(r.first);
      if (dl != dr) return dl > dr;
      return l.first > r.first;
    });
    for (const auto& [e, c] : ordered) {
      Rational mag = abs(c);
      if (first) {
        if (c < 0) os << "-";
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      first = false;
      const bool unit_coeff = (mag == 1);
      bool wrote = false;
      if (!unit_coeff || total(e) == 0) {
        os << mag.get_str();
        wrote = true;
      }
      for (std::size_t v = 0; v < N; ++v) {
        if (e[v] == 0) continue;
        if (wrote) os << "*";
        os << names[v];
        if (e[v] > 1) os << "^" << e[v];
        wrote = true;
      }
    }
    return os.str();
  }

 private:
  Terms terms_;
};

using BiPoly = Poly<2>;
using TriPoly = Poly<3>;

/// Variable indices for the two carriers.
inline constexpr std::size_t kX = 0;
inline constexpr std::size_t kY = 1;
inline constexpr std::size_t kU = 0;
inline constexpr std::size_t kV = 1;
inline constexpr std::size_t kW = 2;  // omega

inline constexpr std::array<std::string_view, 2> kXY{"x", "y"};
inline constexpr std::array<std::string_view, 3> kUVW{"u", "v", "w"};

inline std::string to_string(const BiPoly& p) { return p.to_string(kXY); }
inline std::string to_string(const TriPoly& p) { return p.to_string(kUVW); }

/// Substitutes polynomial expressions for every variable of p.
template <std::size_t N, std::size_t M>
Poly<M> compose(const Poly<N>& p, const std::array<Poly<M>, N>& subs) {
  // Cache powers per variable.
  std::array<std::vector<Poly<M>>, N> powers;
  for (std::size_t v = 0; v < N; ++v) {
    const int d = std::max(p.degree_in(v), 0);
    powers[v].reserve(static_cast<std::size_t>(d + 1));
    powers[v].push_back(Poly<M>::constant(Rational(1)));
    for (int k = 1; k <= d; ++k) powers[v].push_back(powers[v].back() * subs[v]);
  }
  Poly<M> out;
  for (const auto& [e, c] : p.terms()) {
    Poly<M> term = Poly<M>::constant(c);
    for (std::size_t v = 0; v < N; ++v) {
      if (e[v] != 0) term = term * powers[v][static_cast<std::size_t>(e[v])];
    }
    out += term;
  }
  return out;
}

/// Lifts a polynomial into more variables: variable i of p becomes variable map[i].
template <std::size_t N, std::size_t M>
Poly<M> embed(const Poly<N>& p, const std::array<std::size_t, N>& map) {
  Poly<M> out;
  for (const auto& [e, c] : p.terms()) {
    typename Poly<M>::Exponents ne{};
    for (std::size_t v = 0; v < N; ++v) ne.at(map[v]) += e[v];
    out.add_term(ne, c);
  }
  return out;
}

/// Homogeneous decomposition f = sum f_i; index i holds the degree-i part.
inline std::vector<BiPoly> homogeneous_decompose(const BiPoly& f) {
  return f.homogeneous_components();
}

/// Largest |coefficient| as a double.
template <std::size_t N>
double max_coefficient_magnitude(const Poly<N>& p) {
  double m = 0.0;
  for (const auto& [e, c] : p.terms()) m = std::max(m, std::fabs(to_double(c)));
  return m;
}

/// Floating evaluator compiled from an exact polynomial.
template <std::size_t N>
class CompiledPoly {
 public:
  CompiledPoly() = default;
  explicit CompiledPoly(const Poly<N>& p) {
    max_deg_.fill(0);
    terms_.reserve(p.size());
    for (const auto& [e, c] : p.terms()) {
      terms_.push_back({e, to_double(c)});
      for (std::size_t v = 0; v < N; ++v) max_deg_[v] = std::max(max_deg_[v], e[v]);
    }
    for (int d : max_deg_) {
      if (d >= kMaxDegree) throw DomainError("polynomial degree too large for floating evaluation");
    }
  }

  double operator()(const std::array<double, N>& pt) const { return eval(pt, nullptr); }

  /// Value plus the rounding scale sum |c| |m(pt)|.
  double eval(const std::array<double, N>& pt, double* scale) const {
    std::array<std::array<double, kMaxDegree>, N> pw;
    for (std::size_t v = 0; v < N; ++v) {
      pw[v][0] = 1.0;
      for (int k = 1; k <= max_deg_[v]; ++k) pw[v][static_cast<std::size_t>(k)] = pw[v][static_cast<std::size_t>(k - 1)] * pt[v];
    }
    double sum = 0.0;
    double mag = 0.0;
    for (const auto& t : terms_) {
      double m = t.coeff;
      for (std::size_t v = 0; v < N; ++v) m *= pw[v][static_cast<std::size_t>(t.exps[v])];
      sum += m;
      mag += std::fabs(m);
    }
    if (scale != nullptr) *scale = mag;
    return sum;
  }

  bool empty() const { return terms_.empty(); }

 private:
  static constexpr int kMaxDegree = 64;
  struct Term {
    std::array<int, N> exps;
    double coeff;
  };
  std::vector<Term> terms_;
  std::array<int, N> max_deg_{};
};

}  // namespace umbilic
