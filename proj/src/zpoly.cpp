#include "umbilic/zpoly.hpp"

#include <algorithm>

#include "umbilic/modular.hpp"
#include "umbilic/upoly.hpp"

namespace umbilic {

namespace {

void trim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

}  // namespace

int degree(const ZPoly& a) { return static_cast<int>(a.size()) - 1; }

Integer content(const ZPoly& a) {
  Integer g(0);
  for (const auto& c : a) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

ZPoly primitive_part(ZPoly a) {
  trim(a);
  if (a.empty()) return a;
  Integer g = content(a);
  if (a.back() < 0) g = -g;
  for (auto& c : a) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return a;
}

ZPoly primitive_part(const UPoly& a) {
  Integer den(1);
  for (const auto& c : a.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  ZPoly z(a.coeffs().size());
  for (std::size_t i = 0; i < z.size(); ++i) {
    const Rational& c = a.coeffs()[i];
    z[i] = c.get_num() * (den / c.get_den());
  }
  return primitive_part(std::move(z));
}

UPoly to_upoly(const ZPoly& a) {
  std::vector<Rational> c(a.begin(), a.end());
  return UPoly(std::move(c));
}

bool divides(const ZPoly& b, const ZPoly& a) {
  if (b.empty()) return a.empty();
  if (a.size() < b.size()) return a.empty();
  ZPoly r = a;
  const std::size_t db = b.size() - 1;
  const Integer& lc = b.back();
  Integer q;
  for (std::size_t k = a.size() - b.size() + 1; k-- > 0;) {
    Integer& top = r[k + db];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lc.get_mpz_t())) return false;
    mpz_divexact(q.get_mpz_t(), top.get_mpz_t(), lc.get_mpz_t());
    for (std::size_t j = 0; j <= db; ++j) r[k + j] -= q * b[j];
  }
  return std::all_of(r.begin(), r.end(), [](const Integer& c) { return c == 0; });
}

ZPoly gcd(const ZPoly& a_in, const ZPoly& b_in) {
  ZPoly a = primitive_part(a_in);
  ZPoly b = primitive_part(b_in);
  if (a.empty()) return b;
  if (b.empty()) return a;
  if (degree(a) == 0 || degree(b) == 0) return ZPoly{Integer(1)};
  Integer gamma;
  mpz_gcd(gamma.get_mpz_t(), a.back().get_mpz_t(), b.back().get_mpz_t());

  int best = std::min(degree(a), degree(b)) + 1;
  modular::CrtAccumulator acc(0);
  ZPoly previous;
  for (std::size_t idx = 0;; ++idx) {
    const auto p = modular::large_primes(idx + 1)[idx];
    const modular::PrimeField field{p};
    if (field.reduce(a.back()) == 0 || field.reduce(b.back()) == 0) continue;
    modular::ModPoly ap(a.size());
    modular::ModPoly bp(b.size());
    for (std::size_t i = 0; i < a.size(); ++i) ap[i] = field.reduce(a[i]);
    for (std::size_t i = 0; i < b.size(); ++i) bp[i] = field.reduce(b[i]);
    modular::ModPoly g = modular::gcd(field, ap, bp);
    const int dg = static_cast<int>(g.size()) - 1;
    if (dg == 0) return ZPoly{Integer(1)};
    if (dg > best) continue;  // unlucky prime
    if (dg < best) {
      best = dg;
      acc.reset(g.size());
      previous.clear();
    }
    const auto gm = field.reduce(gamma);
    for (auto& c : g) c = field.mul(c, gm);
    acc.add(p, g);
    ZPoly candidate = primitive_part(acc.symmetric());
    if (candidate == previous && degree(candidate) == best && divides(candidate, a) &&
        divides(candidate, b)) {
      return candidate;
    }
    previous = std::move(candidate);
  }
}

int sign_at_dyadic(const ZPoly& a, const Integer& num, unsigned long shift) {
  // Homogeneous Horner: sum a_i num^i 2^{shift (d - i)}.
  if (a.empty()) return 0;
  Integer acc = a.back();
  Integer den_pow(1);
  for (std::size_t k = a.size() - 1; k-- > 0;) {
    acc *= num;
    mpz_mul_2exp(den_pow.get_mpz_t(), den_pow.get_mpz_t(), shift);
    acc += a[k] * den_pow;
  }
  return sgn(acc);
}

int sign_at(const ZPoly& a, const Rational& x) {
  if (a.empty()) return 0;
  const Integer& num = x.get_num();
  const Integer& den = x.get_den();
  Integer acc = a.back();
  Integer den_pow(1);
  for (std::size_t k = a.size() - 1; k-- > 0;) {
    acc *= num;
    den_pow *= den;
    acc += a[k] * den_pow;
  }
  return sgn(acc);
}

}  // namespace umbilic
