#include "umbilic/modular.hpp"

#include <mutex>

namespace umbilic::modular {

u64 PrimeField::pow(u64 a, u64 e) const {
  u64 r = 1;
  a %= p;
  while (e != 0) {
    if ((e & 1U) != 0) r = mul(r, a);
    a = mul(a, a);
    e >>= 1U;
  }
  return r;
}

u64 PrimeField::reduce(const Integer& z) const {
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
  return r.get_ui();
}

const std::vector<u64>& large_primes(std::size_t count) {
  static std::mutex mutex;
  static std::vector<u64> primes;
  std::lock_guard<std::mutex> lock(mutex);
  u64 candidate = primes.empty() ? (u64{1} << 61U) - 1 : primes.back() - 2;
  while (primes.size() < count) {
    Integer z(static_cast<unsigned long>(candidate));
    if (mpz_probab_prime_p(z.get_mpz_t(), 30) != 0) primes.push_back(candidate);
    candidate -= 2;
  }
  return primes;
}

void trim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

u64 eval(const PrimeField& f, const ModPoly& a, u64 x) {
  u64 acc = 0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) acc = f.add(f.mul(acc, x), *it);
  return acc;
}

ModPoly gcd(const PrimeField& f, ModPoly a, ModPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    // a <- a mod b
    const u64 inv_lead = f.inv(b.back());
    while (a.size() >= b.size()) {
      const u64 q = f.mul(a.back(), inv_lead);
      const std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = f.sub(a[shift + i], f.mul(q, b[i]));
      trim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  if (!a.empty()) {
    const u64 inv_lead = f.inv(a.back());
    for (auto& c : a) c = f.mul(c, inv_lead);
  }
  return a;
}

void CrtAccumulator::add(u64 p, const std::vector<u64>& residues) {
  // x = v + M * ((r - v) * M^{-1} mod p)
  const PrimeField f{p};
  const u64 m_mod = f.reduce(modulus_);
  const u64 m_inv = f.inv(m_mod);
  for (std::size_t i = 0; i < values_.size(); ++i) {
    const u64 v_mod = f.reduce(values_[i]);
    const u64 k = f.mul(f.sub(residues[i], v_mod), m_inv);
    values_[i] += modulus_ * Integer(static_cast<unsigned long>(k));
  }
  modulus_ *= Integer(static_cast<unsigned long>(p));
}

std::vector<Integer> CrtAccumulator::symmetric() const {
  std::vector<Integer> out(values_.size());
  const Integer half = modulus_ / 2;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    out[i] = values_[i] > half ? values_[i] - modulus_ : values_[i];
  }
  return out;
}

}  // namespace umbilic::modular
