#include "colorlie/exact_linalg.hpp"

#include <map>
#include <random>

#include <boost/multiprecision/integer.hpp>
#include <boost/multiprecision/miller_rabin.hpp>

namespace colorlie {

namespace {

using Factorization = std::map<Integer, int>;

Integer pollard_brent(const Integer& n, std::uint64_t seed) {
  if (n % 2 == 0) return Integer(2);
  std::mt19937_64 rng(seed);
  for (;;) {
    Integer y = Integer(rng()) % n;
    const Integer c = Integer(rng()) % (n - 1) + 1;
    const Integer m = 64;
    Integer g = 1, r = 1, q = 1, x, ys;
    while (g == 1) {
      x = y;
      for (Integer i = 0; i < r; ++i) y = (y * y + c) % n;
      for (Integer k = 0; k < r && g == 1; k += m) {
        ys = y;
        for (Integer i = 0; i < m && i < r - k; ++i) {
          y = (y * y + c) % n;
          q = q * abs(x - y) % n;
        }
        g = gcd(q, n);
      }
      r *= 2;
    }
    if (g == n) {
      do {
        ys = (ys * ys + c) % n;
        g = gcd(abs(x - ys), n);
      } while (g == 1);
    }
    if (g != n) return g;
    seed += 0x9e3779b97f4a7c15ULL;
    rng.seed(seed);
  }
}

void factor_into(Integer n, Factorization& out) {
  for (unsigned p = 2; p < 1000 && Integer(p) * p <= n; ++p) {
    while (n % p == 0) {
      ++out[Integer(p)];
      n /= p;
    }
  }
  if (n == 1) return;
  if (n < 1000000 || boost::multiprecision::miller_rabin_test(n, 25)) {
    // survivors of trial division below 1000 that are < 10^6 are prime
    ++out[n];
    return;
  }
  const Integer d = pollard_brent(n, 1);
  factor_into(d, out);
  factor_into(n / d, out);
}

std::vector<Integer> divisors(const Integer& n) {
  Factorization f;
  factor_into(abs(n), f);
  std::vector<Integer> ds{Integer(1)};
  for (const auto& [prime, exponent] : f) {
    const std::size_t count = ds.size();
    Integer power = 1;
    for (int e = 1; e <= exponent; ++e) {
      power *= prime;
      for (std::size_t i = 0; i < count; ++i) ds.push_back(ds[i] * power);
    }
  }
  return ds;
}

}  // namespace

std::vector<RationalRoot> rational_roots(const Poly<Rational>& p) {
  if (p.is_zero()) throw Error(Errc::ZeroPolynomial, "rational_roots of the zero polynomial");

  std::vector<RationalRoot> roots;
  std::vector<Rational> coeffs = p.coefficients();

  int zero_mult = 0;
  while (coeffs.size() > 1 && coeffs.front() == 0) {
    coeffs.erase(coeffs.begin());
    ++zero_mult;
  }
  if (zero_mult > 0) roots.push_back({Rational(0), zero_mult});

  Poly<Rational> rest(coeffs);
  if (rest.degree() >= 1) {
    Integer scale = 1;
    for (const auto& c : coeffs) scale = boost::multiprecision::lcm(scale, denominator(c));
    const Integer a0 = abs(numerator(coeffs.front() * Rational(scale)));
    const Integer an = abs(numerator(coeffs.back() * Rational(scale)));
    const auto num_divisors = divisors(a0);
    const auto den_divisors = divisors(an);

    std::vector<Rational> candidates;
    for (const auto& d : num_divisors)
      for (const auto& e : den_divisors) {
        if (gcd(d, e) != 1) continue;
        candidates.emplace_back(d, e);
        candidates.emplace_back(-d, e);
      }

    for (const auto& candidate : candidates) {
      if (rest.degree() < 1) break;
      int mult = 0;
      for (;;) {
        auto [quotient, remainder] = rest.divide_linear(candidate);
        if (remainder != 0) break;
        rest = std::move(quotient);
        ++mult;
        if (rest.degree() < 1) break;
      }
      if (mult > 0) roots.push_back({candidate, mult});
    }
  }

  std::sort(roots.begin(), roots.end(),
            [](const RationalRoot& a, const RationalRoot& b) { return a.value < b.value; });
  return roots;
}

}  // namespace colorlie
