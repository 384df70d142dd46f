#include "egp/modular_group.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace egp {

namespace {

std::int64_t reduce(std::int64_t x, std::int64_t n) {
  std::int64_t r = x % n;
  return r < 0 ? r + n : r;
}

void check_modulus(std::int64_t n) {
  if (n < 2) {
    throw std::invalid_argument("modulus must be >= 2, got " + std::to_string(n));
  }
  if (n > 1'000'000) {
    throw std::invalid_argument("modulus beyond supported range: " + std::to_string(n));
  }
}

}  // namespace

ModMatrix ModMatrix::identity(std::int64_t n) {
  check_modulus(n);
  return ModMatrix{1 % n, 0, 0, 1 % n, n};
}

ModMatrix ModMatrix::make(std::int64_t a, std::int64_t b, std::int64_t c,
                          std::int64_t d, std::int64_t n) {
  check_modulus(n);
  ModMatrix m{reduce(a, n), reduce(b, n), reduce(c, n), reduce(d, n), n};
  if (m.det_mod_n() != 1 % n) {
    throw std::invalid_argument("matrix is not in SL(2, Z_n): det != 1 mod n");
  }
  return m;
}

std::int64_t ModMatrix::det_mod_n() const {
  return reduce(a * d - b * c, n);
}

ModMatrix compose(const ModMatrix& g, const ModMatrix& h) {
  if (g.n != h.n) {
    throw std::invalid_argument("modulus mismatch in compose: " +
                                std::to_string(g.n) + " vs " + std::to_string(h.n));
  }
  const std::int64_t n = g.n;
  return ModMatrix{reduce(g.a * h.a + g.b * h.c, n), reduce(g.a * h.b + g.b * h.d, n),
                   reduce(g.c * h.a + g.d * h.c, n), reduce(g.c * h.b + g.d * h.d, n), n};
}

ModMatrix inverse(const ModMatrix& g) {
  return ModMatrix{g.d, reduce(-g.b, g.n), reduce(-g.c, g.n), g.a, g.n};
}

GeneratorSet GeneratorSet::standard(std::int64_t n) {
  check_modulus(n);
  const ModMatrix s1 = ModMatrix::make(1, 1, 0, 1, n);
  const ModMatrix s2 = ModMatrix::make(1, 0, 1, 1, n);
  return GeneratorSet{{s1, s2, inverse(s1), inverse(s2)}};
}

std::uint64_t group_order(std::int64_t n) {
  check_modulus(n);
  // n^3 * prod_p (1 - 1/p^2) = prod_p p^(3e_p - 2) * (p^2 - 1), exact in
  // integers since each prime power p^(3e) contains the p^2 divisor.
  std::uint64_t order = 1;
  std::int64_t rest = n;
  for (std::int64_t p = 2; p * p <= rest; ++p) {
    if (rest % p != 0) continue;
    int e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    std::uint64_t pk = 1;
    for (int i = 0; i < 3 * e - 2; ++i) pk *= static_cast<std::uint64_t>(p);
    order *= pk * static_cast<std::uint64_t>(p * p - 1);
  }
  if (rest > 1) {
    const std::uint64_t p = static_cast<std::uint64_t>(rest);
    order *= p * (p * p - 1);
  }
  return order;
}

double operator_norm_generator() {
  return (1.0 + std::sqrt(5.0)) / 2.0;
}

}  // namespace egp
