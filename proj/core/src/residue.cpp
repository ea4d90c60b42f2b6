#include "cwm/residue.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace cwm {

Residue mod(Residue a, Residue n) {
  Residue r = a % n;
  return r < 0 ? r + n : r;
}

__extension__ using Wide = __int128;

Residue mul_mod(Residue a, Residue b, Residue n) {
  return static_cast<Residue>((static_cast<Wide>(mod(a, n)) * mod(b, n)) % n);
}

Residue pow_mod(Residue base, std::uint64_t exp, Residue n) {
  Residue result = mod(1, n);
  Residue b = mod(base, n);
  while (exp > 0) {
    if (exp & 1U) result = mul_mod(result, b, n);
    b = mul_mod(b, b, n);
    exp >>= 1U;
  }
  return result;
}

Residue inverse_mod(Residue a, Residue n) {
  Residue old_r = mod(a, n), r = n;
  Residue old_s = 1, s = 0;
  while (r != 0) {
    Residue q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_s = std::exchange(s, old_s - q * s);
  }
  if (old_r != 1 && n != 1)
    throw std::invalid_argument("inverse_mod: " + std::to_string(a) +
                                " is not a unit modulo " + std::to_string(n));
  return mod(old_s, n);
}

std::int64_t multiplicative_order(Residue base, Residue n) {
  if (n == 1) return 1;
  if (std::gcd(mod(base, n), n) != 1)
    throw std::invalid_argument("multiplicative_order: base is not a unit");
  std::int64_t e = 1;
  Residue x = mod(base, n);
  while (x != 1) {
    x = mul_mod(x, base, n);
    ++e;
  }
  return e;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("divisors: n must be positive");
  std::vector<std::int64_t> small, large;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::int64_t euler_phi(std::int64_t n) {
  std::int64_t result = n;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<Residue> units(Residue n) {
  if (n == 1) return {0};
  std::vector<Residue> out;
  for (Residue a = 1; a < n; ++a)
    if (std::gcd(a, n) == 1) out.push_back(a);
  return out;
}

ModulusContext::ModulusContext(Residue n, Residue t) : n_(n), t_(t) {
  if (n < 1) throw std::invalid_argument("ModulusContext: n must be >= 1");
  if (t < 1) throw std::invalid_argument("ModulusContext: t must be >= 1");
  if (std::gcd(t, n) != 1)
    throw std::invalid_argument("ModulusContext: gcd(t, n) must be 1 (t=" +
                                std::to_string(t) + ", n=" + std::to_string(n) + ")");
}

bool Orbit::contains(Residue a) const {
  return std::find(elements.begin(), elements.end(), a) != elements.end();
}

std::int64_t orbit_length(Residue a, const ModulusContext& ctx) {
  const Residue start = ctx.reduce(a);
  std::int64_t len = 1;
  for (Residue x = ctx.step(start); x != start; x = ctx.step(x)) ++len;
  return len;
}

Orbit orbit_of(Residue a, const ModulusContext& ctx) {
  const Residue start = ctx.reduce(a);
  Residue generator = start;
  for (Residue x = ctx.step(start); x != start; x = ctx.step(x))
    generator = std::min(generator, x);

  Orbit orbit;
  orbit.generator = generator;
  orbit.elements.push_back(generator);
  for (Residue x = ctx.step(generator); x != generator; x = ctx.step(x))
    orbit.elements.push_back(x);
  return orbit;
}

std::vector<Orbit> orbits_of_length(const ModulusContext& ctx, std::int64_t length) {
  if (length < 1) throw std::invalid_argument("orbits_of_length: length must be >= 1");
  const Residue n = ctx.modulus();
  // Elements whose orbit length divides `length` are the solutions of
  // (t^length - 1) a == 0, i.e. the multiples of n / gcd(n, t^length - 1).
  const Residue g = std::gcd(n, mod(pow_mod(ctx.multiplier(), length, n) - 1, n));
  const Residue stride = n / g;

  std::vector<Orbit> out;
  std::vector<bool> seen(static_cast<std::size_t>(g), false);
  for (Residue k = 0; k < g; ++k) {
    if (seen[k]) continue;
    Orbit orbit = orbit_of(k * stride, ctx);
    for (Residue e : orbit.elements) seen[e / stride] = true;
    if (static_cast<std::int64_t>(orbit.length()) == length) out.push_back(std::move(orbit));
  }
  std::sort(out.begin(), out.end(),
            [](const Orbit& a, const Orbit& b) { return a.generator < b.generator; });
  return out;
}

std::vector<Orbit> all_orbits(const ModulusContext& ctx) {
  const Residue n = ctx.modulus();
  std::vector<Orbit> out;
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (Residue a = 0; a < n; ++a) {
    if (seen[a]) continue;
    Orbit orbit = orbit_of(a, ctx);
    for (Residue e : orbit.elements) seen[e] = true;
    out.push_back(std::move(orbit));
  }
  return out;
}

namespace {

std::int64_t mobius(std::int64_t n) {
  std::int64_t result = 1;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

std::int64_t checked_pow(std::int64_t base, std::int64_t exp) {
  std::int64_t result = 1;
  for (std::int64_t i = 0; i < exp; ++i) {
    if (result > std::numeric_limits<std::int64_t>::max() / base)
      throw std::overflow_error("orbit_count_cap: t^length overflows");
    result *= base;
  }
  return result;
}

} // namespace

std::int64_t orbit_count_cap(std::int64_t length, std::int64_t t) {
  if (length < 1 || t < 2) throw std::invalid_argument("orbit_count_cap: need length >= 1, t >= 2");
  // In Z_{t^length - 1} the elements of orbit length dividing d form the
  // subgroup of order t^d - 1, so Moebius inversion counts exact lengths.
  std::int64_t exact = 0;
  for (std::int64_t d : divisors(length)) exact += mobius(length / d) * (checked_pow(t, d) - 1);
  return exact / length;
}

std::vector<std::int64_t> required_divisors(std::int64_t length, std::int64_t t,
                                            std::int64_t orbits_needed) {
  if (orbits_needed < 1) throw std::invalid_argument("required_divisors: orbits_needed must be >= 1");
  const std::int64_t cap = orbit_count_cap(length, t);
  if (orbits_needed > cap)
    throw std::invalid_argument("required_divisors: " + std::to_string(orbits_needed) +
                                " orbits of length " + std::to_string(length) +
                                " exceed the cap " + std::to_string(cap));

  std::vector<std::int64_t> sufficient;
  for (std::int64_t d : divisors(checked_pow(t, length) - 1)) {
    const auto count = static_cast<std::int64_t>(orbits_of_length(ModulusContext(d, t), length).size());
    if (count >= orbits_needed) sufficient.push_back(d);
  }
  std::vector<std::int64_t> minimal;
  for (std::int64_t d : sufficient) {
    bool has_smaller = std::any_of(sufficient.begin(), sufficient.end(),
                                   [d](std::int64_t e) { return e != d && d % e == 0; });
    if (!has_smaller) minimal.push_back(d);
  }
  return minimal;
}

} // namespace cwm
