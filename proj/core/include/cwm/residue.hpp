#ifndef CWM_RESIDUE_HPP
#define CWM_RESIDUE_HPP

#include <cstdint>
#include <vector>

namespace cwm {

using Residue = std::int64_t;

/// Non-negative remainder of `a` modulo `n` (n >= 1).
Residue mod(Residue a, Residue n);

/// (a * b) mod n without intermediate overflow for n < 2^62.
Residue mul_mod(Residue a, Residue b, Residue n);

Residue pow_mod(Residue base, std::uint64_t exp, Residue n);

/// Inverse of a unit `a` modulo `n`. Throws std::invalid_argument if
/// gcd(a, n) != 1.
Residue inverse_mod(Residue a, Residue n);

/// Smallest e >= 1 with base^e == 1 (mod n). Requires gcd(base, n) == 1.
/// Returns 1 for n == 1.
std::int64_t multiplicative_order(Residue base, Residue n);

/// Positive divisors of n in increasing order (trial division).
std::vector<std::int64_t> divisors(std::int64_t n);

std::int64_t euler_phi(std::int64_t n);

/// Units of Z_n in increasing order; {0} for n == 1.
std::vector<Residue> units(Residue n);

/// The modulus n together with the multiplier t acting on Z_n by
/// multiplication. Immutable once constructed.
class ModulusContext {
public:
  /// Throws std::invalid_argument unless n >= 1, t >= 1 and gcd(t, n) == 1.
  ModulusContext(Residue n, Residue t);

  Residue modulus() const noexcept { return n_; }
  Residue multiplier() const noexcept { return t_; }

  Residue reduce(Residue a) const { return mod(a, n_); }
  /// t * a mod n
  Residue step(Residue a) const { return mul_mod(t_, a, n_); }

private:
  Residue n_;
  Residue t_;
};

/// A t-orbit {a, ta, t^2 a, ...} in Z_n. `elements` starts at the canonical
/// generator (the smallest element) and follows multiplication by t.
struct Orbit {
  Residue generator = 0;
  std::vector<Residue> elements;

  std::size_t length() const noexcept { return elements.size(); }
  bool contains(Residue a) const;

  friend bool operator==(const Orbit&, const Orbit&) = default;
};

/// Orbit length ol(a) of a under multiplication by t.
std::int64_t orbit_length(Residue a, const ModulusContext& ctx);

Orbit orbit_of(Residue a, const ModulusContext& ctx);

/// All orbits of length exactly `length`, sorted by generator. Only the
/// subgroup {a : (t^length - 1) a == 0} is visited.
std::vector<Orbit> orbits_of_length(const ModulusContext& ctx, std::int64_t length);

/// Every orbit of Z_n, sorted by generator.
std::vector<Orbit> all_orbits(const ModulusContext& ctx);

/// Upper bound, valid for every modulus n coprime to t, on the number of
/// orbits of length `length`. Equals the number of elements of
/// Z_{t^length - 1} with orbit length exactly `length`, divided by `length`.
/// Throws std::overflow_error if t^length does not fit in 63 bits.
std::int64_t orbit_count_cap(std::int64_t length, std::int64_t t);

/// Minimal divisors d of t^length - 1 (minimal under divisibility) such that
/// d | n guarantees at least `orbits_needed` orbits of length `length` in Z_n.
/// Throws std::invalid_argument if orbits_needed exceeds orbit_count_cap.
std::vector<std::int64_t> required_divisors(std::int64_t length, std::int64_t t,
                                            std::int64_t orbits_needed);

} // namespace cwm

#endif // CWM_RESIDUE_HPP
