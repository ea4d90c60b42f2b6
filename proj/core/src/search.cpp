#include "cwm/search.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>

#include "cwm/prune.hpp"

namespace cwm {

void SearchSpec::validate() const {
  if (n < 1) throw std::invalid_argument("search: order must be >= 1");
  if (t < 1 || std::gcd(t, n) != 1)
    throw std::invalid_argument("search: multiplier " + std::to_string(t) + " is not coprime to " +
                                std::to_string(n));
  const auto s = square_root(weight);
  if (!s || *s < 1) throw std::invalid_argument("search: weight " + std::to_string(weight) + " is not a positive square");
  if (pair.positive.total() != *s * (*s + 1) / 2 || pair.negative.total() != *s * (*s - 1) / 2)
    throw std::invalid_argument("search: partition totals do not match weight " + std::to_string(weight));
}

std::vector<Residue> base_orders(const OlpPair& pair, Residue t) {
  std::map<std::int64_t, std::int64_t> need;
  for (auto k : pair.positive.parts()) ++need[k];
  for (auto k : pair.negative.parts()) ++need[k];

  std::int64_t lcm = 1;
  std::vector<std::vector<std::int64_t>> required;
  for (const auto& [length, count] : need) {
    if (length > 10) throw std::invalid_argument("base_orders: orbit length " + std::to_string(length) + " above 10");
    std::int64_t power = 1;
    for (std::int64_t i = 0; i < length; ++i) power *= t;
    lcm = std::lcm(lcm, power - 1);
    required.push_back(required_divisors(length, t, count));
  }

  std::vector<Residue> out;
  for (auto d : divisors(lcm)) {
    const bool ok = std::all_of(required.begin(), required.end(), [&](const std::vector<std::int64_t>& options) {
      return std::any_of(options.begin(), options.end(), [&](std::int64_t r) { return d % r == 0; });
    });
    if (ok) out.push_back(d);
  }
  return out;
}

namespace {

struct Slot {
  std::int64_t length;
  std::int64_t count;
  bool positive;
};

// Every assignment of orbit indices to slots: unordered within a slot,
// pairwise distinct overall.
void enumerate_assignments(const std::vector<Slot>& slots, const std::map<std::int64_t, std::vector<std::size_t>>& pool,
                           std::size_t slot, std::vector<std::size_t>& current, std::vector<bool>& used,
                           std::vector<std::vector<std::size_t>>& out) {
  if (slot == slots.size()) {
    out.push_back(current);
    return;
  }
  const auto& candidates = pool.at(slots[slot].length);
  const auto need = static_cast<std::size_t>(slots[slot].count);

  auto recurse = [&](auto&& self, std::size_t start, std::size_t taken) -> void {
    if (taken == need) {
      enumerate_assignments(slots, pool, slot + 1, current, used, out);
      return;
    }
    for (std::size_t i = start; i < candidates.size(); ++i) {
      const auto idx = candidates[i];
      if (used[idx]) continue;
      used[idx] = true;
      current.push_back(idx);
      self(self, i + 1, taken + 1);
      current.pop_back();
      used[idx] = false;
    }
  };
  recurse(recurse, 0, 0);
}

void sort_unique(std::vector<CirculantRow>& rows, bool with_negation) {
  std::vector<std::pair<CirculantRow, CirculantRow>> keyed;
  keyed.reserve(rows.size());
  for (auto& r : rows) keyed.emplace_back(canonical_form(r, with_negation), std::move(r));
  std::sort(keyed.begin(), keyed.end());
  keyed.erase(std::unique(keyed.begin(), keyed.end()), keyed.end());
  rows.clear();
  for (auto& [_, r] : keyed) rows.push_back(std::move(r));
}

} // namespace

SearchReport exhaustive_search(const SearchSpec& spec, const SearchOptions& options) {
  spec.validate();
  const ModulusContext ctx(spec.n, spec.t);

  std::vector<Slot> slots;
  for (auto [len, mult] : spec.pair.negative.runs()) slots.push_back({len, mult, false});
  for (auto [len, mult] : spec.pair.positive.runs()) slots.push_back({len, mult, true});

  std::vector<Orbit> orbits;
  std::map<std::int64_t, std::vector<std::size_t>> pool;
  for (const auto& slot : slots) {
    if (pool.count(slot.length)) continue;
    auto& indices = pool[slot.length];
    for (auto& orbit : orbits_of_length(ctx, slot.length)) {
      indices.push_back(orbits.size());
      orbits.push_back(std::move(orbit));
    }
  }

  std::vector<std::vector<std::size_t>> assignments;
  std::vector<std::size_t> current;
  std::vector<bool> used(orbits.size(), false);
  enumerate_assignments(slots, pool, 0, current, used, assignments);

  std::size_t negative_orbits = 0;
  for (const auto& slot : slots)
    if (!slot.positive) negative_orbits += static_cast<std::size_t>(slot.count);

  auto evaluate = [&](const std::vector<std::size_t>& assignment) -> std::optional<CirculantRow> {
    std::vector<Residue> positive, negative;
    for (std::size_t i = 0; i < assignment.size(); ++i) {
      const auto& elems = orbits[assignment[i]].elements;
      auto& target = i < negative_orbits ? negative : positive;
      target.insert(target.end(), elems.begin(), elems.end());
    }
    auto row = from_sets(spec.n, positive, negative);
    if (verify_cw(row) != spec.weight) return std::nullopt;
    return normalize_sign(row);
  };

  const unsigned jobs = std::max(1u, std::min<unsigned>(options.jobs, static_cast<unsigned>(std::max<std::size_t>(1, assignments.size()))));
  std::vector<std::vector<CirculantRow>> found(jobs);
  auto worker = [&](unsigned id) {
    for (std::size_t i = id; i < assignments.size(); i += jobs)
      if (auto row = evaluate(assignments[i])) found[id].push_back(std::move(*row));
  };
  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned id = 0; id < jobs; ++id) threads.emplace_back(worker, id);
    for (auto& th : threads) th.join();
  }

  SearchReport report;
  report.spec = spec;
  report.candidates_tested = static_cast<std::int64_t>(assignments.size());
  for (auto& part : found)
    for (auto& row : part) report.solutions.push_back(std::move(row));
  sort_unique(report.solutions, options.with_negation);
  report.classes = classify(report.solutions, options.with_negation);
  return report;
}

std::vector<EquivalenceClass> classify(std::span<const CirculantRow> rows, bool with_negation) {
  std::map<CirculantRow, std::int64_t> classes;
  for (const auto& row : rows) {
    if (row.order() != rows.front().order()) throw std::invalid_argument("classify: rows of different orders");
    ++classes[canonical_form(row, with_negation)];
  }
  std::vector<EquivalenceClass> out;
  for (auto& [rep, members] : classes) out.push_back({rep, members});
  return out;
}

CirculantRow lift(const CirculantRow& row, std::int64_t m) {
  if (m < 1) throw std::invalid_argument("lift: factor must be >= 1");
  const auto n = row.order();
  std::vector<std::int8_t> coeffs(static_cast<std::size_t>(n * m), 0);
  for (Residue i = 0; i < n; ++i) coeffs[static_cast<std::size_t>(i * m)] = row[i];
  return CirculantRow(std::move(coeffs));
}

Contraction contract(const CirculantRow& row) {
  const auto support = row.support();
  if (support.empty()) throw std::invalid_argument("contract: zero row");
  std::int64_t m = row.order();
  for (auto i : support) m = std::gcd(m, i);
  const auto n0 = row.order() / m;
  std::vector<std::int8_t> coeffs(static_cast<std::size_t>(n0), 0);
  for (auto i : support) coeffs[static_cast<std::size_t>(i / m)] = row[i];
  return {CirculantRow(std::move(coeffs)), m};
}

std::optional<CirculantRow> contractible_member(const CirculantRow& row, std::int64_t d) {
  const auto n = row.order();
  if (d < 1 || n % d != 0)
    throw std::invalid_argument("contractible_member: " + std::to_string(d) + " does not divide " + std::to_string(n));
  const auto support = row.support();
  const auto unit_list = units(n);
  for (Residue s = 0; s < n; ++s) {
    for (auto t : unit_list) {
      const bool divisible = std::all_of(support.begin(), support.end(),
                                         [&](Residue i) { return mod(mul_mod(t, i, n) + s, n) % d == 0; });
      if (divisible) return apply_transform(row, {s, t});
    }
  }
  return std::nullopt;
}

bool class_contractible(const CirculantRow& row, std::int64_t d) {
  return contractible_member(row, d).has_value();
}

std::int64_t weight16_class_count(Residue n) {
  if (n < 1 || n % 2 == 0) throw std::invalid_argument("weight16_class_count: order must be odd and positive");
  std::int64_t count = 0;
  if (n % 31 == 0) count += 2;
  if (n % 21 == 0) count += 1;
  if (n % 63 == 0) count += 1;
  return count;
}

namespace {

struct BaseClasses {
  CirculantRow order21;
  std::vector<CirculantRow> order31;
  CirculantRow order63;
};

const BaseClasses& base_classes() {
  static const BaseClasses cached = [] {
    BaseClasses out;
    const auto at31 = exhaustive_search({31, 16, 2, {parse_olp("5^2"), parse_olp("1^1 5^1")}});
    for (const auto& c : at31.classes) out.order31.push_back(c.representative);

    const auto at63 = exhaustive_search({63, 16, 2, {parse_olp("1^1 3^1 6^1"), parse_olp("6^1")}});
    std::optional<CirculantRow> from21, own63;
    for (const auto& c : at63.classes) {
      if (auto member = contractible_member(c.representative, 3)) {
        const auto contraction = contract(*member);
        from21 = canonical_form(lift(contraction.base, contraction.factor / 3));
      } else {
        own63 = c.representative;
      }
    }
    if (out.order31.size() != 2 || !from21 || !own63)
      throw std::logic_error("full_classification: base searches did not produce the expected classes");
    out.order21 = *from21;
    out.order63 = *own63;
    return out;
  }();
  return cached;
}

Residue multiplier_for(std::int64_t weight, Residue n) {
  const auto s = square_root(weight);
  if (!s || *s < 2) throw std::invalid_argument("search_classification: weight must be p^(2m) for a prime p");
  Residue p = 2;
  while (*s % p != 0) ++p;
  std::int64_t rest = *s;
  while (rest % p == 0) rest /= p;
  if (rest != 1) throw std::invalid_argument("search_classification: weight must be p^(2m) for a prime p");
  if (std::gcd(p, n) != 1)
    throw std::invalid_argument("search_classification: order " + std::to_string(n) + " is divisible by " +
                                std::to_string(p));
  return p;
}

} // namespace

Classification full_classification(std::int64_t weight, Residue n) {
  if (weight != 16) throw std::invalid_argument("full_classification: only weight 16 is supported");
  Classification out{n, weight, weight16_class_count(n), {}};
  if (out.class_count == 0) return out;

  const auto& base = base_classes();
  if (n % 21 == 0) out.representatives.push_back(lift(base.order21, n / 21));
  if (n % 31 == 0)
    for (const auto& rep : base.order31) out.representatives.push_back(lift(rep, n / 31));
  if (n % 63 == 0) out.representatives.push_back(lift(base.order63, n / 63));
  return out;
}

Classification search_classification(std::int64_t weight, Residue n, const SearchOptions& options) {
  if (n < 1) throw std::invalid_argument("search_classification: order must be >= 1");
  const auto t = multiplier_for(weight, n);
  const auto pairs = feasible_pairs(weight, t);
  const auto reports = prune(pairs, PruneLevel::counting, t);

  std::vector<CirculantRow> solutions;
  for (const auto& pair : survivors(reports)) {
    auto report = exhaustive_search({n, weight, t, pair}, options);
    for (auto& row : report.solutions) solutions.push_back(std::move(row));
  }
  const auto classes = classify(solutions, options.with_negation);

  Classification out{n, weight, static_cast<std::int64_t>(classes.size()), {}};
  for (const auto& c : classes) out.representatives.push_back(c.representative);
  return out;
}

} // namespace cwm
