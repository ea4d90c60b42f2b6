#include "cwtool/commands.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "cwm/circulant.hpp"
#include "cwm/multiset.hpp"
#include "cwm/olp.hpp"
#include "cwm/prune.hpp"
#include "cwm/search.hpp"

namespace cwtool {

using json = nlohmann::ordered_json;

namespace {

struct Options {
  std::string format = "text";
  std::string out_file;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  std::int64_t multiplier = 2;
  bool with_negation = false;

  // verify
  std::string row;
  // prune / search / classify
  std::int64_t weight = 16;
  std::string level = "counting";
  // search
  std::int64_t n = 0;
  std::string olp_positive;
  std::string olp_negative;
  // classify
  std::int64_t max_n = 105;
  std::int64_t check_up_to = 105;
};

struct Outcome {
  json report;
  std::string text;
  int code = exit_ok;
};

std::string join(const std::vector<cwm::Residue>& values) {
  std::ostringstream os;
  for (std::size_t i = 0; i < values.size(); ++i) os << (i ? " " : "") << values[i];
  return os.str();
}

bool is_sign_string(const std::string& arg) {
  if (arg.empty() || arg == "-" || arg == "--") return false;
  return arg.find_first_not_of("-+0 ") == std::string::npos && arg.find_first_of("-+") != std::string::npos;
}

json olp_json(const cwm::Olp& olp) {
  json out = json::array();
  for (auto [len, mult] : olp.runs()) out.push_back({len, mult});
  return out;
}

std::optional<cwm::Olp> olp_of(std::span<const cwm::Residue> set, cwm::Residue n, std::int64_t t) {
  if (t < 1 || std::gcd(t, n) != 1) return std::nullopt;
  return cwm::orbit_length_partition(set, cwm::ModulusContext(n, t));
}

std::string olp_text(const std::optional<cwm::Olp>& olp) {
  if (!olp) return "n/a";
  return olp->empty() ? "-" : olp->to_string();
}

json row_json(const cwm::CirculantRow& row) {
  const auto sets = cwm::describing_sets(row);
  return {{"row", cwm::to_sign_string(row)}, {"P", sets.positive}, {"N", sets.negative}};
}

Outcome cmd_verify(const Options& opt) {
  const auto row = cwm::parse_sign_string(opt.row);
  const auto n = row.order();
  const auto weight = cwm::verify_cw(row);
  const auto sets = cwm::describing_sets(row);
  const auto olp_p = olp_of(sets.positive, n, opt.multiplier);
  const auto olp_n = olp_of(sets.negative, n, opt.multiplier);
  const auto mults = cwm::multipliers(row);
  const bool equation = cwm::cw_equation_holds(sets.positive, sets.negative, n);

  Outcome o;
  o.code = weight ? exit_ok : exit_negative;
  o.report["n"] = n;
  o.report["weight"] = weight ? json(*weight) : json(nullptr);
  o.report["row"] = cwm::to_sign_string(row);
  o.report["P"] = sets.positive;
  o.report["N"] = sets.negative;
  o.report["olpP"] = olp_p ? olp_json(*olp_p) : json(nullptr);
  o.report["olpN"] = olp_n ? olp_json(*olp_n) : json(nullptr);
  o.report["multiplier"] = opt.multiplier;
  json mj = json::array();
  for (auto [t, s] : mults) mj.push_back({{"t", t}, {"s", s}});
  o.report["multipliers"] = mj;
  o.report["multiset_equation"] = equation;

  std::ostringstream os;
  os << "order: " << n << "\n";
  os << "weight: " << (weight ? std::to_string(*weight) : std::string("NOT-A-CW")) << "\n";
  os << "row: " << cwm::to_sign_string(row) << "\n";
  os << "P: {" << join(sets.positive) << "}\n";
  os << "N: {" << join(sets.negative) << "}\n";
  os << "olp(P) under t=" << opt.multiplier << ": " << olp_text(olp_p) << "\n";
  os << "olp(N) under t=" << opt.multiplier << ": " << olp_text(olp_n) << "\n";
  os << "multipliers:";
  for (auto [t, s] : mults) os << " " << t << "(s=" << s << ")";
  os << "\n";
  os << "multiset equation: " << (equation ? "holds" : "fails") << "\n";
  o.text = os.str();
  return o;
}

json witness_json(const cwm::PruneWitness& w) {
  json out;
  out["rule"] = cwm::to_string(w.rule);
  out["length"] = w.length;
  out["lengths"] = w.lengths;
  out["min_count"] = w.min_count;
  out["max_count"] = w.max_count;
  out["parts"] = w.parts ? json{w.parts->first, w.parts->second} : json(nullptr);
  return out;
}

std::string witness_text(const cwm::PruneWitness& w) {
  std::ostringstream os;
  if (w.rule == cwm::PruneRule::cross_length_unmatched) {
    os << "l = ";
    for (std::size_t i = 0; i < w.lengths.size(); ++i) os << (i ? "," : "") << w.lengths[i];
    os << " from parts (" << w.parts->first << ", " << w.parts->second << ")";
  } else {
    os << to_string(w.rule) << " at l = " << w.length << ": " << w.min_count << " > " << w.max_count;
  }
  return os.str();
}

Outcome cmd_prune(const Options& opt) {
  const auto level = cwm::parse_prune_level(opt.level);
  const auto pairs = cwm::feasible_pairs(opt.weight, opt.multiplier);
  const auto existence = cwm::prune(pairs, cwm::PruneLevel::existence, opt.multiplier);
  const auto reports = level == cwm::PruneLevel::existence ? existence
                                                           : cwm::prune(pairs, level, opt.multiplier);
  const auto after_existence = cwm::survivors(existence).size();
  const auto after_level = cwm::survivors(reports).size();

  Outcome o;
  o.report["weight"] = opt.weight;
  o.report["multiplier"] = opt.multiplier;
  o.report["level"] = cwm::to_string(level);
  json pj = json::array();
  std::ostringstream os;
  os << "feasible pairs for weight " << opt.weight << " (t=" << opt.multiplier << "): " << pairs.size() << "\n";
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const auto& r = reports[i];
    json entry;
    entry["index"] = i + 1;
    entry["olpP"] = olp_json(r.pair.positive);
    entry["olpN"] = olp_json(r.pair.negative);
    entry["accepted"] = r.accepted();
    entry["witness"] = r.witness ? witness_json(*r.witness) : json(nullptr);
    pj.push_back(entry);
    os << (i + 1) << "\t" << r.pair.positive.to_string() << "\t" << r.pair.negative.to_string() << "\t"
       << (r.accepted() ? std::string("o.k.") : witness_text(*r.witness)) << "\n";
  }
  o.report["pairs"] = pj;
  json summary;
  summary["pairs"] = pairs.size();
  summary["existence"] = after_existence;
  if (level == cwm::PruneLevel::counting) summary["counting"] = after_level;
  o.report["summary"] = summary;

  os << "summary: " << pairs.size() << " -> " << after_existence << " (existence)";
  if (level == cwm::PruneLevel::counting) os << " -> " << after_level << " (counting)";
  os << "\n";
  o.text = os.str();
  return o;
}

Outcome cmd_search(const Options& opt) {
  cwm::SearchSpec spec{opt.n, opt.weight, opt.multiplier,
                       {cwm::parse_olp(opt.olp_positive), cwm::parse_olp(opt.olp_negative)}};
  const auto report = cwm::exhaustive_search(spec, {opt.jobs, opt.with_negation});

  Outcome o;
  o.report["n"] = spec.n;
  o.report["weight"] = spec.weight;
  o.report["multiplier"] = spec.t;
  o.report["olpP"] = olp_json(spec.pair.positive);
  o.report["olpN"] = olp_json(spec.pair.negative);
  o.report["candidates_tested"] = report.candidates_tested;
  json sj = json::array();
  for (const auto& row : report.solutions) sj.push_back(row_json(row));
  o.report["solutions"] = sj;
  json cj = json::array();
  for (const auto& c : report.classes) {
    json entry = row_json(c.representative);
    entry["members"] = c.members;
    cj.push_back(entry);
  }
  o.report["classes"] = cj;

  std::ostringstream os;
  os << "n=" << spec.n << " weight=" << spec.weight << " t=" << spec.t << " olp(P)=" << spec.pair.positive.to_string()
     << " olp(N)=" << spec.pair.negative.to_string() << "\n";
  os << "candidates tested: " << report.candidates_tested << "\n";
  os << "solutions: " << report.solutions.size() << "\n";
  for (const auto& row : report.solutions) os << "  " << cwm::to_sign_string(row) << "\n";
  os << "classes: " << report.classes.size() << "\n";
  for (std::size_t i = 0; i < report.classes.size(); ++i) {
    const auto& c = report.classes[i];
    const auto sets = cwm::describing_sets(c.representative);
    os << "  [" << (i + 1) << "] members=" << c.members << " " << cwm::to_sign_string(c.representative) << "\n";
    os << "      P={" << join(sets.positive) << "} N={" << join(sets.negative) << "}\n";
  }
  o.text = os.str();
  return o;
}

Outcome cmd_classify(const Options& opt) {
  if (opt.max_n < 1) throw std::invalid_argument("--max-n must be >= 1");
  const bool by_rule = opt.weight == 16;
  const cwm::SearchOptions search_options{opt.jobs, opt.with_negation};

  Outcome o;
  o.report["weight"] = opt.weight;
  o.report["max_n"] = opt.max_n;
  o.report["method"] = by_rule ? "rules" : "search";
  o.report["checked_up_to"] = by_rule ? std::min(opt.check_up_to, opt.max_n) : opt.max_n;
  json cj = json::array();
  std::ostringstream os;
  std::vector<std::int64_t> mismatches;

  for (std::int64_t n = 1; n <= opt.max_n; n += 2) {
    const auto result = by_rule ? cwm::full_classification(opt.weight, n)
                                : cwm::search_classification(opt.weight, n, search_options);
    if (by_rule && n <= opt.check_up_to) {
      const auto searched = cwm::search_classification(opt.weight, n, search_options);
      if (searched.class_count != result.class_count) mismatches.push_back(n);
    }
    if (result.class_count == 0) continue;
    json entry;
    entry["n"] = n;
    entry["classes"] = result.class_count;
    json reps = json::array();
    for (const auto& rep : result.representatives) reps.push_back(row_json(rep));
    entry["representatives"] = reps;
    cj.push_back(entry);

    os << "n=" << n << " classes=" << result.class_count << "\n";
    for (const auto& rep : result.representatives) {
      const auto sets = cwm::describing_sets(rep);
      os << "  P={" << join(sets.positive) << "} N={" << join(sets.negative) << "}\n";
    }
  }
  o.report["orders"] = cj;
  o.report["mismatches"] = mismatches;
  os << "odd n <= " << opt.max_n << " with classes: " << cj.size() << "\n";
  if (by_rule && opt.check_up_to > 0) {
    os << "search cross-check for n <= " << std::min(opt.check_up_to, opt.max_n) << ": "
       << (mismatches.empty() ? "agrees" : "MISMATCH") << "\n";
  }
  if (!mismatches.empty()) o.code = exit_negative;
  o.text = os.str();
  return o;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Verify, prune, search and classify circulant weighing matrices", "cwtool"};
  app.require_subcommand(1);
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--out", opt.out_file, "Also write the JSON report to FILE");
  app.add_option("--jobs", opt.jobs, "Worker threads for searches")->check(CLI::PositiveNumber);
  app.add_option("--multiplier", opt.multiplier, "Multiplier t for orbit partitions")->check(CLI::PositiveNumber);
  app.add_flag("--with-negation", opt.with_negation, "Classify up to negation as well");

  auto* verify = app.add_subcommand("verify", "Check a sign-string row")->fallthrough();
  verify->add_option("row", opt.row, "Row such as -++0+00")->required();

  auto* prune = app.add_subcommand("prune", "Enumerate and prune orbit length partition pairs")->fallthrough();
  prune->add_option("weight", opt.weight, "Weight (a perfect square)")->required();
  prune->add_option("--level", opt.level, "Pruning level")->check(CLI::IsMember({"existence", "counting"}));

  auto* search = app.add_subcommand("search", "Exhaustive search for one partition pair")->fallthrough();
  search->add_option("n", opt.n, "Order")->required();
  search->add_option("weight", opt.weight, "Weight")->required();
  search->add_option("olpP", opt.olp_positive, "olp(P), e.g. \"5^2\"")->required();
  search->add_option("olpN", opt.olp_negative, "olp(N), e.g. \"1^1 5^1\"")->required();

  auto* classify = app.add_subcommand("classify", "Classify all odd orders up to --max-n")->fallthrough();
  classify->add_option("weight", opt.weight, "Weight")->required();
  classify->add_option("--max-n", opt.max_n, "Largest order");
  classify->add_option("--check-up-to", opt.check_up_to, "Cross-check rules against search up to this order");

  // Rows such as "-++0+00" would otherwise parse as options: move them
  // behind a "--" separator.
  std::vector<std::string> ordered, rows;
  bool separated = false;
  for (const auto& a : args) {
    if (a == "--") separated = true;
    if (!separated && is_sign_string(a)) rows.push_back(a);
    else ordered.push_back(a);
  }
  if (!rows.empty()) {
    if (!separated) ordered.push_back("--");
    ordered.insert(ordered.end(), rows.begin(), rows.end());
  }
  std::vector<std::string> reversed(ordered.rbegin(), ordered.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  Outcome outcome;
  try {
    if (*verify) outcome = cmd_verify(opt);
    else if (*prune) outcome = cmd_prune(opt);
    else if (*search) outcome = cmd_search(opt);
    else outcome = cmd_classify(opt);
  } catch (const std::exception& e) {
    err << "cwtool: " << e.what() << "\n";
    return exit_usage;
  }

  if (opt.format == "json") out << outcome.report.dump(2) << "\n";
  else out << outcome.text;

  if (!opt.out_file.empty()) {
    std::ofstream file(opt.out_file);
    if (!file) {
      err << "cwtool: cannot write " << opt.out_file << "\n";
      return exit_usage;
    }
    file << outcome.report.dump(2) << "\n";
  }
  return outcome.code;
}

} // namespace cwtool
