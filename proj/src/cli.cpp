#include "slicelab/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "slicelab/applications.hpp"
#include "slicelab/cayley.hpp"
#include "slicelab/deg1.hpp"
#include "slicelab/goodslices.hpp"
#include "slicelab/slices.hpp"
#include "slicelab/suite.hpp"
#include "slicelab/walk.hpp"

namespace slicelab::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  int n = -1;
  int k = -1;
  int d = -1;
  int t = -1;
  std::int64_t p = 0;
  std::string group = "Z2";
  std::string poly;
  std::string point;
  std::string field = "rationals";
  std::string search = "full";
  std::string mode = "assert";
  std::string format;
  std::string out;
  std::optional<std::uint64_t> seed;
  std::size_t threads = 0;
  std::uint64_t samples = 10000;
  int size = -1;
  int fix_ones = 0;
  int max_n = 8;
  bool all = false;
  bool find_shift = false;
  bool to_balanced = false;
  bool scan = false;
  bool no_prune = false;
  bool timing = false;
};

// A finished report: `ok` is false when a checked inequality failed.
struct Report {
  Json body;
  bool ok = true;
};

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

Json rationals(const std::vector<Rational>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(v.str());
  return out;
}

std::uint64_t require_seed(const Options& o, const std::string& command) {
  if (!o.seed) throw Error(command + ": --seed is required");
  return *o.seed;
}

MultilinearPoly parse_poly(const Options& o) {
  if (o.poly.empty()) throw Error("--poly is required");
  return MultilinearPoly::parse(o.poly, o.n, GroupSpec::parse(o.group));
}

bool is_rational_group(const std::string& group) { return group == "Q" || group == "q"; }

// Prime p with q = p^l, or 0 when the group is not cyclic of prime-power order.
std::int64_t prime_of(const GroupSpec& spec) {
  if (!spec.is_cyclic()) return 0;
  std::int64_t q = spec.orders()[0];
  for (std::int64_t f = 2; f * f <= q; ++f) {
    if (q % f == 0) {
      while (q % f == 0) q /= f;
      return q == 1 ? f : 0;
    }
  }
  return q;
}

Report cmd_extremal(const Options& o) {
  const GroupSpec spec = GroupSpec::parse(o.group);
  if (o.search != "full" && o.search != "homogeneous") throw Error("extremal: --mode must be full or homogeneous");
  const SearchMode mode = o.search == "full" ? SearchMode::full : SearchMode::homogeneous;
  const auto start = std::chrono::steady_clock::now();
  ExtremalResult r = extremal_min_fraction(o.n, o.k, o.d, spec, mode, !o.no_prune);
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;

  Report rep;
  rep.body["min"] = r.min.str();
  rep.body["witness"] = r.witness.str();
  rep.body["count_searched"] = r.count_searched;
  if (o.timing) rep.body["seconds"] = elapsed.count();
  rep.body["min_float"] = r.min.to_double();
  if (o.d <= o.k && o.k <= o.n - o.d) {
    Rational bound = suboptimal_bound(o.n, o.k, o.d);
    rep.body["bound"] = bound.str();
    rep.ok = r.min >= bound;
    rep.body["holds"] = rep.ok;
  }
  return rep;
}

Report cmd_walk_spectrum(const Options& o) {
  SpectrumReport s = spectrum(o.n);
  Report rep;
  rep.body["n"] = s.n;
  rep.body["lambda"] = rationals(s.lambdas);
  Json mult = Json::array();
  for (const auto& m : s.multiplicities) mult.push_back(m.get_str());
  rep.body["multiplicity"] = mult;
  rep.body["mu"] = s.mu_exact.str();
  rep.body["mu_float"] = s.mu;
  rep.body["eigenvalues_float"] = s.eigenvalues;
  rep.body["max_deviation_float"] = s.max_deviation;
  rep.body["eigenvectors_exact"] = s.eigenvectors_exact;
  rep.body["trace_identity"] = s.trace_identity;
  rep.body["float_matches"] = s.float_matches;
  Json good = Json::array();
  bool below_good = true;
  for (int t = 1; t <= o.n / 2; ++t) {
    Rational g = matching_stats(o.n, t).good;
    good.push_back(g.str());
    if (s.lambdas[static_cast<std::size_t>(t)] > g) below_good = false;
  }
  rep.body["good_probability"] = good;
  rep.body["lambda_below_good"] = below_good;
  rep.ok = s.eigenvectors_exact && s.trace_identity && s.float_matches && below_good;
  return rep;
}

Report cmd_walk_verify(const Options& o) {
  MultilinearPoly p = parse_poly(o);
  const int d = o.d >= 0 ? o.d : p.degree();
  LowerBoundReport r = verify_lower_bound(p, d);
  Report rep;
  rep.body["n"] = o.n;
  rep.body["poly"] = p.str();
  rep.body["degree"] = r.degree;
  rep.body["density"] = r.density.str();
  rep.body["pair_hit"] = r.pair_hit.str();
  rep.body["bound"] = r.bound.str();
  rep.body["holds"] = r.holds;
  rep.body["pair_hit_float"] = r.pair_hit.to_double();
  rep.body["bound_float"] = r.bound.to_double();
  rep.ok = r.holds;
  return rep;
}

Report cmd_walk_sample(const Options& o) {
  const std::uint64_t seed = require_seed(o, "walk sample");
  MultilinearPoly p = parse_poly(o);
  if (o.n % 2 != 0) throw Error("walk sample: n must be even");
  auto member = [&](Mask x) { return !evaluate(p, SlicePoint{o.n, x}).is_zero(); };
  MonteCarloReport mc = monte_carlo_pair_hit(o.n, member, o.samples, seed);
  const auto points = slice_masks(o.n, o.n / 2);
  const auto nonzero = std::count_if(points.begin(), points.end(), member);
  Rational density(BigInt(static_cast<long>(nonzero)), BigInt(static_cast<unsigned long>(points.size())));
  const int d = o.d >= 0 ? o.d : p.degree();
  Rational bound = density / Rational(big_pow(2, static_cast<unsigned long>(d)));

  Report rep;
  rep.body["n"] = o.n;
  rep.body["poly"] = p.str();
  rep.body["seed"] = seed;
  rep.body["samples"] = mc.samples;
  rep.body["hits"] = mc.hits;
  rep.body["estimate"] = mc.estimate.str();
  rep.body["low_float"] = mc.low;
  rep.body["high_float"] = mc.high;
  rep.body["density"] = density.str();
  rep.body["bound"] = bound.str();
  return rep;
}

std::string subset_text(Mask subset) {
  std::string out = "{";
  for (int i = 1; i <= kMaxVariables; ++i) {
    if (!(subset & bit_of(i))) continue;
    if (out.size() > 1) out += ',';
    out += std::to_string(i);
  }
  return out + "}";
}

Report cmd_cayley(const Options& o) {
  if (o.n < 2 || o.n % 2 != 0) throw Error("cayley: n must be even and at least 2");
  Report rep;
  rep.body["n"] = o.n;
  rep.body["mu_empty"] = mu_empty(o.n).str();
  Json rows = Json::array();
  auto add_row = [&](const char* key, const Json& label, Mask subset) {
    Rational v = cayley_eigenvalue(o.n, subset);
    Json row;
    row[key] = label;
    row["exact"] = v.str();
    row["float"] = v.to_double();
    rows.push_back(row);
  };
  if (o.all) {
    if (o.n > 16) throw GuardError("cayley --all: n must be at most 16");
    for (Mask a = 0; a < (Mask{1} << (o.n - 1)); ++a) add_row("subset", subset_text(a), a);
  } else if (o.size >= 0) {
    if (o.size > o.n - 1) throw Error("cayley: --size must be at most n - 1");
    add_row("size", o.size, full_mask(o.size));
  } else {
    for (int s = 0; s <= o.n - 1; ++s) add_row("size", s, full_mask(s));
  }
  rep.body["rows"] = rows;
  return rep;
}

Report cmd_good_slice(const Options& o) {
  if (o.k < 0 || o.d < 0) throw Error("good-slice: --k and --d must be non-negative");
  if (!is_prime(o.p)) throw Error("good-slice: --p must be prime");
  Report rep;
  rep.body["k"] = o.k;
  rep.body["d"] = o.d;
  rep.body["p"] = o.p;
  const bool good = o.k >= o.d && is_good_slice(o.k, o.d, o.p);
  rep.body["good"] = good;
  rep.body["k_digits"] = PAryDigits::of(o.k, o.p).digits;
  rep.body["d_digits"] = PAryDigits::of(o.d, o.p).digits;
  if (o.k >= o.d) {
    Json lucas = Json::array();
    bool units = true;
    for (int i = 0; i < o.d; ++i) {
      std::int64_t r = lucas_binom_mod_p(o.k - i, o.d - i, o.p);
      lucas.push_back(std::to_string(r));
      if (r == 0) units = false;
    }
    rep.body["binomials_mod_p"] = lucas;
    if (good) {
      rep.body["binomials_invertible"] = units;
      rep.ok = units;
    }
  }
  if (o.find_shift) {
    std::int64_t c = find_good_shift(o.k, o.d, o.p);
    rep.body["shift"] = c;
    rep.body["shifted_k"] = o.k - c;
    const bool valid = o.k - c >= o.d && is_good_slice(o.k - c, o.d, o.p) && c <= 2 * o.d;
    rep.body["shift_valid"] = valid;
    rep.ok = rep.ok && valid;
  }
  return rep;
}

Report cmd_reduce(const Options& o) {
  const std::uint64_t seed = require_seed(o, "reduce");
  if (o.to_balanced == (o.fix_ones > 0)) throw Error("reduce: give exactly one of --to-balanced and --fix-ones");
  MultilinearPoly p = parse_poly(o);
  const int d = o.d >= 0 ? o.d : p.degree();
  const bool nonzero = !is_zero_on_slice(p, o.k);
  Report rep;
  rep.body["n"] = o.n;
  rep.body["k"] = o.k;
  rep.body["poly"] = p.str();
  rep.body["seed"] = seed;
  rep.body["nonzero_on_slice"] = nonzero;

  if (o.to_balanced) {
    Restriction r = random_restriction_to_balanced(p, o.k, seed);
    rep.body["coordinates"] = r.coordinates;
    rep.body["restricted"] = r.poly.str();
    rep.body["restricted_nonzero"] = !is_zero_on_slice(r.poly, o.k);
    if (binomial(o.n, 2 * o.k) <= 1000000) {
      Rational survival = restriction_survival_probability(p, o.k);
      Rational bound = Rational(2 * o.k, o.n).pow(d) * (Rational(1) - Rational(d * d, 2 * o.k));
      rep.body["survival_probability"] = survival.str();
      rep.body["survival_bound"] = bound.str();
      const std::int64_t prime = prime_of(p.spec());
      const bool asserted = nonzero && prime != 0 && o.k >= d && is_good_slice(o.k, d, prime);
      rep.body["asserted"] = asserted;
      rep.body["holds"] = survival >= bound;
      rep.ok = !asserted || survival >= bound;
    }
    return rep;
  }

  Descent r = fix_ones_descent(p, o.k, o.fix_ones, seed);
  rep.body["chosen"] = r.chosen;
  rep.body["restricted"] = r.poly.str();
  rep.body["slice"] = r.slice;
  rep.body["restricted_nonzero"] = !is_zero_on_slice(r.poly, r.slice);
  const auto bad = bad_indices(p, o.k);
  rep.body["bad_indices"] = bad;
  if (nonzero && d <= std::min(o.k, o.n - o.k)) {
    const auto count = static_cast<std::int64_t>(bad.size());
    const std::int64_t rigorous = max_bad_indices(o.n, o.k, d);
    NonrootsReport nr = check_nonroots_inequality(o.n, o.k, d);
    rep.body["max_bad_indices"] = rigorous;
    rep.body["ell"] = nr.ell;
    rep.body["in_asymptotic_range"] = nr.in_asymptotic_range;
    rep.ok = count <= rigorous && (!nr.in_asymptotic_range || count <= nr.ell);
    rep.body["holds"] = rep.ok;
  }
  return rep;
}

ScanMode scan_mode(const Options& o) {
  if (o.mode == "assert") return ScanMode::assert_bound;
  if (o.mode == "report") return ScanMode::report;
  throw Error("--mode must be assert or report");
}

Report cmd_deg1(const Options& o) {
  const GroupSpec spec = GroupSpec::parse(o.group);
  const ScanMode mode = scan_mode(o);
  Report rep;
  if (o.scan == !o.poly.empty()) throw Error("deg1: give exactly one of --scan and --poly");
  if (o.scan) {
    Deg1Scan s = deg1_extremal_scan(o.n, o.k, spec, mode);
    rep.body["min"] = s.min.str();
    rep.body["bound"] = s.bound.str();
    rep.body["witness"] = s.witness.str();
    rep.body["holds"] = s.holds;
    rep.body["asserted"] = s.asserted;
    rep.body["multisets"] = s.multisets;
    rep.body["min_float"] = s.min.to_double();
    rep.ok = !s.asserted || s.holds;
    return rep;
  }
  MultilinearPoly p = parse_poly(o);
  Rational fraction = linear_nonvanish_fraction(p, o.k);
  Rational bound = deg1_bound(o.n, o.k);
  std::vector<GroupElement> a;
  for (int i = 1; i <= o.n; ++i) a.push_back(p.coeff(bit_of(i)));
  const bool asserted = mode == ScanMode::assert_bound && o.n >= 8;
  rep.body["fraction"] = fraction.str();
  rep.body["bound"] = bound.str();
  rep.body["poly"] = p.str();
  rep.body["nae"] = nae(a);
  rep.body["holds"] = fraction >= bound;
  rep.body["asserted"] = asserted;
  rep.body["fraction_float"] = fraction.to_double();
  rep.ok = !asserted || fraction >= bound;
  return rep;
}

template <class Poly>
Report junta_report(const Poly& f, const Options& o, const std::optional<Rational>& floor) {
  const int d = o.d >= 0 ? o.d : f.degree();
  InfluenceTable table = influence_table(f, o.k);
  InfluenceBoundReport bound = influence_lower_bound_check(f, d, o.k, floor);
  TotalInfluenceReport total = total_influence_degree_check(f, d, o.k);
  Report rep;
  rep.body["n"] = o.n;
  rep.body["k"] = o.k;
  rep.body["d"] = d;
  rep.body["poly"] = f.str();
  Json rows = Json::array();
  for (const auto& [pair, v] : table.inf) {
    Json row;
    row["i"] = pair.first;
    row["j"] = pair.second;
    row["influence"] = v.str();
    rows.push_back(row);
  }
  rep.body["influences"] = rows;
  rep.body["total"] = table.total.str();
  rep.body["support"] = junta_support(table);
  Json matching = Json::array();
  for (const auto& [i, j] : influence_matching(table)) matching.push_back({i, j});
  rep.body["matching"] = matching;
  rep.body["floor"] = bound.floor.str();
  rep.body["min_positive"] = bound.min_positive.str();
  rep.body["positive_pairs"] = bound.positive_pairs;
  rep.body["matches_difference"] = bound.matches_difference;
  rep.body["bound_holds"] = bound.holds;
  rep.body["total_holds"] = total.holds;
  rep.ok = bound.matches_difference && bound.holds && total.holds;
  return rep;
}

Report cmd_junta(const Options& o) {
  if (o.poly.empty()) throw Error("junta: --poly is required");
  if (is_rational_group(o.group)) return junta_report(RationalPoly::parse(o.poly, o.n), o, std::nullopt);
  return junta_report(parse_poly(o), o, std::nullopt);
}

Report cmd_cover(const Options& o) {
  if (o.point.empty()) throw Error("cover: --point is required");
  SlicePoint a = SlicePoint::parse(o.point);
  if (a.n != o.n) throw Error("cover: --point must have n characters");
  const int k = o.k >= 0 ? o.k : a.weight();
  Field field;
  if (o.field == "rationals") {
    field = Field::rationals;
  } else if (o.field == "binary") {
    field = Field::binary;
  } else {
    throw Error("cover: --field must be rationals or binary");
  }
  auto forms = hyperplane_cover(o.n, k, a, field);
  Report rep;
  rep.body["n"] = o.n;
  rep.body["k"] = k;
  rep.body["point"] = a.str();
  rep.body["field"] = o.field;
  Json texts = Json::array();
  for (const auto& f : forms) texts.push_back(f.str());
  rep.body["forms"] = texts;
  rep.body["size"] = forms.size();
  const bool verified = verify_cover(o.n, k, a, forms);
  bool impossible = true;
  for (int m = 0; m < std::min(k, o.n - k); ++m) impossible = impossible && cover_impossibility(o.n, k, m);
  rep.body["verified"] = verified;
  rep.body["fewer_impossible"] = impossible;
  rep.ok = verified && impossible;
  return rep;
}

Report cmd_matching_stats(const Options& o) {
  if (o.n < 2 || o.n % 2 != 0) throw Error("matching-stats: n must be even and at least 2");
  Report rep;
  rep.body["n"] = o.n;
  Json rows = Json::array();
  const int lo = o.t >= 0 ? o.t : 1;
  const int hi = o.t >= 0 ? o.t : o.n / 2;
  for (int t = lo; t <= hi; ++t) {
    MatchingStats s = matching_stats(o.n, t);
    Rational lambda = eigenvalue_exact(o.n, t);
    Json row;
    row["t"] = t;
    row["good"] = s.good.str();
    row["self_good"] = s.self_good.str();
    row["lambda"] = lambda.str();
    row["lambda_below_good"] = lambda <= s.good;
    if (lambda > s.good) rep.ok = false;
    rows.push_back(row);
  }
  rep.body["rows"] = rows;
  return rep;
}

Report cmd_verify_all(const Options& o) {
  const std::uint64_t seed = o.seed.value_or(7);
  Report rep;
  rep.body["max_n"] = o.max_n;
  rep.body["seed"] = seed;
  Json checks = Json::array();
  for (const auto& c : run_suite(o.max_n, seed)) {
    Json j;
    j["name"] = c.name;
    j["passed"] = c.passed;
    j["instances"] = c.instances;
    Json facts = Json::object();
    for (const auto& [key, value] : c.facts) facts[key] = value;
    j["facts"] = facts;
    j["failures"] = c.failures;
    checks.push_back(j);
    rep.ok = rep.ok && c.passed;
  }
  rep.body["passed"] = rep.ok;
  rep.body["checks"] = checks;
  return rep;
}

std::string csv_field(const Json& v) {
  std::string s;
  if (v.is_string()) {
    s = v.get<std::string>();
  } else if (v.is_number_float()) {
    s = format_double(v.get<double>());
  } else if (v.is_array()) {
    for (const auto& x : v) s += (s.empty() ? "" : ";") + csv_field(x);
  } else {
    s = v.dump();
  }
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
  return quoted + "\"";
}

std::string to_csv(const Json& body) {
  std::string out;
  const char* table = body.contains("checks") ? "checks" : "rows";
  if (body.contains(table) && body[table].is_array() && !body[table].empty()) {
    const Json& rows = body[table];
    std::string header;
    for (const auto& [key, value] : rows[0].items()) header += (header.empty() ? "" : ",") + key;
    out += header + "\n";
    for (const auto& row : rows) {
      std::string line;
      bool first = true;
      for (const auto& [key, value] : row.items()) {
        line += (first ? "" : ",") + csv_field(value);
        first = false;
      }
      out += line + "\n";
    }
    return out;
  }
  out += "key,value\n";
  for (const auto& [key, value] : body.items()) out += key + "," + csv_field(value) + "\n";
  return out;
}

std::string render(const Json& body, const std::string& format) {
  if (format == "json") return body.dump() + "\n";
  if (format == "csv") return to_csv(body);
  throw Error("--format must be json or csv");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact computations on Boolean slices", "slicelab"};
  app.require_subcommand(1);

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format: json or csv");
    sub->add_option("--out", o.out, "Write the report to this file");
    sub->add_option("--threads", o.threads, "Worker thread cap (0 = hardware concurrency)");
    return sub;
  };

  auto* extremal = common(app.add_subcommand("extremal", "Exhaustive minimum non-vanishing fraction"));
  extremal->add_option("--n", o.n)->required();
  extremal->add_option("--k", o.k)->required();
  extremal->add_option("--d", o.d)->required();
  extremal->add_option("--group", o.group);
  extremal->add_option("--mode", o.search, "full or homogeneous");
  extremal->add_flag("--no-prune", o.no_prune, "Search every leading coefficient");
  extremal->add_flag("--timing", o.timing, "Include wall-clock seconds");

  auto* walk = app.add_subcommand("walk", "The matching walk on the balanced slice");
  walk->require_subcommand(1);
  auto* spectrum_cmd = common(walk->add_subcommand("spectrum", "Exact and float spectrum of the walk"));
  spectrum_cmd->add_option("--n", o.n)->required();
  auto* verify_cmd = common(walk->add_subcommand("verify", "Pair-hit lower bound for the nonzero set of P"));
  verify_cmd->add_option("--n", o.n)->required();
  verify_cmd->add_option("--poly", o.poly)->required();
  verify_cmd->add_option("--group", o.group);
  verify_cmd->add_option("--d", o.d);
  auto* sample_cmd = common(walk->add_subcommand("sample", "Monte Carlo pair-hit estimate"));
  sample_cmd->add_option("--n", o.n)->required();
  sample_cmd->add_option("--poly", o.poly)->required();
  sample_cmd->add_option("--group", o.group);
  sample_cmd->add_option("--d", o.d);
  sample_cmd->add_option("--samples", o.samples);
  sample_cmd->add_option("--seed", o.seed);

  auto* cayley = common(app.add_subcommand("cayley", "Character eigenvalues of the even-weight Cayley graph"));
  cayley->add_option("--n", o.n)->required();
  auto* all_flag = cayley->add_flag("--all", o.all, "Every subset of [n-1]");
  cayley->add_option("--size", o.size, "The subset {1..s}")->excludes(all_flag);

  auto* good = common(app.add_subcommand("good-slice", "(d,p)-goodness and good shifts"));
  good->add_option("--k", o.k)->required();
  good->add_option("--d", o.d)->required();
  good->add_option("--p", o.p)->required();
  good->add_flag("--find-shift", o.find_shift);

  auto* reduce = common(app.add_subcommand("reduce", "Restrictions between slices"));
  reduce->add_option("--n", o.n)->required();
  reduce->add_option("--k", o.k)->required();
  reduce->add_option("--poly", o.poly)->required();
  reduce->add_option("--group", o.group);
  reduce->add_option("--d", o.d);
  reduce->add_flag("--to-balanced", o.to_balanced);
  reduce->add_option("--fix-ones", o.fix_ones);
  reduce->add_option("--seed", o.seed);

  auto* deg1 = common(app.add_subcommand("deg1", "Linear polynomials on a slice"));
  deg1->add_option("--n", o.n)->required();
  deg1->add_option("--k", o.k)->required();
  deg1->add_option("--group", o.group);
  deg1->add_flag("--scan", o.scan);
  deg1->add_option("--poly", o.poly);
  deg1->add_option("--mode", o.mode, "assert or report");

  auto* junta = common(app.add_subcommand("junta", "Influences, junta support and bounds"));
  junta->add_option("--n", o.n)->required();
  junta->add_option("--k", o.k)->required();
  junta->add_option("--poly", o.poly)->required();
  junta->add_option("--group", o.group, "A finite group, or Q for rational coefficients");
  junta->add_option("--d", o.d);

  auto* cover = common(app.add_subcommand("cover", "Hyperplane cover of a slice minus one point"));
  cover->add_option("--n", o.n)->required();
  cover->add_option("--k", o.k);
  cover->add_option("--point", o.point)->required();
  cover->add_option("--field", o.field, "rationals or binary");

  auto* stats = common(app.add_subcommand("matching-stats", "Good-matching probabilities against lambda_t"));
  stats->add_option("--n", o.n)->required();
  stats->add_option("--t", o.t);

  auto* verify_all = common(app.add_subcommand("verify-all", "Run every check up to a size limit"));
  verify_all->add_option("--max-n", o.max_n);
  verify_all->add_option("--seed", o.seed);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    set_thread_count(o.threads);
    Report rep;
    std::string default_format = "json";
    if (extremal->parsed()) {
      rep = cmd_extremal(o);
    } else if (spectrum_cmd->parsed()) {
      rep = cmd_walk_spectrum(o);
    } else if (verify_cmd->parsed()) {
      rep = cmd_walk_verify(o);
    } else if (sample_cmd->parsed()) {
      rep = cmd_walk_sample(o);
    } else if (cayley->parsed()) {
      rep = cmd_cayley(o);
      default_format = "csv";
    } else if (good->parsed()) {
      rep = cmd_good_slice(o);
    } else if (reduce->parsed()) {
      rep = cmd_reduce(o);
    } else if (deg1->parsed()) {
      rep = cmd_deg1(o);
    } else if (junta->parsed()) {
      rep = cmd_junta(o);
    } else if (cover->parsed()) {
      rep = cmd_cover(o);
    } else if (stats->parsed()) {
      rep = cmd_matching_stats(o);
    } else {
      rep = cmd_verify_all(o);
    }
    const std::string text = render(rep.body, o.format.empty() ? default_format : o.format);
    if (o.out.empty()) {
      out << text;
    } else {
      std::ofstream file(o.out, std::ios::binary);
      if (!file) throw Error("cannot open " + o.out + " for writing");
      file << text;
    }
    if (!rep.ok) err << "assertion failed: a checked inequality does not hold\n";
    return rep.ok ? 0 : 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace slicelab::cli
