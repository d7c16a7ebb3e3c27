#include "tourpaths/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "tourpaths/constructions.hpp"
#include "tourpaths/hop_complete.hpp"
#include "tourpaths/hop_paths.hpp"
#include "tourpaths/io.hpp"
#include "tourpaths/oracles.hpp"
#include "tourpaths/rng.hpp"
#include "tourpaths/shortcut_tree.hpp"
#include "tourpaths/ztable.hpp"

namespace tourpaths::cli {

namespace fs = std::filesystem;

namespace {

// Input or usage problems surfaced as exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Row = std::vector<std::string>;
using Table = std::vector<Row>;

std::string num(std::int64_t v) { return std::to_string(v); }
std::string num(std::size_t v) { return std::to_string(v); }

std::string real(double v, int digits = 3) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::string verdict(bool ok) { return ok ? "pass" : "fail"; }

void emit(const Table& rows, char sep, bool human, std::ostream& out) {
  if (!human) {
    for (const Row& r : rows) {
      for (std::size_t i = 0; i < r.size(); ++i) out << (i ? std::string(1, sep) : "") << r[i];
      out << '\n';
    }
    return;
  }
  std::vector<std::size_t> width;
  for (const Row& r : rows)
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (width.size() <= i) width.push_back(0);
      width[i] = std::max(width[i], r[i].size());
    }
  for (const Row& r : rows) {
    std::string line;
    for (std::size_t i = 0; i < r.size(); ++i) {
      line += r[i];
      if (i + 1 < r.size()) line += std::string(width[i] - r[i].size() + 2, ' ');
    }
    out << line << '\n';
  }
}

std::string read_text(const std::string& path) {
  if (path == "-") {
    std::ostringstream s;
    s << std::cin.rdbuf();
    return s.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path.string());
  out << text;
  if (!out) throw UsageError("write failed for " + path.string());
}

void prepare_dir(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw UsageError("cannot create directory " + dir + ": " + ec.message());
}

Tournament load(const std::string& path) { return parse_tournament(read_text(path)); }

// ---------------------------------------------------------------- gen

struct GenConfig {
  std::string type;
  std::size_t n = 0;
  std::optional<std::size_t> k;
  std::uint64_t seed = 0;
  std::size_t budget = kDefaultFkBudget;
  std::string fk_cache;
  std::string output = "-";
};

int cmd_gen(const GenConfig& c, std::ostream& out) {
  if (c.k && c.type != "rnk") throw UsageError("--k only applies to --type rnk");
  if (c.type == "rnk" && !c.k) throw UsageError("--type rnk needs --k");
  Tournament t;
  if (c.type == "transitive") {
    t = make_transitive(c.n);
  } else if (c.type == "rn") {
    t = make_rn(c.n);
  } else if (c.type == "paley") {
    t = make_paley(c.n);
  } else if (c.type == "random") {
    t = make_random(c.n, Seed{c.seed});
  } else {
    const std::size_t k = *c.k;
    if (!c.fk_cache.empty()) {
      const Tournament block = load_or_find_fk(k, Seed{c.seed}, c.budget, c.fk_cache);
      if (c.n == 0 || c.n % block.size() != 0)
        throw UsageError("n must be a positive multiple of the block size " + std::to_string(block.size()));
      t = make_block_tournament(block, c.n / block.size());
    } else {
      t = make_rnk(c.n, k, Seed{c.seed}, c.budget);
    }
  }
  const std::string text = serialize_tournament(t);
  if (c.output == "-")
    out << text;
  else
    write_text(c.output, text);
  return kExitOk;
}

// ---------------------------------------------------------------- analyze

struct AnalyzeConfig {
  std::string input;
  bool human = false;
  std::string certificates;
};

int cmd_analyze(const AnalyzeConfig& c, std::ostream& out) {
  const Tournament t = load(c.input);
  const std::size_t n = t.size();

  const VertexPath hop_path = hop_rich_path(t);
  const bool hop_valid = is_hamiltonian_path(t, hop_path);
  const std::int64_t hops = hop_valid ? count_hops(t, hop_path) : -1;
  const std::int64_t hop_bound = hop_lower_bound(n);
  const bool hops_ok = hop_valid && hops >= hop_bound;

  const ShortcutTree tree = build_shortcut_tree(t);
  const bool tree_valid = validate_tree(t, tree);
  const std::int64_t shortcuts = tree_valid ? tree_shortcuts(t, tree) : -1;
  const std::int64_t z = z_table(n).z[n];
  const std::int64_t theorem = bound_ceil(shortcut_bounds(n).theorem_lower);
  const bool tree_ok = tree_valid && shortcuts >= z && shortcuts >= theorem;

  const VertexPath square = square_path(t);
  const bool square_valid = is_directed_path(t, square) && is_hop_complete(t, square);
  const std::int64_t square_bound = square_length_bound(n);
  const bool square_ok = square_valid && static_cast<std::int64_t>(square.size()) >= square_bound;

  if (!c.certificates.empty()) {
    prepare_dir(c.certificates);
    const fs::path dir(c.certificates);
    write_text(dir / "hop_path.txt", serialize_path(hop_path));
    write_text(dir / "shortcut_tree.txt", serialize_tree(tree));
    write_text(dir / "square_path.txt", serialize_path(square));
    write_text(dir / "square_report.txt", square_report(n, square.size()) + "\n");
  }

  const Row header{"n",         "hops",          "hop_bound", "hops_ok",    "tree_shortcuts", "z_bound",
                   "theorem_bound", "tree_ok", "square_len", "square_bound", "square_ok"};
  const Row values{num(n),        num(hops),         num(hop_bound),          verdict(hops_ok),
                   num(shortcuts), num(z),          num(theorem),            verdict(tree_ok),
                   num(square.size()), num(square_bound), verdict(square_ok)};
  if (c.human) {
    Table rows;
    for (std::size_t i = 0; i < header.size(); ++i) rows.push_back({header[i], values[i]});
    emit(rows, '\t', true, out);
    out << square_report(n, square.size()) << '\n';
  } else {
    emit({header, values}, '\t', false, out);
  }
  return hops_ok && tree_ok && square_ok ? kExitOk : kExitBoundViolated;
}

// ---------------------------------------------------------------- ztable

struct ZConfig {
  std::size_t max = 0;
  bool check = false;
  bool human = false;
};

int cmd_ztable(const ZConfig& c, std::ostream& out, std::ostream& err) {
  const ZTable table = z_table(c.max);
  if (c.human) {
    Table rows{{"n", "z", "bound10", "bound5", "ok10", "ok5"}};
    for (std::size_t n = 1; n <= table.max_n(); ++n)
      rows.push_back({num(n), num(table.z[n]), num(table.bound10[n]), num(table.bound5[n]), table.ok10[n] ? "1" : "0",
                      table.ok5[n] ? "1" : "0"});
    emit(rows, ',', true, out);
  } else {
    out << ztable_csv(table);
  }
  if (c.check && !ztable_bounds_hold(table)) {
    for (std::size_t n = 1; n <= table.max_n(); ++n)
      if (!table.ok10[n] || (n <= kBound5Range && !table.ok5[n])) err << "bound violated at n=" << n << '\n';
    return kExitBoundViolated;
  }
  return kExitOk;
}

// ---------------------------------------------------------------- oracle

struct OracleConfig {
  std::string input;
  std::string what = "all";
  bool override_cap = false;
  std::optional<std::size_t> cap;
  std::string witness;
  bool human = false;
};

int cmd_oracle(const OracleConfig& c, std::ostream& out) {
  const Tournament t = load(c.input);
  const std::size_t n = t.size();
  auto cap_for = [&](OracleCap def) { return OracleCap{c.cap.value_or(def.limit), c.override_cap}; };
  const bool save = !c.witness.empty();
  if (save) prepare_dir(c.witness);
  const fs::path dir(c.witness);

  if (c.what == "all") {
    if (c.cap) throw UsageError("--cap needs a single --what statistic");
    const OracleReport r = oracle_report(t, c.override_cap);
    if (save) {
      write_text(dir / "hops.txt", serialize_path(r.hops_witness));
      write_text(dir / "shortcuts.txt", serialize_path(r.shortcuts_witness));
      write_text(dir / "square.txt", serialize_path(r.square_witness));
      write_text(dir / "tree.txt", serialize_tree(r.tree_witness));
      write_text(dir / "beta.txt", serialize_path(r.beta_witness));
    }
    std::istringstream h(oracle_report_header()), v(oracle_report_row(r));
    Row hr, vr;
    for (std::string f; std::getline(h, f, '\t');) hr.push_back(f);
    for (std::string f; std::getline(v, f, '\t');) vr.push_back(f);
    emit({hr, vr}, '\t', c.human, out);
    return kExitOk;
  }

  std::int64_t value = 0;
  if (c.what == "tree") {
    const auto r = best_tree_exact(t, cap_for(kTreeCap));
    value = r.value;
    if (save) write_text(dir / "tree.txt", serialize_tree(r.witness));
  } else {
    Exact<VertexPath> r;
    if (c.what == "hops")
      r = max_hops_exact(t, cap_for(kHopsCap));
    else if (c.what == "min-hops")
      r = min_hops_exact(t, cap_for(kHopsCap));
    else if (c.what == "shortcuts")
      r = max_shortcuts_exact(t, cap_for(kShortcutsCap));
    else if (c.what == "square")
      r = longest_square_exact(t, cap_for(kSquareCap));
    else if (c.what == "beta")
      r = beta_exact(t, cap_for(kBetaCap));
    else
      r = max_transitive_exact(t, cap_for(kTransitiveCap));
    value = r.value;
    if (save) write_text(dir / (c.what + ".txt"), serialize_path(r.witness));
  }
  emit({{"n", c.what}, {num(n), num(value)}}, '\t', c.human, out);
  return kExitOk;
}

// ---------------------------------------------------------------- verify suites

std::uint64_t labelled_count(std::size_t n) { return std::uint64_t{1} << (n * (n - 1) / 2); }

std::size_t or_default(std::size_t v, std::size_t d) { return v == 0 ? d : v; }

CheckRow count_row(const std::string& check, std::uint64_t good, std::uint64_t total) {
  return {check, num(static_cast<std::size_t>(total)), num(static_cast<std::size_t>(good)), good == total};
}

std::vector<CheckRow> suite_h10(const SuiteOptions& o) {
  std::vector<CheckRow> rows;
  for (std::size_t n = 3; n <= 6; ++n) {
    const SmallSuiteReport r = exhaustive_small_suite(n);
    rows.push_back({"n=" + num(n) + " min max-hops over " + std::to_string(r.tournaments) + " tournaments",
                    num(r.expected), num(r.min_max_hops), r.min_max_hops == r.expected});
    if (r.minimizers_are_rn)
      rows.push_back({"n=" + num(n) + " minimisers isomorphic to R_" + num(n), "yes",
                      *r.minimizers_are_rn ? "yes" : "no", *r.minimizers_are_rn});
  }
  if (o.full) {
    const SmallSuiteReport r = exhaustive_small_suite(7, true);
    rows.push_back({"n=7 min max-hops over " + std::to_string(r.tournaments) + " tournaments", num(r.expected),
                    num(r.min_max_hops), r.pass});
  }
  const std::int64_t paley = max_hops_exact(make_paley(7)).value;
  rows.push_back({"paley7 max-hops >= 3", ">=3", num(paley), paley >= 3});
  const std::size_t trials = or_default(o.trials, 20);
  for (std::size_t n = 7; n <= 10; ++n) {
    const std::int64_t g = hop_guarantee(n);
    const std::int64_t rn = max_hops_exact(make_rn(n)).value;
    rows.push_back({"R_" + num(n) + " max-hops", num(g), num(rn), rn == g});
    std::uint64_t exact_ok = 0, built_ok = 0;
    for (std::size_t i = 0; i < trials; ++i) {
      const Tournament t = make_random(n, Seed{derive_seed(o.seed, n * 1000 + i)});
      exact_ok += max_hops_exact(t).value >= g;
      const VertexPath p = hop_rich_path(t);
      built_ok += is_hamiltonian_path(t, p) && count_hops(t, p) >= g;
    }
    rows.push_back(count_row("n=" + num(n) + " random max-hops >= " + num(g), exact_ok, trials));
    rows.push_back(count_row("n=" + num(n) + " random hop_rich_path >= " + num(g), built_ok, trials));
  }
  return rows;
}

std::vector<CheckRow> suite_table1(const SuiteOptions&) {
  static const std::pair<std::size_t, std::int64_t> kRows[] = {
      {18, 74},     {50, 618},    {100, 2508},  {150, 5657},  {200, 10062}, {250, 15696}, {300, 22635},
      {350, 30805}, {400, 40219}, {450, 50874}, {500, 62765}, {550, 75965}, {600, 90415}};
  const ZTable z = z_table(600);
  std::vector<CheckRow> rows;
  for (auto [n, v] : kRows) rows.push_back({"z(" + num(n) + ")", num(v), num(z.z[n]), z.z[n] == v});
  return rows;
}

std::vector<CheckRow> suite_mv(const SuiteOptions& o) {
  const std::size_t n = or_default(o.n, 50);
  const std::size_t trials = or_default(o.trials, 100);
  if (n > kBruteMiddleLimit) throw UsageError("mv: n above " + std::to_string(kBruteMiddleLimit));
  std::vector<CheckRow> rows;
  std::uint64_t agree_all = 0, lemma_ok = 0;
  for (std::size_t i = 0; i < trials; ++i) {
    const Tournament t = make_random(n, Seed{derive_seed(o.seed, i)});
    const std::vector<std::int64_t> m = middle_counts(t);
    std::size_t agree = 0;
    for (Vertex v = 0; v < n; ++v) agree += m[v] == middle_count_brute(t, v);
    rows.push_back({"trial " + num(i) + " formula = brute", num(n), num(agree), agree == n});
    agree_all += agree == n;
    lemma_ok += *std::max_element(m.begin(), m.end()) >= middle_lemma_bound(n);
  }
  rows.push_back(count_row("formula/brute agreement", agree_all, trials));
  rows.push_back(count_row("max m(v) >= " + num(middle_lemma_bound(n)), lemma_ok, trials));
  return rows;
}

std::vector<CheckRow> suite_delta2(const SuiteOptions& o) {
  std::vector<CheckRow> rows;
  for (std::size_t n = 2; n <= 5; ++n) {
    const std::uint64_t total = labelled_count(n);
    const std::int64_t need = bound_ceil(delta2_bound(n));
    std::uint64_t good = 0;
    for (std::uint64_t mask = 0; mask < total; ++mask) good += delta2(tournament_from_mask(n, mask)).score >= need;
    rows.push_back(count_row("n=" + num(n) + " all labelled: score >= " + num(need), good, total));
  }
  const std::size_t trials = or_default(o.trials, 1000);
  std::uint64_t good = 0;
  for (std::size_t i = 0; i < trials; ++i) {
    const std::uint64_t s = derive_seed(o.seed, i);
    const std::size_t n = o.n ? o.n : 2 + s % 499;
    const Tournament t = make_random(n, Seed{s});
    good += delta2(t).score >= bound_ceil(delta2_bound(n));
  }
  rows.push_back(count_row(o.n ? "random n=" + num(o.n) : std::string("random 2<=n<=500"), good, trials));
  return rows;
}

std::vector<CheckRow> suite_identity(const SuiteOptions& o) {
  std::vector<CheckRow> rows;
  auto holds = [](const Tournament& t) {
    return max_shortcuts_exact(t).value == beta_exact(t).value - static_cast<std::int64_t>(t.size() - 1);
  };
  for (std::size_t n = 1; n <= 5; ++n) {
    const std::uint64_t total = n == 1 ? 1 : labelled_count(n);
    std::uint64_t good = 0;
    for (std::uint64_t mask = 0; mask < total; ++mask) good += holds(n == 1 ? make_transitive(1) : tournament_from_mask(n, mask));
    rows.push_back(count_row("n=" + num(n) + " all labelled", good, total));
  }
  const std::size_t trials = or_default(o.trials, 200);
  for (std::size_t n = 6; n <= 8; ++n) {
    std::uint64_t good = 0;
    for (std::size_t i = 0; i < trials; ++i) good += holds(make_random(n, Seed{derive_seed(o.seed, n * 100000 + i)}));
    rows.push_back(count_row("n=" + num(n) + " random", good, trials));
  }
  return rows;
}

// Largest number of path vertices falling into one block of `block` vertices.
std::size_t max_per_block(const VertexPath& p, std::size_t block) {
  std::vector<std::size_t> per;
  for (Vertex v : p) {
    if (per.size() <= v / block) per.resize(v / block + 1, 0);
    ++per[v / block];
  }
  return per.empty() ? 0 : *std::max_element(per.begin(), per.end());
}

std::vector<CheckRow> suite_rnk_power(const SuiteOptions& o) {
  std::vector<CheckRow> rows;
  const Tournament r12 = make_rnk(12, 2, Seed{o.seed});
  const auto sq = longest_square_exact(r12);
  rows.push_back({"R(12,2) longest square <= 8", "<=8", num(sq.value), sq.value <= 8});
  rows.push_back({"R(12,2) longest square regression", "8", num(sq.value), sq.value == 8});
  rows.push_back({"R(12,2) witness vertices per block", "<=2", num(max_per_block(sq.witness, 3)),
                  max_per_block(sq.witness, 3) <= 2});
  const VertexPath built = square_path(r12);
  rows.push_back({"R(12,2) square_path within [bound, 8]", num(square_length_bound(12)) + "..8", num(built.size()),
                  is_hop_complete(r12, built) && static_cast<std::int64_t>(built.size()) >= square_length_bound(12) &&
                      built.size() <= 8});
  const bool paley_t4 = has_transitive_k(make_paley(7), 4);
  rows.push_back({"paley7 has T_4", "no", paley_t4 ? "yes" : "no", !paley_t4});
  const Tournament r14 = make_rnk(14, 3, Seed{o.seed});
  const auto cube = longest_power_exact(r14, 3, OracleCap{14, true});
  rows.push_back({"R(14,3) longest cube <= 6", "<=6", num(cube.value), cube.value <= 6});
  const Tournament f4 = find_fk(4, Seed{o.seed});
  const bool f4_t5 = has_transitive_k(f4, 5);
  rows.push_back({"F_4 (" + num(f4.size()) + " vertices) has T_5", "no", f4_t5 ? "yes" : "no", !f4_t5 && f4.size() >= 4});
  return rows;
}

std::vector<CheckRow> suite_zbounds(const SuiteOptions& o) {
  const std::size_t max_n = o.n ? o.n : (o.full ? kBound5Range : 16383);
  const ZTable z = z_table(max_n);
  std::uint64_t ok10 = 0, ok5 = 0;
  const std::size_t range5 = std::min(max_n, kBound5Range);
  for (std::size_t n = 1; n <= max_n; ++n) ok10 += z.ok10[n];
  for (std::size_t n = 1; n <= range5; ++n) ok5 += z.ok5[n];
  std::vector<CheckRow> rows;
  rows.push_back(count_row("z(n) >= n^2/4+(n ln n)/10-80 for n<=" + num(max_n), ok10, max_n));
  rows.push_back(count_row("z(n) >= n^2/4+(n ln n)/5-3122 for n<=" + num(range5), ok5, range5));
  if (max_n >= 18) {
    const std::int64_t gap = z.z[18] - z.bound10[18];
    rows.push_back({"gap at n=18", "67", num(gap), gap == 67});
  }
  return rows;
}

// ---------------------------------------------------------------- experiment

struct ExperimentConfig {
  std::size_t n = 0;
  std::size_t trials = 10;
  std::uint64_t seed = 0;
  std::size_t cap = kTransitiveCap.limit;
  bool human = false;
};

int cmd_experiment(const ExperimentConfig& c, std::ostream& out) {
  const std::size_t n = c.n;
  const std::int64_t z = z_table(n).z[n];
  const ShortcutBounds b = shortcut_bounds(n);
  const std::int64_t middle_need = middle_lemma_bound(n);
  const double log_cap = n > 1 ? 3 * std::log2(static_cast<double>(n)) : 0.0;
  const bool exact_tree = n <= kTreeCap.limit;

  Table rows{{"trial", "seed", "n", "max_middle", "middle_bound", "middle_ok", "transitive", "transitive_exact",
              "three_log2_n", "transitive_ok", "tree_shortcuts", "z", "theorem_lower", "tree_ok", "best_tree",
              "random_upper", "upper_ok"}};
  bool proven_ok = true;
  for (std::size_t i = 0; i < c.trials; ++i) {
    const std::uint64_t s = derive_seed(c.seed, i);
    const Tournament t = make_random(n, Seed{s});
    const std::vector<std::int64_t> m = middle_counts(t);
    const std::int64_t max_m = *std::max_element(m.begin(), m.end());
    const bool middle_ok = max_m >= middle_need;

    const bool exact_tr = n <= c.cap;
    const std::size_t tr = exact_tr ? static_cast<std::size_t>(max_transitive_exact(t, OracleCap{c.cap, true}).value)
                                    : stearns_transitive(t).size();
    const bool tr_ok = static_cast<double>(tr) <= log_cap + kBoundEpsilon;

    const std::int64_t sc = tree_shortcuts(t, build_shortcut_tree(t));
    const bool tree_ok = sc >= z && meets(sc, b.theorem_lower);
    const std::int64_t best = exact_tree ? best_tree_exact(t).value : sc;
    const bool upper_ok = static_cast<double>(best) <= b.random_upper + kBoundEpsilon;

    proven_ok = proven_ok && middle_ok && tree_ok;
    rows.push_back({num(i), std::to_string(s), num(n), num(max_m), num(middle_need), middle_ok ? "1" : "0", num(tr),
                    exact_tr ? "1" : "0", real(log_cap), tr_ok ? "1" : "0", num(sc), num(z),
                    num(bound_ceil(b.theorem_lower)), tree_ok ? "1" : "0", exact_tree ? num(best) : "",
                    real(b.random_upper), upper_ok ? "1" : "0"});
  }
  emit(rows, ',', c.human, out);
  return proven_ok ? kExitOk : kExitBoundViolated;
}

}  // namespace

std::vector<CheckRow> run_suite(const std::string& name, const SuiteOptions& o) {
  if (name == "h10") return suite_h10(o);
  if (name == "table1") return suite_table1(o);
  if (name == "mv") return suite_mv(o);
  if (name == "delta2") return suite_delta2(o);
  if (name == "identity-s-beta") return suite_identity(o);
  if (name == "rnk-power") return suite_rnk_power(o);
  if (name == "zbounds") return suite_zbounds(o);
  throw std::invalid_argument("unknown suite " + name);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hop-rich paths, shortcut trees and hop-complete paths in tournaments", "tourpaths"};
  app.require_subcommand(1);

  GenConfig gen;
  auto* g = app.add_subcommand("gen", "Write a tournament in the canonical format");
  g->add_option("--type", gen.type, "transitive | rn | rnk | paley | random")
      ->required()
      ->check(CLI::IsMember({"transitive", "rn", "rnk", "paley", "random"}));
  g->add_option("--n", gen.n, "Vertex count (prime q for paley)")->required()->check(CLI::PositiveNumber);
  g->add_option("--k", gen.k, "Power order for rnk")->check(CLI::Range(2, static_cast<int>(kMaxSearchK)));
  g->add_option("--seed", gen.seed, "Seed for random and for the F_k search");
  g->add_option("--budget", gen.budget, "Flip budget of the F_k search");
  g->add_option("--fk-cache", gen.fk_cache, "File caching the F_k witness");
  g->add_option("-o,--output", gen.output, "Output file, '-' for stdout");

  AnalyzeConfig an;
  auto* a = app.add_subcommand("analyze", "Run the three constructions and compare with their bounds");
  a->add_option("input", an.input, "Tournament file, '-' for stdin")->required();
  a->add_flag("--human", an.human, "Aligned key/value output");
  a->add_option("--certificates", an.certificates, "Directory for path and tree certificates");

  ZConfig zc;
  auto* zt = app.add_subcommand("ztable", "Print z(1..N) with the lower-bound columns");
  zt->add_option("--max", zc.max, "Largest n")->required()->check(CLI::PositiveNumber);
  zt->add_flag("--check", zc.check, "Exit 1 if a bound fails inside its range");
  zt->add_flag("--human", zc.human, "Aligned columns");

  OracleConfig oc;
  auto* orc = app.add_subcommand("oracle", "Exact extremal values of a small tournament");
  orc->add_option("input", oc.input, "Tournament file, '-' for stdin")->required();
  orc->add_option("--what", oc.what, "hops | min-hops | shortcuts | square | tree | beta | transitive | all")
      ->check(CLI::IsMember({"hops", "min-hops", "shortcuts", "square", "tree", "beta", "transitive", "all"}));
  orc->add_flag("--override", oc.override_cap, "Allow sizes above the cap");
  orc->add_option("--cap", oc.cap, "Replace the default cap of the chosen statistic");
  orc->add_option("--witness", oc.witness, "Directory for witness files");
  orc->add_flag("--human", oc.human, "Aligned columns");

  std::string suite;
  SuiteOptions so;
  bool verify_human = false;
  auto* ver = app.add_subcommand("verify", "Run a named invariant suite");
  ver->add_option("--suite", suite, "Suite name")->required()->check(CLI::IsMember(suite_names()));
  ver->add_option("--n", so.n, "Size override");
  ver->add_option("--trials", so.trials, "Trial count override");
  ver->add_option("--seed", so.seed, "Base seed");
  ver->add_flag("--full", so.full, "Full n=7 enumeration (h10) or the range up to 62540 (zbounds)");
  ver->add_flag("--human", verify_human, "Aligned columns");

  ExperimentConfig ex;
  auto* exp = app.add_subcommand("experiment", "Seeded random-tournament statistics");
  exp->add_option("--n", ex.n, "Vertex count")->required()->check(CLI::PositiveNumber);
  exp->add_option("--trials", ex.trials, "Trials")->check(CLI::PositiveNumber);
  exp->add_option("--seed", ex.seed, "Base seed; trial i uses derive_seed(seed, i)");
  exp->add_option("--cap", ex.cap, "Exact transitive search up to this n")->check(CLI::Range(1, 64));
  exp->add_flag("--human", ex.human, "Aligned columns");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (g->parsed()) return cmd_gen(gen, out);
    if (a->parsed()) return cmd_analyze(an, out);
    if (zt->parsed()) return cmd_ztable(zc, out, err);
    if (orc->parsed()) return cmd_oracle(oc, out);
    if (exp->parsed()) return cmd_experiment(ex, out);
    const std::vector<CheckRow> rows = run_suite(suite, so);
    Table table;
    bool ok = true;
    for (const CheckRow& r : rows) {
      table.push_back({suite, r.check, r.expected, r.actual, verdict(r.pass)});
      ok = ok && r.pass;
    }
    emit(table, '\t', verify_human, out);
    return ok ? kExitOk : kExitBoundViolated;
  } catch (const SearchExhausted& e) {
    err << "error: " << e.what() << '\n';
    return kExitSearchExhausted;
  } catch (const ParseError& e) {
    err << "error: " << to_string(e.kind()) << ": " << e.what() << '\n';
    return kExitUsage;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace tourpaths::cli
