// Command-line front end: semigroup hulls, degeneracy reports, extension
// theorems, GF(p) algebra multipliers, the order <= 4 census and the law
// verification suites.  Exit codes: 0 success, 1 I/O or parse error,
// 2 precondition failure, 3 internal verification failure.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "transhull/checks.hpp"
#include "transhull/extension.hpp"
#include "transhull/io.hpp"
#include "transhull/multiplier_extension.hpp"

namespace fs = std::filesystem;
using namespace transhull;

namespace {

struct Cli {
  bool json = false;
  int max_hull = 64;
  int sample_every = 25;
  int seed = 0;
  int max_order = 4;
  std::string scope = "all";
  std::string fleet_dir = "data";
  std::string mode = "sharp";
  bool reduce_iso = false;
  std::vector<std::string> files;
  int order = 0;
};

void emit(const Report& report, bool as_json) {
  if (as_json) {
    std::cout << report.to_json().dump(2) << "\n";
    return;
  }
  for (const CheckItem& c : report.checks)
    std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << c.id
              << (c.witness.empty() ? "" : ": " + c.witness) << "\n";
}

int cmd_hull(const Cli& cli) {
  std::string text = read_file(cli.files[0]);
  FiniteSemigroup s = parse_sgp(text);
  TranslationalHull h = hull(s);

  Report report;
  report.command = "hull";
  report.inputs[cli.files[0]] = content_hash_hex(text);
  report.results = hull_to_json(h);
  report.results["input_table"] = s.tab;

  bool unital_ok = true;
  for (int i = 0; i < h.size(); ++i)
    if (h.star_at(h.identity_index, i) != i || h.star_at(i, h.identity_index) != i)
      unital_ok = false;
  report.checks.push_back({"hull-monoid-laws", unital_ok, unital_ok ? "" : "identity law failed"});

  std::vector<int> can = canonical_indices(h);
  bool star_hom = true;
  for (int x = 0; x < s.n && star_hom; ++x)
    for (int y = 0; y < s.n; ++y)
      if (h.star_at(can[x], can[y]) != can[s.at(x, y)]) {
        star_hom = false;
        break;
      }
  report.checks.push_back({"canonical-map-star-homomorphism", star_hom, ""});

  if (find_identity(s)) {
    std::set<int> image(can.begin(), can.end());
    bool iso = h.size() == s.n && static_cast<int>(image.size()) == s.n;
    report.checks.push_back(
        {"monoid-hull-isomorphism", iso, iso ? "" : "canonical map not bijective"});
  }

  if (cli.json) {
    std::cout << report.to_json().dump(2) << "\n";
  } else {
    std::cout << "hull: " << h.size() << " elements (" << h.inner_count() << " inner, "
              << h.outer_count() << " outer)\n";
    if (find_identity(s))
      std::cout << "input is a monoid; the canonical map is an isomorphism onto the hull\n";
    for (const CheckItem& c : report.checks)
      if (!c.pass) std::cout << "[FAIL] " << c.id << ": " << c.witness << "\n";
  }
  return report.all_pass() ? 0 : 3;
}

int cmd_props(const Cli& cli) {
  std::string text = read_file(cli.files[0]);
  FiniteSemigroup s = parse_sgp(text);
  DegeneracyReport d = degeneracy_report(s);
  InjectivityReport inj = injectivity_checks(s);

  Report report;
  report.command = "props";
  report.inputs[cli.files[0]] = content_hash_hex(text);
  report.results["order"] = s.n;
  report.results["input_table"] = s.tab;
  report.results["globally_idempotent"] = d.globally_idempotent;
  report.results["left_nondegenerate"] = d.left_nondeg;
  report.results["right_nondegenerate"] = d.right_nondeg;
  report.results["commutative"] = is_commutative(s);
  report.results["is_monoid"] = find_identity(s).has_value();
  if (d.missing_product) report.results["missing_product"] = *d.missing_product;
  if (d.left_witness)
    report.results["left_witness"] = {d.left_witness->first, d.left_witness->second};
  if (d.right_witness)
    report.results["right_witness"] = {d.right_witness->first, d.right_witness->second};
  report.results["left_translation_map_injective"] = inj.left_map_injective;
  report.results["right_translation_map_injective"] = inj.right_map_injective;
  report.results["canonical_map_injective"] = inj.canonical_injective;

  report.checks.push_back({"nondegeneracy-injectivity-equivalence",
                           inj.left_iff() && inj.right_iff(),
                           "equivalence failed on this input"});
  report.checks.push_back({"nondegenerate-canonical-injective",
                           inj.nondeg_implies_canonical_injective(), "implication failed"});

  if (cli.json) {
    std::cout << report.to_json().dump(2) << "\n";
  } else {
    std::cout << "order: " << s.n << "\n"
              << "globally idempotent: " << (d.globally_idempotent ? "yes" : "no");
    if (d.missing_product) std::cout << "  (element " << *d.missing_product << " is not a product)";
    std::cout << "\nleft non-degenerate: " << (d.left_nondeg ? "yes" : "no");
    if (d.left_witness)
      std::cout << "  (witness " << d.left_witness->first << "," << d.left_witness->second << ")";
    std::cout << "\nright non-degenerate: " << (d.right_nondeg ? "yes" : "no");
    if (d.right_witness)
      std::cout << "  (witness " << d.right_witness->first << "," << d.right_witness->second
                << ")";
    std::cout << "\nmonoid: " << (find_identity(s) ? "yes" : "no") << "\n"
              << "x -> L_x injective: " << (inj.left_map_injective ? "yes" : "no") << "\n"
              << "x -> R_x injective: " << (inj.right_map_injective ? "yes" : "no") << "\n"
              << "canonical map injective: " << (inj.canonical_injective ? "yes" : "no") << "\n";
  }
  return report.all_pass() ? 0 : 3;
}

int cmd_extend(const Cli& cli) {
  std::string src_text = read_file(cli.files[0]);
  std::string dst_text = read_file(cli.files[1]);
  std::string hom_text = read_file(cli.files[2]);
  FiniteSemigroup src = parse_sgp(src_text);
  FiniteSemigroup dst = parse_sgp(dst_text);
  std::vector<int> f = parse_hom(hom_text);

  Report report;
  report.command = "extend";
  report.inputs[cli.files[0]] = content_hash_hex(src_text);
  report.inputs[cli.files[1]] = content_hash_hex(dst_text);
  report.inputs[cli.files[2]] = content_hash_hex(hom_text);
  report.results["mode"] = cli.mode;

  ExtensionOptions opt;
  opt.uniqueness_bound = cli.max_hull;

  TranslationalHull hs = hull(src);
  if (cli.mode == "sharp") {
    TranslationalHull ht = hull(dst);
    ExtensionResult res = extend_sharp(hs, ht, f, opt);
    report.results["map"] = res.map;
    report.results["hull_src_size"] = hs.size();
    report.results["hull_dst_size"] = ht.size();
    report.results["uniqueness_searched"] = res.uniqueness_searched;
    if (res.uniqueness_searched) report.results["solutions_found"] = res.solutions_found;
    report.checks.push_back({"sharp-extension-verified", res.all_verified(), ""});
  } else {
    if (!find_identity(dst))
      throw PreconditionError("flat extension needs a monoid target, but the target has no identity");
    FiniteMonoid m = make_monoid(dst);
    FlatResult res = extend_flat(hs, m, f, opt);
    report.results["map"] = res.map;
    report.results["hull_src_size"] = hs.size();
    report.results["uniqueness_searched"] = res.uniqueness_searched;
    if (res.uniqueness_searched) report.results["solutions_found"] = res.solutions_found;
    report.checks.push_back(
        {"flat-extension-verified", res.restriction_holds && res.monoid_hom, ""});
  }

  if (cli.json) {
    std::cout << report.to_json().dump(2) << "\n";
  } else {
    std::cout << "extension computed on a hull of " << hs.size() << " elements; map: [";
    const auto& map = report.results["map"];
    for (size_t i = 0; i < map.size(); ++i) std::cout << (i ? " " : "") << map[i].get<int>();
    std::cout << "]\n";
    if (report.results.contains("solutions_found"))
      std::cout << "uniqueness search: exactly "
                << report.results["solutions_found"].get<long long>() << " extension(s)\n";
  }
  return report.all_pass() ? 0 : 3;
}

int cmd_alg(const Cli& cli) {
  std::string text = read_file(cli.files[0]);
  AlgFile file = parse_alg(text);
  const std::string& sub = cli.files[1];

  Report report;
  report.command = "alg " + sub;
  report.inputs[cli.files[0]] = content_hash_hex(text);

  auto need_algebra = [&]() -> const FpAlgebra& {
    if (!file.algebra) throw PreconditionError("file carries no \"mul\" tensor");
    return *file.algebra;
  };

  if (sub == "mult") {
    const FpAlgebra& a = need_algebra();
    MultiplierSpace s = multiplier_space(a);
    std::vector<int> inner = inner_multiplier_indices(a, s);
    std::set<int> inner_set(inner.begin(), inner.end());
    report.results["pairs"] = s.size();
    report.results["inner"] = inner_set.size();
    report.results["nullspace_dimension"] = s.nullspace.size();
    json pairs = json::array();
    for (const auto& m : s.pairs) pairs.push_back({{"L", m.L.a}, {"R", m.R.a}});
    report.results["elements"] = pairs;
    if (!cli.json)
      std::cout << s.size() << " multiplier pairs (" << inner_set.size() << " inner)\n";
  } else if (sub == "conv") {
    FiniteSemigroup conv = convolution_semigroup(need_algebra());
    report.results["order"] = conv.n;
    report.results["table"] = conv.tab;
    if (!cli.json) std::cout << serialize_sgp(conv);
  } else if (sub == "concretize") {
    const FpAlgebra& a = need_algebra();
    MultiplierSpace s = multiplier_space(a);
    TranslationalHull h = hull(convolution_semigroup(a));
    ConcretizationResult c = concretization(a, s, h);
    report.results["multiplier_pairs"] = s.size();
    report.results["hull_size"] = h.size();
    report.results["injective"] = c.injective;
    report.results["surjective"] = c.surjective;
    report.results["concrete"] = c.concrete();
    report.checks.push_back({"concretization-monoid-homomorphism", c.monoid_hom, ""});
    if (!cli.json)
      std::cout << (c.injective ? "injective" : "not injective") << ", "
                << (c.surjective ? "surjective" : "not surjective") << ": "
                << (c.concrete() ? "concrete" : "NOT concrete") << " (" << s.size() << " -> "
                << h.size() << ")\n";
  } else if (sub == "comult") {
    if (!file.coalgebra) throw PreconditionError("file carries no \"comul\" tensor");
    const FpCoalgebra& c = *file.coalgebra;
    MultiplierSpace s = comultiplier_space(c);
    std::vector<int> inner = inner_comultiplier_indices(c, s);
    std::set<int> inner_set(inner.begin(), inner.end());
    report.results["pairs"] = s.size();
    report.results["inner"] = inner_set.size();
    json pairs = json::array();
    for (const auto& m : s.pairs) pairs.push_back({{"L", m.L.a}, {"R", m.R.a}});
    report.results["elements"] = pairs;
    if (!cli.json)
      std::cout << s.size() << " comultiplier pairs (" << inner_set.size() << " inner)\n";
  } else {
    throw ValidationError("unknown alg subcommand: " + sub);
  }

  if (cli.json) std::cout << report.to_json().dump(2) << "\n";
  return 0;
}

int cmd_census(const Cli& cli) {
  std::cout << census_csv_header() << "\n";
  if (cli.reduce_iso) {
    long long index = 0;
    enumerate_semigroups(cli.order, true, [&](const FiniteSemigroup& s) {
      std::cout << census_csv_row(index++, census_record(s)) << "\n";
      return true;
    });
    return 0;
  }
  CensusSummary sum = run_census(cli.order, [&](long long i, const CensusRecord& r) {
    std::cout << census_csv_row(i, r) << "\n";
  });
  std::cerr << "total " << sum.total << ", monoids " << sum.monoids << ", globally idempotent "
            << sum.globally_idempotent << ", nondegenerate " << sum.nondegenerate
            << ", with outer multipliers " << sum.with_outer_multipliers << "\n";
  return 0;
}

std::vector<AlgFile> load_fleet(const std::string& dir) {
  std::vector<fs::path> paths;
  std::error_code ec;
  for (const auto& entry : fs::directory_iterator(dir, ec)) {
    if (ec) break;
    if (entry.path().extension() == ".alg") paths.push_back(entry.path());
  }
  if (ec) throw ValidationError("cannot read fleet directory " + dir);
  std::sort(paths.begin(), paths.end());
  std::vector<AlgFile> fleet;
  for (const auto& p : paths) fleet.push_back(parse_alg(read_file(p.string())));
  return fleet;
}

int cmd_check(const Cli& cli) {
  CheckOptions opt;
  opt.max_order = cli.max_order;
  opt.sample_every = cli.sample_every;
  opt.seed = cli.seed;
  opt.uniqueness_bound = cli.max_hull;

  Report report;
  report.command = "check " + cli.scope;

  if (cli.scope == "set" || cli.scope == "all") {
    auto items = run_set_checks(opt);
    report.checks.insert(report.checks.end(), items.begin(), items.end());
  }
  if (cli.scope == "linear" || cli.scope == "all") {
    std::vector<AlgFile> fleet = load_fleet(cli.fleet_dir);
    if (fleet.empty())
      throw ValidationError("no inputs: fleet directory '" + cli.fleet_dir +
                            "' contains no .alg files");
    report.results["fleet_size"] = fleet.size();
    auto items = run_linear_checks(fleet, opt);
    report.checks.insert(report.checks.end(), items.begin(), items.end());
  }
  emit(report, cli.json);
  if (!cli.json) {
    int failed = 0;
    for (const CheckItem& c : report.checks) failed += c.pass ? 0 : 1;
    std::cout << report.checks.size() - failed << "/" << report.checks.size()
              << " checks passed\n";
  }
  return report.all_pass() ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"translational hulls and multiplier monoids of finite semigroup objects"};
  app.require_subcommand(1);
  Cli cli;

  auto* hull_cmd = app.add_subcommand("hull", "translational hull of a .sgp semigroup");
  hull_cmd->add_option("file", cli.files, "input .sgp file")->expected(1)->required();
  hull_cmd->add_flag("--json", cli.json, "emit a JSON report");

  auto* props_cmd = app.add_subcommand("props", "degeneracy and injectivity report");
  props_cmd->add_option("file", cli.files, "input .sgp file")->expected(1)->required();
  props_cmd->add_flag("--json", cli.json, "emit a JSON report");

  auto* extend_cmd = app.add_subcommand("extend", "extend a homomorphism along canonical maps");
  extend_cmd->add_option("files", cli.files, "src.sgp dst.sgp hom.json")->expected(3)->required();
  extend_cmd->add_option("--mode", cli.mode, "sharp|flat")->check(CLI::IsMember({"sharp", "flat"}));
  extend_cmd->add_option("--max-hull", cli.max_hull, "uniqueness search bound");
  extend_cmd->add_flag("--json", cli.json, "emit a JSON report");

  auto* alg_cmd = app.add_subcommand("alg", "multiplier computations for a .alg file");
  alg_cmd->add_option("args", cli.files, "file.alg mult|conv|concretize|comult")
      ->expected(2)
      ->required();
  alg_cmd->add_flag("--json", cli.json, "emit a JSON report");

  auto* census_cmd = app.add_subcommand("census", "labeled census with hull statistics (CSV)");
  census_cmd->add_option("order", cli.order, "semigroup order, 0..4")->required();
  census_cmd->add_flag("--reduce-iso", cli.reduce_iso, "only minimal representatives");

  auto* check_cmd = app.add_subcommand("check", "run the law verification suites");
  check_cmd->add_option("--scope", cli.scope, "set|linear|all")
      ->check(CLI::IsMember({"set", "linear", "all"}));
  check_cmd->add_option("--max-order", cli.max_order, "census depth for the set scope");
  check_cmd->add_option("--sample-every", cli.sample_every, "order-4 sampling stride");
  check_cmd->add_option("--seed", cli.seed, "sample offset selector");
  check_cmd->add_option("--max-hull", cli.max_hull, "uniqueness search bound");
  check_cmd->add_option("--fleet", cli.fleet_dir, "directory of .alg fleet files");
  check_cmd->add_flag("--json", cli.json, "emit a JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (hull_cmd->parsed()) return cmd_hull(cli);
    if (props_cmd->parsed()) return cmd_props(cli);
    if (extend_cmd->parsed()) return cmd_extend(cli);
    if (alg_cmd->parsed()) return cmd_alg(cli);
    if (census_cmd->parsed()) return cmd_census(cli);
    if (check_cmd->parsed()) return cmd_check(cli);
  } catch (const PreconditionError& e) {
    std::cerr << "precondition failed: " << e.what() << "\n";
    return 2;
  } catch (const InternalCheckError& e) {
    std::cerr << "internal verification failure: " << e.what() << "\n";
    return 3;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
