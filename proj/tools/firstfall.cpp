// Command-line front end: indicators, generators, verification suites, complexity.

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "firstfall/complexity.hpp"
#include "firstfall/cryptosys.hpp"
#include "firstfall/groebner.hpp"
#include "firstfall/io.hpp"
#include "firstfall/macaulay.hpp"
#include "firstfall/report.hpp"
#include "firstfall/series.hpp"
#include "firstfall/suites.hpp"
#include "firstfall/syzygy.hpp"

using namespace firstfall;
using nlohmann::json;

namespace {

struct Globals {
  int bound = 20;
  std::uint64_t seed = 1;
  double omega = 2.81;
  std::string out;
  std::string format = "json";
  bool no_timings = false;
  int jobs = 1;
  bool bound_given = false;
};

void emit(const Globals& g, const std::string& text) {
  if (g.out.empty())
    std::cout << text;
  else
    write_text_file(g.out, text);
}

void emit_json(const Globals& g, const json& j) { emit(g, j.dump(2) + "\n"); }

std::vector<int> parse_ints(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorKind::InvalidArgument, "not an integer list: " + text);
    }
  }
  return out;
}

/// "2,2,3" for one block, "1,1;2,0" for several.
std::vector<MultiDegree> parse_degrees(const std::string& text, std::size_t s) {
  std::vector<MultiDegree> out;
  if (s == 1 && text.find(';') == std::string::npos) {
    for (int d : parse_ints(text)) out.push_back(MultiDegree{d});
    return out;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    MultiDegree d(parse_ints(item));
    if (d.size() != s) throw Error(ErrorKind::DimensionMismatch, "degree " + item + " needs " + std::to_string(s) + " parts");
    out.push_back(d);
  }
  return out;
}

RingSpec ring_from_blocks(std::uint32_t p, const std::vector<int>& sizes) {
  std::vector<Block> blocks;
  const char* names = "xyzuvw";
  for (std::size_t i = 0; i < sizes.size(); ++i)
    blocks.push_back({i < 6 ? std::string(1, names[i]) : "b" + std::to_string(i), sizes[i]});
  return RingSpec(FieldSpec(p), blocks);
}

std::string series_csv(const SeriesTrunc& series) {
  std::ostringstream os;
  for (std::size_t i = 1; i <= series.s(); ++i) os << 'd' << i << ',';
  os << "coeff\n";
  for (std::size_t i = 0; i < series.index().size(); ++i) {
    for (int c : series.index().at(i).components()) os << c << ',';
    os << series.at(i).get_str() << '\n';
  }
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"firstfall: first fall degrees, degrees of regularity and multigraded Hilbert series"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  auto* bound_opt = app.add_option("--bound", g.bound, "degree bound for every scan")->check(CLI::NonNegativeNumber);
  app.add_option("--seed", g.seed, "seed for generators and suites");
  app.add_option("--omega", g.omega, "linear algebra exponent, 2 < omega <= 3");
  app.add_option("--out", g.out, "write output to this file instead of stdout");
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_flag("--no-timings", g.no_timings, "omit timings so reports are byte-reproducible");
  app.add_option("--jobs", g.jobs, "concurrent trials in verify")->check(CLI::PositiveNumber);

  std::string system_path;
  auto with_system = [&](CLI::App* sub) { sub->add_option("--system,system", system_path, "system JSON file")->required(); };

  auto* series_cmd = app.add_subcommand("series", "expand the estimated Hilbert series");
  with_system(series_cmd);
  auto* dreg_cmd = app.add_subcommand("dreg", "D_reg of the standard-grading series");
  with_system(dreg_cmd);
  auto* dmulti_cmd = app.add_subcommand("dmulti", "D_{Z^s} and its deglex-ordered variant");
  with_system(dmulti_cmd);
  auto* dff_cmd = app.add_subcommand("dff", "first degree where Syz differs from KSyz");
  with_system(dff_cmd);
  auto* dfft_cmd = app.add_subcommand("dff-trunc", "first fall degree over the truncated ring");
  with_system(dfft_cmd);
  auto* dregact_cmd = app.add_subcommand("dreg-actual", "smallest degree where the quotient vanishes");
  with_system(dregact_cmd);
  auto* gb_cmd = app.add_subcommand("gb", "degree-bounded Groebner basis trace");
  with_system(gb_cmd);
  auto* estimate_cmd = app.add_subcommand("estimate", "full report with every indicator");
  with_system(estimate_cmd);

  auto* gen_cmd = app.add_subcommand("gen", "generate instances");
  gen_cmd->require_subcommand(1);
  std::uint32_t p = 65521, q = 31;
  std::string blocks_text = "3", degrees_text = "2,2,2";
  int v = 2, o1 = 1, o2 = 1, N = 4, k = 3, r = 1, c = 1;
  bool control = false;
  auto* gen_random = gen_cmd->add_subcommand("random", "dense random (multi)homogeneous system");
  gen_random->add_option("--p", p, "field prime");
  gen_random->add_option("--blocks", blocks_text, "block sizes, e.g. 2,2");
  gen_random->add_option("--degrees", degrees_text, "degrees, e.g. 2,2,3 or 1,1;1,1");
  auto* gen_rainbow = gen_cmd->add_subcommand("rainbow", "toy Rainbow public key as a system");
  auto* gen_rbs = gen_cmd->add_subcommand("rbs", "RBS dominant system from a toy Rainbow key");
  for (auto* sub : {gen_rainbow, gen_rbs}) {
    sub->add_option("--q", q, "odd field prime");
    sub->add_option("--v", v, "vinegar variables");
    sub->add_option("--o1", o1, "first oil layer");
    sub->add_option("--o2", o2, "second oil layer");
  }
  gen_rbs->add_flag("--control", control, "use random symmetric matrices instead of a Rainbow key");
  auto* gen_minrank = gen_cmd->add_subcommand("minrank", "planted MinRank instance");
  auto* gen_ks = gen_cmd->add_subcommand("ks", "KS system of a planted MinRank instance");
  for (auto* sub : {gen_minrank, gen_ks}) {
    sub->add_option("--N", N, "matrix size");
    sub->add_option("--k", k, "number of matrices");
    sub->add_option("--r", r, "target rank");
    sub->add_option("--p", p, "field prime");
  }
  gen_ks->add_option("--c", c, "number of kernel vectors");

  auto* verify_cmd = app.add_subcommand("verify", "property suites over seeded instances");
  std::string suite = "all", csv_path;
  int trials = 100;
  verify_cmd->add_option("--suite,suite", suite, "diem|thm5|thm8|prop3|regular|gb|constructions|all");
  verify_cmd->add_option("--trials", trials, "instances per suite")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--csv", csv_path, "write per-trial indicator tuples to this CSV file");

  auto* cx_cmd = app.add_subcommand("complexity", "C(n+d, d)^omega");
  int cx_n = 10, cx_d = 2;
  bool allow_two = false;
  cx_cmd->add_option("--n", cx_n, "variables")->required();
  cx_cmd->add_option("--d", cx_d, "degree")->required();
  cx_cmd->add_flag("--allow-omega-two", allow_two, "accept omega = 2 as a comparison row");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  g.bound_given = bound_opt->count() > 0;

  try {
    auto load = [&] {
      SystemInstance sys = read_system_file(system_path);
      return sys.homogeneous() ? sys : sys.top_components();
    };

    if (series_cmd->parsed()) {
      const auto sys = load();
      const auto series = estimate_series(sys.ring, sys.degrees(), g.bound);
      if (g.format == "csv")
        emit(g, series_csv(series));
      else
        emit_json(g, {{"bound", g.bound}, {"series", series_to_json(series)}});
    } else if (dreg_cmd->parsed()) {
      emit_json(g, {{"D_reg", to_json(series_dreg(load(), g.bound))}});
    } else if (dmulti_cmd->parsed()) {
      const auto sys = load();
      const auto series = estimate_series(sys.ring, sys.degrees(), g.bound);
      emit_json(g, {{"D_reg", to_json(series_dreg(sys, g.bound))},
                    {"D_multi", to_json(find_dmulti(series))},
                    {"D_multi_ordered", to_json(find_dmulti_ordered(series))}});
    } else if (dff_cmd->parsed()) {
      const auto sys = load();
      if (g.format == "csv") {
        emit(g, profiles_to_csv(syzygy_table(sys, g.bound), sys.ring.s()));
      } else {
        const auto ordered = dff_prime_ordered(sys, g.bound);
        emit_json(g, {{"dff_prime", to_json(dff_prime(sys, g.bound))}, {"dff_prime_ordered", to_json(ordered)}});
      }
    } else if (dfft_cmd->parsed()) {
      emit_json(g, {{"dff", to_json(dff_truncated(load(), g.bound))}});
    } else if (dregact_cmd->parsed()) {
      emit_json(g, {{"d_reg", to_json(dreg_actual(load(), g.bound))}});
    } else if (gb_cmd->parsed()) {
      emit_json(g, to_json(reduced_gb_bounded(load(), g.bound)));
    } else if (estimate_cmd->parsed()) {
      ReportOptions opt;
      opt.bound = g.bound;
      opt.omega = g.omega;
      opt.seed = g.seed;
      opt.timings = !g.no_timings;
      emit(g, dump_report(build_report(read_system_file(system_path), opt)));
    } else if (gen_cmd->parsed()) {
      SystemInstance sys{RingSpec::standard(FieldSpec(3), 1), {}};
      if (gen_random->parsed()) {
        const RingSpec ring = ring_from_blocks(p, parse_ints(blocks_text));
        sys = random_system(ring, parse_degrees(degrees_text, ring.s()), g.seed);
      } else if (gen_rainbow->parsed()) {
        sys = rainbow_public_system(rainbow_keygen(q, v, o1, o2, g.seed));
        sys.provenance["seed"] = g.seed;
      } else if (gen_rbs->parsed()) {
        const auto key = rainbow_keygen(q, v, o1, o2, g.seed);
        const auto pub = control ? random_symmetric_forms(key.field, key.params.n(), key.params.m(), g.seed) : key.pub;
        sys = rbs_system(pub, key.field, v, o1, o2);
        sys.provenance["seed"] = g.seed;
        sys.provenance["public_matrices"] = control ? "random symmetric" : "rainbow key";
      } else if (gen_minrank->parsed()) {
        const auto inst = minrank_instance(N, k, r, g.seed, p);
        json mats = json::array();
        for (const auto& m : inst.matrices) {
          json rows = json::array();
          for (std::size_t i = 0; i < m.rows(); ++i)
            rows.push_back(std::vector<std::uint32_t>(m.data().begin() + static_cast<long>(i * m.cols()),
                                                      m.data().begin() + static_cast<long>((i + 1) * m.cols())));
          mats.push_back(rows);
        }
        emit_json(g, {{"field", {{"p", p}}}, {"N", N}, {"k", k}, {"r", r}, {"seed", g.seed},
                      {"matrices", mats}, {"secret", inst.secret}});
        return 0;
      } else if (gen_ks->parsed()) {
        const auto inst = minrank_instance(N, k, r, g.seed, p);
        const auto cert = ks_certificate(inst, c);
        sys = ks_system(inst, r, c, cert.row_perm);
        sys.provenance["seed"] = g.seed;
        sys.provenance["vanishing_assignment"] = cert.assignment();
      }
      emit(g, serialize_system(sys));
    } else if (verify_cmd->parsed()) {
      std::vector<std::string> names;
      if (suite == "all")
        names = suite_names();
      else
        names = {suite};
      static const std::map<std::string, int> default_bound{{"thm5", 12}, {"thm8", 10}, {"prop3", 12}, {"diem", 10},
                                                            {"regular", 12}, {"gb", 10}, {"constructions", 15}};
      json summary = json::array();
      std::string csv;
      int violations = 0;
      for (const auto& name : names) {
        SuiteOptions opt;
        opt.trials = trials;
        opt.seed = g.seed;
        opt.jobs = g.jobs;
        const auto it = default_bound.find(name);
        if (it == default_bound.end()) throw Error(ErrorKind::InvalidArgument, "unknown suite " + name);
        opt.bound = g.bound_given ? g.bound : it->second;
        const auto res = run_suite(name, opt);
        auto s = res.summary();
        s["bound"] = opt.bound;
        if (!g.no_timings) s["seconds"] = res.seconds;
        summary.push_back(s);
        const std::string part = res.csv();
        csv += csv.empty() ? part : part.substr(part.find('\n') + 1);
        violations += res.violations;
      }
      if (!csv_path.empty()) write_text_file(csv_path, csv);
      emit_json(g, {{"suites", summary}, {"violations", violations}, {"seed", g.seed}});
      return violations == 0 ? 0 : 1;
    } else if (cx_cmd->parsed()) {
      json rows = json::array();
      auto row = [&](double omega, bool allow) {
        const auto est = complexity_estimate({cx_n, cx_d, omega}, allow);
        json r{{"n", cx_n}, {"d", cx_d}, {"omega", omega}, {"log2", est.log2}, {"value", est.value.get_str()}};
        if (est.outside_range) r["note"] = "omega = 2 lies outside 2 < omega <= 3; comparison only";
        rows.push_back(r);
      };
      row(g.omega, allow_two);
      if (g.omega != 2.0) row(2.0, true);
      emit_json(g, {{"complexity", rows}});
    }
  } catch (const Error& e) {
    std::cerr << json{{"error", std::string(to_string(e.kind()))}, {"message", e.what()}}.dump() << '\n';
    return 1;
  }
  return 0;
}
