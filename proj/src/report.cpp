#include "firstfall/report.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "firstfall/complexity.hpp"
#include "firstfall/groebner.hpp"
#include "firstfall/io.hpp"
#include "firstfall/macaulay.hpp"
#include "firstfall/series.hpp"
#include "firstfall/syzygy.hpp"

namespace firstfall {

namespace {

class Stopwatch {
 public:
  template <class F>
  auto time(const std::string& label, F&& f) {
    const auto start = std::chrono::steady_clock::now();
    auto result = f();
    ms_[label] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return result;
  }
  nlohmann::json json() const { return ms_; }

 private:
  nlohmann::json ms_ = nlohmann::json::object();
};

nlohmann::json complexity_row(int n, int d, double omega, bool allow_two) {
  const auto est = complexity_estimate({n, d, omega}, allow_two);
  nlohmann::json row{{"n", n}, {"d", d}, {"omega", omega}, {"log2", est.log2}, {"value", est.value.get_str()}};
  if (est.outside_range) row["note"] = "omega = 2 lies outside 2 < omega <= 3; comparison only";
  return row;
}

}  // namespace

nlohmann::json build_report(const SystemInstance& input, const ReportOptions& opt) {
  nlohmann::json rep;
  rep["tool"] = {{"name", "firstfall"}, {"version", kToolVersion}};
  rep["seed"] = opt.seed ? nlohmann::json(*opt.seed) : nlohmann::json(nullptr);
  rep["bound"] = opt.bound;
  rep["input"] = system_to_json(input);

  nlohmann::json annotations = nlohmann::json::array();
  const SystemInstance sys = input.homogeneous() ? input : input.top_components();
  if (!input.homogeneous()) annotations.push_back("affine input: indicators use the top homogeneous components");

  Stopwatch sw;
  const auto degs = sys.degrees();
  const auto collapsed = sys.collapsed();
  const int bound = opt.bound;

  nlohmann::json ind;
  const auto dreg = sw.time("D_reg", [&] { return series_dreg(sys, bound); });
  const auto series = sw.time("series", [&] { return estimate_series(sys.ring, degs, bound); });
  const auto dmulti = find_dmulti(series);
  const auto dmulti_ord = find_dmulti_ordered(series);
  const auto dff_ord = sw.time("dff_prime", [&] { return dff_prime_ordered(sys, bound); });
  const DegreeAnswer dff =
      dff_ord.is_found() ? DegreeAnswer::found(dff_ord.value->total(), bound) : DegreeAnswer::not_found(bound);
  ind["D_reg"] = to_json(dreg);
  ind["D_multi"] = to_json(dmulti);
  ind["D_multi_ordered"] = to_json(dmulti_ord);
  ind["dff_prime"] = to_json(dff);
  ind["dff_prime_ordered"] = to_json(dff_ord);

  const auto cdegs = collapsed.degrees();
  const bool equal_degrees =
      std::all_of(cdegs.begin(), cdegs.end(), [&](const MultiDegree& d) { return d == cdegs.front(); });
  const bool unit_weights = std::all_of(collapsed.ring.weights().begin(), collapsed.ring.weights().end(),
                                        [](const MultiDegree& w) { return w[0] == 1; });
  if (!equal_degrees)
    ind["dff"] = {{"skipped", "defined only for generators of one common degree"}};
  else if (!unit_weights)
    ind["dff"] = {{"skipped", "the truncated ring needs every variable of standard degree 1"}};
  else
    ind["dff"] = to_json(sw.time("dff", [&] { return dff_truncated(sys, bound); }));

  ind["d_reg"] = to_json(sw.time("d_reg", [&] { return dreg_actual(sys, bound); }));

  int max_gen = 0;
  for (const auto& d : cdegs) max_gen = std::max(max_gen, d[0]);
  std::optional<DegreeAnswer> dslv;
  try {
    if (unit_weights) {
      const auto trace = sw.time("d_slv", [&] { return reduced_gb_bounded(sys, std::max(bound, max_gen)); });
      dslv = trace.d_slv;
      ind["d_slv"] = to_json(trace.d_slv);
      ind["d_slv"]["degree_reached"] = trace.degree_reached;
    } else {
      ind["d_slv"] = {{"skipped", "the Groebner engine needs every variable of standard degree 1"}};
    }
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::BoundTooLarge) throw;
    ind["d_slv"] = {{"skipped", e.what()}};
  }
  rep["indicators"] = ind;

  // Profile up to the first fall (or the bound when there is none).
  const int profile_top = dff.is_found() ? *dff.value : bound;
  nlohmann::json profile = nlohmann::json::array();
  for (const auto& d : multidegrees_up_to(sys.ring.s(), profile_top)) {
    const auto p = syzygy_profile(sys, d);
    const auto& c = d.components();
    profile.push_back({{"degree", std::vector<int>(c.begin(), c.end())},
                       {"syz", p.syz_dim},
                       {"ksyz", p.ksyz_dim},
                       {"h1", p.h1_dim}});
  }
  rep["syzygy_profile"] = profile;

  nlohmann::json cx = nlohmann::json::array();
  const int n = sys.ring.n();
  std::optional<int> cx_degree;
  std::string cx_source;
  if (dslv && dslv->is_found() && *dslv->value >= 1) {
    cx_degree = *dslv->value;
    cx_source = "d_slv";
  } else if (dreg.is_found()) {
    cx_degree = *dreg.value;
    cx_source = "D_reg";
  }
  if (cx_degree) {
    cx.push_back(complexity_row(n, *cx_degree, opt.omega, opt.omega == 2.0));
    if (opt.omega != 2.0) cx.push_back(complexity_row(n, *cx_degree, 2.0, true));
  }
  rep["complexity"] = {{"degree_source", cx_degree ? cx_source : "none"}, {"rows", cx}};

  const std::uint32_t q = sys.ring.field().p();
  if (dff.is_found() && static_cast<long long>(q) > *dff.value)
    annotations.push_back("truncated-ring regime: d_ff = d_ff' applies (q exceeds the indicator)");
  rep["annotations"] = annotations;
  rep["caveats"] = {
      "d_slv is the largest degree contributing a new minimal leading monomial in a grevlex degree-by-degree "
      "computation, certified complete by S-pair degrees; solvers with other strategies may differ",
      "NotFound answers only cover degrees up to the stated bound"};
  if (opt.timings) rep["timings_ms"] = sw.json();
  return rep;
}

std::string dump_report(const nlohmann::json& report) { return report.dump(2) + "\n"; }

}  // namespace firstfall
