#include "firstfall/suites.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <sstream>

#include "firstfall/cryptosys.hpp"
#include "firstfall/groebner.hpp"
#include "firstfall/macaulay.hpp"
#include "firstfall/series.hpp"
#include "firstfall/syzygy.hpp"

namespace firstfall {

namespace {

using Rng = std::mt19937_64;

std::string degs_str(const std::vector<MultiDegree>& degs) {
  std::string out;
  for (const auto& d : degs) out += (out.empty() ? "" : " ") + d.str();
  return out;
}

std::vector<MultiDegree> repeat(const MultiDegree& d, int m) { return std::vector<MultiDegree>(static_cast<std::size_t>(m), d); }

std::vector<MultiDegree> std_degs(std::initializer_list<int> ds) {
  std::vector<MultiDegree> out;
  for (int d : ds) out.push_back(MultiDegree{d});
  return out;
}

/// A catalogue entry: ring, generator degrees, and whether a dependency is planted.
struct Shape {
  RingSpec ring;
  std::vector<MultiDegree> degs;
  bool planted = false;
  std::string label;
};

Shape standard_shape(int n, std::vector<MultiDegree> degs, bool planted = false) {
  FieldSpec f(65521);
  Shape s{RingSpec::standard(f, n), std::move(degs), planted, ""};
  s.label = "std n=" + std::to_string(n) + " degs[" + degs_str(s.degs) + "]" + (planted ? " planted" : "");
  return s;
}

Shape block_shape(std::vector<int> blocks, std::vector<MultiDegree> degs, std::uint32_t p = 65521, bool planted = false) {
  std::vector<Block> bs;
  std::string dims;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    bs.push_back({std::string(1, static_cast<char>('x' + i)), blocks[i]});
    dims += (i ? "," : "") + std::to_string(blocks[i]);
  }
  Shape s{RingSpec(FieldSpec(p), bs), std::move(degs), planted, ""};
  s.label = "blocks(" + dims + ") degs[" + degs_str(s.degs) + "]" + (planted ? " planted" : "");
  return s;
}

SystemInstance build(const Shape& shape, std::uint64_t seed) {
  return shape.planted ? planted_dependency_system(shape.ring, shape.degs, seed) : random_system(shape.ring, shape.degs, seed);
}

std::string str(const DegreeAnswer& a) { return a.str(); }
std::string str(const MultiDegreeAnswer& a) { return a.str(); }

/// Runs `trial` for every index, concurrently up to opt.jobs.
SuiteResult run_trials(const std::string& name, const SuiteOptions& opt,
                       const std::function<void(TrialRecord&)>& trial) {
  const auto start = std::chrono::steady_clock::now();
  SuiteResult res;
  res.name = name;
  res.trials = opt.trials;
  res.records.resize(static_cast<std::size_t>(opt.trials));
#pragma omp parallel for schedule(dynamic) num_threads(std::max(1, opt.jobs))
  for (int i = 0; i < opt.trials; ++i) {
    TrialRecord& rec = res.records[static_cast<std::size_t>(i)];
    rec.index = i;
    rec.seed = opt.seed + static_cast<std::uint64_t>(i);
    try {
      trial(rec);
    } catch (const std::exception& e) {
      rec.violation = true;
      rec.note = std::string("error: ") + e.what();
    }
  }
  std::stable_sort(res.records.begin(), res.records.end(),
                   [](const TrialRecord& a, const TrialRecord& b) { return a.seed < b.seed; });
  for (const auto& r : res.records) {
    res.applicable += r.applicable ? 1 : 0;
    res.violations += r.violation ? 1 : 0;
  }
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return res;
}

// --- catalogues -----------------------------------------------------------------

std::vector<Shape> thm5_catalogue() {
  std::vector<Shape> out;
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b)
      for (int m = 1; m <= 9; ++m) out.push_back(block_shape({a, b}, repeat(MultiDegree{1, 1}, m)));
  out.push_back(standard_shape(2, std_degs({2, 2, 2})));
  out.push_back(standard_shape(2, std_degs({2, 3, 3})));
  out.push_back(standard_shape(2, std_degs({2, 2}), true));
  out.push_back(standard_shape(3, std_degs({2, 2, 2, 2})));
  out.push_back(standard_shape(3, std_degs({2, 2, 3, 3})));
  out.push_back(standard_shape(3, std_degs({3, 3, 3, 3, 3})));
  out.push_back(standard_shape(3, std_degs({2, 2, 2}), true));
  out.push_back(standard_shape(4, std_degs({2, 2, 2, 2, 2})));
  out.push_back(standard_shape(4, std_degs({2, 2, 3, 3, 3})));
  out.push_back(standard_shape(4, std_degs({2, 2, 2, 2}), true));
  out.push_back(standard_shape(4, std_degs({3, 3, 3, 3, 3, 3})));
  out.push_back(standard_shape(5, std_degs({2, 2, 2, 2, 2, 2})));
  out.push_back(standard_shape(5, std_degs({2, 2, 2, 2, 2, 2, 2})));
  out.push_back(standard_shape(5, std_degs({2, 2, 2, 2, 2, 2}), true));
  out.push_back(standard_shape(5, std_degs({3, 3, 3, 3, 3, 3})));
  out.push_back(standard_shape(6, std_degs({2, 2, 2, 2, 2, 2, 2})));
  out.push_back(standard_shape(6, std_degs({2, 2, 2, 2, 2, 2, 2, 2})));
  out.push_back(standard_shape(6, std_degs({2, 2, 2, 2, 2, 2, 2}), true));
  out.push_back(standard_shape(6, std_degs({2, 2, 2, 2, 3, 3, 3, 3})));
  return out;
}

Shape thm8_shape(Rng& rng) {
  std::uniform_int_distribution<int> coin(0, 1);
  if (coin(rng) == 0) {
    std::uniform_int_distribution<int> blk(1, 3), cnt(2, 7);
    const std::vector<MultiDegree> menu{{1, 1}, {1, 1}, {2, 1}, {1, 2}, {2, 0}, {0, 2}};
    std::uniform_int_distribution<std::size_t> pick(0, menu.size() - 1);
    const int m = cnt(rng);
    std::vector<MultiDegree> degs;
    for (int i = 0; i < m; ++i) degs.push_back(menu[pick(rng)]);
    const int a = blk(rng), b = blk(rng);
    return block_shape({a, b}, degs);
  }
  std::uniform_int_distribution<int> blk(1, 2), cnt(2, 6);
  const std::vector<MultiDegree> menu{{1, 1, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 1}};
  std::uniform_int_distribution<std::size_t> pick(0, menu.size() - 1);
  const int m = cnt(rng);
  std::vector<MultiDegree> degs;
  for (int i = 0; i < m; ++i) degs.push_back(menu[pick(rng)]);
  const int a = blk(rng), b = blk(rng), c = blk(rng);
  return block_shape({a, b, c}, degs);
}

// --- suites -----------------------------------------------------------------------

SuiteResult suite_thm5(const SuiteOptions& opt) {
  const auto catalogue = thm5_catalogue();
  return run_trials("thm5", opt, [&](TrialRecord& rec) {
    const Shape& shape = catalogue[static_cast<std::size_t>(rec.index) % catalogue.size()];
    const auto sys = build(shape, rec.seed);
    rec.shape = shape.label;
    const auto cls = is_semiregular(sys, opt.bound);
    const auto Dreg = series_dreg(sys, opt.bound + 1);
    rec.values = {{"semiregular", std::string(to_string(cls))}, {"D_reg", str(Dreg)}};
    if (cls != SemiRegularity::False) return;
    const auto dff = dff_prime(sys, opt.bound);
    const auto dreg = dreg_actual(sys, opt.bound);
    rec.values.push_back({"dff_prime", str(dff)});
    rec.values.push_back({"d_reg", str(dreg)});
    rec.applicable = true;
    if (!dff.is_found()) {
      // Non-semi-regular forces a non-Koszul syzygy below D_reg <= bound.
      rec.violation = true;
      rec.note = "no first fall below D_reg";
      return;
    }
    if (*dff.value + 1 > *Dreg.value) {
      rec.violation = true;
      rec.note = "dff'+1 > D_reg";
    }
    if (dreg.is_found() && *dff.value + 1 > *dreg.value) {
      rec.violation = true;
      rec.note += " dff'+1 > d_reg";
    }
    if (dreg.is_found() && *Dreg.value > *dreg.value) {
      rec.violation = true;
      rec.note += " D_reg > d_reg";
    }
  });
}

SuiteResult suite_thm8(const SuiteOptions& opt) {
  return run_trials("thm8", opt, [&](TrialRecord& rec) {
    Rng rng(rec.seed);
    const Shape shape = thm8_shape(rng);
    const auto sys = random_system(shape.ring, shape.degs, rec.seed);
    rec.shape = shape.label;
    const auto series = estimate_series(sys.ring, sys.degrees(), opt.bound);
    const auto dm = find_dmulti(series);
    const auto dmo = find_dmulti_ordered(series);
    const auto dffo = dff_prime_ordered(sys, opt.bound);
    const DegreeAnswer dff = dffo.is_found() ? DegreeAnswer::found(dffo.value->total(), opt.bound)
                                             : DegreeAnswer::not_found(opt.bound);
    rec.values = {{"D_multi", str(dm)}, {"D_multi_ordered", str(dmo)}, {"dff_prime", str(dff)},
                  {"dff_prime_ordered", str(dffo)}};
    if (!dm.is_found()) return;
    rec.applicable = true;
    if (!dff.is_found() || *dff.value > *dm.value) {
      rec.violation = true;
      rec.note = "dff' > D_multi";
    }
    if (dmo.is_found() && (!dffo.is_found() || deglex_cmp(*dffo.value, *dmo.value) == std::strong_ordering::greater)) {
      rec.violation = true;
      rec.note += " ordered dff' above ordered D_multi";
    }
  });
}

SuiteResult suite_prop3(const SuiteOptions& opt) {
  return run_trials("prop3", opt, [&](TrialRecord& rec) {
    Rng rng(rec.seed);
    const std::uint32_t qs[] = {7, 11, 13};
    const std::uint32_t q = qs[rec.index % 3];
    std::uniform_int_distribution<int> nd(2, 5);
    const int n = nd(rng);
    // Overdetermined systems have a first fall; every eighth trial is an
    // m <= n control where both indicators should stay NotFound.
    const bool control = rec.index % 8 == 0;
    std::uniform_int_distribution<int> md(control ? std::max(1, n - 1) : n + 1, control ? n : n + 3);
    const int m = md(rng);
    Shape shape = block_shape({n}, repeat(MultiDegree{2}, m), q);
    const auto sys = random_system(shape.ring, shape.degs, rec.seed);
    rec.shape = "q=" + std::to_string(q) + " n=" + std::to_string(n) + " m=" + std::to_string(m);
    const int bound = static_cast<int>(q) - 1;
    const auto dff = dff_prime(sys, bound);
    const auto dtr = dff_truncated(sys, bound);
    rec.values = {{"q", std::to_string(q)}, {"dff_prime", str(dff)}, {"dff_truncated", str(dtr)}};
    if (!dff.is_found() && !dtr.is_found()) return;
    rec.applicable = true;
    if (dff != dtr) {
      rec.violation = true;
      rec.note = "dff != dff'";
    }
  });
}

SuiteResult suite_diem(const SuiteOptions& opt) {
  return run_trials("diem", opt, [&](TrialRecord& rec) {
    Rng rng(rec.seed);
    Shape shape = [&] {
      std::uniform_int_distribution<int> kind(0, 2);
      switch (kind(rng)) {
        case 0: {
          std::uniform_int_distribution<int> nd(2, 4), md(1, 5), dd(2, 3);
          const int n = nd(rng), m = md(rng);
          std::vector<MultiDegree> degs;
          for (int i = 0; i < m; ++i) degs.push_back(MultiDegree{dd(rng)});
          return standard_shape(n, degs);
        }
        case 1: {
          std::uniform_int_distribution<int> nd(2, 4), md(1, 3), dd(2, 3);
          const int n = nd(rng), m = md(rng);
          std::vector<MultiDegree> degs;
          for (int i = 0; i < m; ++i) degs.push_back(MultiDegree{dd(rng)});
          return standard_shape(n, degs, true);
        }
        default: {
          std::uniform_int_distribution<int> blk(1, 2), md(1, 4);
          const std::vector<MultiDegree> menu{{1, 1}, {1, 1}, {2, 1}, {1, 2}, {1, 0}, {0, 1}};
          std::uniform_int_distribution<std::size_t> pick(0, menu.size() - 1);
          const int m = md(rng);
          std::vector<MultiDegree> degs;
          for (int i = 0; i < m; ++i) degs.push_back(menu[pick(rng)]);
          const int a = blk(rng), b = blk(rng) + 1;
          return block_shape({a, b}, degs);
        }
      }
    }();
    const auto sys = build(shape, rec.seed);
    rec.shape = shape.label;
    const int bound = std::min(opt.bound, 10);
    const auto scan = regularity_scan(sys, bound);
    bool reg = true, hil = true, h1 = true;
    std::size_t agree_until = scan.degrees.size();
    for (std::size_t k = 0; k < scan.degrees.size(); ++k) {
      reg = reg && scan.injective[k];
      hil = hil && scan.hilbert_match[k];
      h1 = h1 && scan.h1_zero[k];
      if (!(reg == hil && hil == h1) && agree_until == scan.degrees.size()) agree_until = k;
    }
    rec.applicable = true;
    rec.values = {{"prefixes", std::to_string(scan.degrees.size())}, {"regular_through_bound", reg ? "1" : "0"}};
    if (agree_until != scan.degrees.size()) {
      rec.violation = true;
      rec.note = "predicates disagree at " + scan.degrees[agree_until].str();
    }
  });
}

SuiteResult suite_regular(const SuiteOptions& opt) {
  return run_trials("regular", opt, [&](TrialRecord& rec) {
    Rng rng(rec.seed);
    std::uniform_int_distribution<int> kind(0, 2);
    const int which = kind(rng);
    Shape shape = [&] {
      if (which == 0) {
        // generic m <= n
        std::uniform_int_distribution<int> nd(2, 4), dd(1, 3);
        const int n = nd(rng);
        std::uniform_int_distribution<int> md(1, n);
        const int m = md(rng);
        std::vector<MultiDegree> degs;
        for (int i = 0; i < m; ++i) degs.push_back(MultiDegree{dd(rng)});
        return standard_shape(n, degs);
      }
      if (which == 1) {
        std::uniform_int_distribution<int> nd(2, 5), dd(2, 3);
        const int n = nd(rng);
        std::uniform_int_distribution<int> md(n + 1, n + 3);
        const int m = md(rng);
        std::vector<MultiDegree> degs;
        for (int i = 0; i < m; ++i) degs.push_back(MultiDegree{dd(rng)});
        return standard_shape(n, degs, rng() % 2 == 0);
      }
      std::uniform_int_distribution<int> blk(1, 3), md(3, 8);
      return block_shape({blk(rng), blk(rng)}, repeat(MultiDegree{1, 1}, md(rng)));
    }();
    const auto sys = build(shape, rec.seed);
    rec.shape = shape.label;
    rec.applicable = true;
    if (which == 0) {
      long long worst = 0;
      for (const auto& p : syzygy_table(sys, opt.bound)) worst = std::max(worst, p.h1_dim);
      rec.values.push_back({"max_h1", std::to_string(worst)});
      if (worst != 0) {
        rec.violation = true;
        rec.note = "nonzero H1 on a generic m <= n system";
      }
    }
    const auto Dreg = series_dreg(sys, opt.bound);
    const auto dreg = dreg_actual(sys, opt.bound);
    rec.values.push_back({"D_reg", str(Dreg)});
    rec.values.push_back({"d_reg", str(dreg)});
    if (Dreg.is_found() && dreg.is_found() && *Dreg.value > *dreg.value) {
      rec.violation = true;
      rec.note += " D_reg > d_reg";
    }
  });
}

SuiteResult suite_gb(const SuiteOptions& opt) {
  return run_trials("gb", opt, [&](TrialRecord& rec) {
    Rng rng(rec.seed);
    std::uniform_int_distribution<int> kind(0, 2);
    const int which = kind(rng);
    Shape shape = [&] {
      if (which == 0) {
        std::uniform_int_distribution<int> nd(2, 4), dd(2, 3);
        const int n = nd(rng);
        std::uniform_int_distribution<int> md(n, n + 2);
        const int m = md(rng);
        std::vector<MultiDegree> degs;
        for (int i = 0; i < m; ++i) degs.push_back(MultiDegree{dd(rng)});
        return standard_shape(n, degs);
      }
      if (which == 1) {
        std::uniform_int_distribution<int> nd(2, 3);
        const int n = nd(rng);
        std::uniform_int_distribution<int> md(1, n);
        return standard_shape(n, repeat(MultiDegree{2}, md(rng)));
      }
      std::uniform_int_distribution<int> blk(2, 3), md(3, 6);
      return block_shape({2, blk(rng)}, repeat(MultiDegree{1, 1}, md(rng)));
    }();
    const auto sys = build(shape, rec.seed);
    rec.shape = shape.label;
    const int bound = std::min(opt.bound, 10);
    const auto trace = reduced_gb_bounded(sys, std::max(bound, 3));
    const auto standard = sys.collapsed();
    rec.applicable = true;
    for (int d = 0; d <= trace.max_degree; ++d) {
      const long long from_gb = trace.quotient_dim(standard.ring, d);
      const long long from_mac = static_cast<long long>(quotient_dim_total(sys, d));
      if (from_gb != from_mac) {
        rec.violation = true;
        rec.note = "quotient mismatch at degree " + std::to_string(d);
        break;
      }
    }
    const auto cls = is_semiregular(sys, bound);
    const auto Dreg = series_dreg(sys, bound + 1);
    rec.values = {{"d_slv", str(trace.d_slv)}, {"semiregular", std::string(to_string(cls))}, {"D_reg", str(Dreg)}};
    if (cls == SemiRegularity::True)
      for (const auto& [d, count] : trace.new_leading_by_degree)
        if (d > *Dreg.value) {
          rec.violation = true;
          rec.note += " new leading monomial above D_reg";
        }
  });
}

SuiteResult suite_constructions(const SuiteOptions& opt) {
  struct RainbowCase {
    std::uint32_t q;
    int v, o1, o2;
  };
  const std::vector<RainbowCase> rainbow{{31, 2, 1, 1}, {31, 3, 2, 2}, {7, 2, 2, 1}, {13, 3, 1, 2}, {11, 2, 2, 2}};
  struct KsCase {
    int N, k, r, c;
  };
  const std::vector<KsCase> ks{{4, 3, 1, 1}, {5, 4, 2, 2}, {6, 5, 2, 3}, {5, 3, 1, 2}, {6, 4, 3, 2}};
  const int series_bound = std::min(opt.bound, 15);
  return run_trials("constructions", opt, [&](TrialRecord& rec) {
    const auto& rc = rainbow[static_cast<std::size_t>(rec.index) % rainbow.size()];
    const auto& kc = ks[static_cast<std::size_t>(rec.index) % ks.size()];
    rec.shape = "rainbow(" + std::to_string(rc.q) + ";" + std::to_string(rc.v) + "," + std::to_string(rc.o1) + "," +
                std::to_string(rc.o2) + ") ks(N=" + std::to_string(kc.N) + ",k=" + std::to_string(kc.k) +
                ",r=" + std::to_string(kc.r) + ",c=" + std::to_string(kc.c) + ")";
    rec.applicable = true;
    auto fail = [&](const std::string& what) {
      rec.violation = true;
      rec.note += (rec.note.empty() ? "" : "; ") + what;
    };

    const auto key = rainbow_keygen(rc.q, rc.v, rc.o1, rc.o2, rec.seed);
    if (!rainbow_relation_holds(key)) fail("matrix relation");
    if (!rainbow_points_agree(key, 50, rec.seed ^ 0x5eedULL)) fail("P != T o F o U");

    const int m = rc.o1 + rc.o2;
    for (const auto& pub : {key.pub, random_symmetric_forms(key.field, key.params.n(), m, rec.seed + 1)}) {
      const auto rbs = rbs_system(pub, key.field, rc.v, rc.o1, rc.o2);
      const auto top = rbs.top_components();
      const auto degs = top.degrees();
      for (std::size_t i = 0; i < degs.size(); ++i) {
        const MultiDegree want = i < static_cast<std::size_t>(m) ? MultiDegree{2, 0} : MultiDegree{1, 1};
        if (degs[i] != want) fail("rbs top component " + std::to_string(i) + " has degree " + degs[i].str());
      }
      if (estimate_series(top.ring, degs, series_bound) != rbs_series_closed(rc.v, rc.o1, rc.o2, series_bound))
        fail("rbs series paths differ");
    }

    const auto inst = minrank_instance(kc.N, kc.k, kc.r, rec.seed);
    const auto cert = ks_certificate(inst, kc.c);
    const auto sys = ks_system(inst, kc.r, kc.c, cert.row_perm);
    const auto point_raw = cert.assignment();
    std::vector<FieldElem> point;
    for (auto v : point_raw) point.push_back({v});
    for (const auto& p : sys.polys)
      if (evaluate(p, point, inst.field).value != 0) {
        fail("ks assignment does not vanish");
        break;
      }
    const auto top = sys.top_components();
    const auto degs = top.degrees();
    for (std::size_t i = 0; i < degs.size(); ++i) {
      const std::size_t j = 1 + i / static_cast<std::size_t>(kc.k);
      const MultiDegree want = MultiDegree::unit(kc.c + 1, 0) + MultiDegree::unit(kc.c + 1, j);
      if (degs[i] != want) fail("ks top component " + std::to_string(i) + " has degree " + degs[i].str());
    }
    if (estimate_series(top.ring, degs, series_bound) != ks_series_closed(kc.k, kc.k, kc.r, kc.c, series_bound))
      fail("ks series paths differ");
    rec.values = {{"rainbow_ok", rec.violation ? "0" : "1"},
                  {"ks_row_perm_identity", std::is_sorted(cert.row_perm.begin(), cert.row_perm.end()) ? "1" : "0"}};
  });
}

}  // namespace

SystemInstance planted_dependency_system(const RingSpec& r, const std::vector<MultiDegree>& mdegs, std::uint64_t seed) {
  SystemInstance sys = random_system(r, mdegs, seed);
  if (sys.polys.empty()) return sys;
  Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
  const FieldSpec& f = r.field();
  const MultiDegree first_dir = MultiDegree::unit(r.s(), 0);
  Poly l;
  for (int k = 0; k < r.n(); ++k)
    if (r.weight(k) == first_dir) l.add_term(Monomial::var(r.n(), k), f.random_nonzero(rng), f);
  sys.polys.push_back(mul(l, sys.polys.front(), f));
  sys.provenance["generator"] = "planted";
  return sys;
}

std::string SuiteResult::csv() const {
  std::ostringstream os;
  os << "suite,index,seed,shape,applicable,violation,values,note\n";
  for (const auto& r : records) {
    std::string vals;
    for (const auto& [k, v] : r.values) vals += (vals.empty() ? "" : ";") + k + "=" + v;
    os << name << ',' << r.index << ',' << r.seed << ",\"" << r.shape << "\"," << r.applicable << ',' << r.violation
       << ",\"" << vals << "\",\"" << r.note << "\"\n";
  }
  return os.str();
}

nlohmann::json SuiteResult::summary() const {
  return {{"suite", name}, {"trials", trials}, {"applicable", applicable}, {"violations", violations}};
}

std::vector<std::string> suite_names() { return {"thm5", "thm8", "prop3", "diem", "regular", "gb", "constructions"}; }

SuiteResult run_suite(const std::string& name, const SuiteOptions& opt) {
  if (name == "thm5") return suite_thm5(opt);
  if (name == "thm8") return suite_thm8(opt);
  if (name == "prop3") return suite_prop3(opt);
  if (name == "diem") return suite_diem(opt);
  if (name == "regular") return suite_regular(opt);
  if (name == "gb") return suite_gb(opt);
  if (name == "constructions") return suite_constructions(opt);
  throw Error(ErrorKind::InvalidArgument, "unknown suite " + name);
}

}  // namespace firstfall
