#include "firstfall/syzygy.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace firstfall {

namespace {

/// Column layout of (+)_i S_{d - d_i}: one block of monomials per generator.
struct ModuleColumns {
  std::vector<std::unordered_map<Monomial, std::uint32_t, MonomialHash>> col_of;
  std::size_t ncols = 0;

  ModuleColumns(const SystemInstance& sys, const std::vector<MultiDegree>& degs, const MultiDegree& d,
                std::optional<int> cap) {
    col_of.resize(degs.size());
    for (std::size_t i = 0; i < degs.size(); ++i)
      for (auto& m : monomial_basis(sys.ring, d - degs[i], cap))
        col_of[i].emplace(std::move(m), static_cast<std::uint32_t>(ncols++));
  }
};

bool within_cap(const Monomial& m, std::optional<int> cap) {
  if (!cap) return true;
  return std::all_of(m.exps.begin(), m.exps.end(), [&](std::uint16_t e) { return e < *cap; });
}

/// Appends b * (entries of `poly` placed in block `block` with sign), products taken mod x^cap.
void add_block(std::vector<std::pair<std::uint32_t, std::uint32_t>>& entries, const ModuleColumns& cols,
               std::size_t block, const Poly& poly, const Monomial& b, bool negate, const FieldSpec& f,
               std::optional<int> cap) {
  for (const auto& [mono, c] : poly.terms()) {
    Monomial prod = mono * b;
    if (!within_cap(prod, cap)) continue;
    entries.emplace_back(cols.col_of[block].at(prod), negate ? f.neg(c).value : c.value);
  }
}

SparseRow to_row(std::vector<std::pair<std::uint32_t, std::uint32_t>>& entries) {
  std::sort(entries.begin(), entries.end());
  SparseRow row;
  for (auto [c, v] : entries) {
    row.cols.push_back(c);
    row.vals.push_back(v);
  }
  entries.clear();
  return row;
}

/// Rows b * pi_ij for all i < j, and b * tau_i when `tau` is given.
SparseMatrix trivial_syzygy_matrix(const SystemInstance& sys, const std::vector<MultiDegree>& degs,
                                   const MultiDegree& d, std::optional<int> cap, const std::vector<Poly>* tau,
                                   const std::vector<MultiDegree>* tau_degs) {
  const FieldSpec& f = sys.ring.field();
  ModuleColumns cols(sys, degs, d, cap);
  SparseMatrix m;
  m.ncols = cols.ncols;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> entries;
  for (std::size_t i = 0; i < degs.size(); ++i)
    for (std::size_t j = i + 1; j < degs.size(); ++j) {
      const MultiDegree rest = d - degs[i] - degs[j];
      if (!rest.is_nonneg()) continue;
      for (const auto& b : monomial_basis(sys.ring, rest, cap)) {
        // pi_ij = -h_j e_i + h_i e_j
        add_block(entries, cols, i, sys.polys[j], b, true, f, cap);
        add_block(entries, cols, j, sys.polys[i], b, false, f, cap);
        m.rows.push_back(to_row(entries));
      }
    }
  if (tau)
    for (std::size_t i = 0; i < degs.size(); ++i) {
      const MultiDegree rest = d - degs[i] - (*tau_degs)[i];
      if (!rest.is_nonneg() || (*tau)[i].is_zero()) continue;
      for (const auto& b : monomial_basis(sys.ring, rest, cap)) {
        add_block(entries, cols, i, (*tau)[i], b, false, f, cap);
        m.rows.push_back(to_row(entries));
      }
    }
  return m;
}

SystemInstance standard_view(const SystemInstance& sys) {
  SystemInstance out = sys.ring.s() == 1 ? sys : sys.collapsed();
  for (const auto& w : out.ring.weights())
    if (w[0] != 1)
      throw Error(ErrorKind::InvalidArgument, "the truncated ring needs every variable of standard degree 1");
  return out;
}

Poly truncated_power(const Poly& h, unsigned e, int cap, const FieldSpec& f) {
  Poly result;
  result.add_term(Monomial::one(static_cast<int>(h.terms().begin()->first.exps.size())), f.one(), f);
  for (unsigned k = 0; k < e && !result.is_zero(); ++k) {
    Poly next;
    for (const auto& [ma, ca] : result.terms())
      for (const auto& [mb, cb] : h.terms()) {
        Monomial prod = ma * mb;
        if (within_cap(prod, cap)) next.add_term(prod, f.mul(ca, cb), f);
      }
    result = std::move(next);
  }
  return result;
}

}  // namespace

long long syz_dim(const SystemInstance& sys, const MultiDegree& d) {
  return static_cast<long long>(macaulay_rank(sys, d).kernel_dim);
}

long long ksyz_dim(const SystemInstance& sys, const MultiDegree& d, std::size_t cap) {
  const auto degs = sys.degrees();
  SparseMatrix m = trivial_syzygy_matrix(sys, degs, d, std::nullopt, nullptr, nullptr);
  if (m.rows.empty()) return 0;
  return static_cast<long long>(rank_sparse(m, sys.ring.field(), cap));
}

SyzygyProfile syzygy_profile(const SystemInstance& sys, const MultiDegree& d) {
  SyzygyProfile p;
  p.degree = d;
  p.syz_dim = syz_dim(sys, d);
  p.ksyz_dim = p.syz_dim == 0 ? 0 : ksyz_dim(sys, d, static_cast<std::size_t>(p.syz_dim));
  p.h1_dim = p.syz_dim - p.ksyz_dim;
  return p;
}

std::vector<SyzygyProfile> syzygy_table(const SystemInstance& sys, int bound) {
  sys.degrees();
  std::vector<SyzygyProfile> out;
  for (const auto& d : multidegrees_up_to(sys.ring.s(), bound)) out.push_back(syzygy_profile(sys, d));
  return out;
}

MultiDegreeAnswer dff_prime_ordered(const SystemInstance& sys, int bound) {
  sys.degrees();
  for (const auto& d : multidegrees_up_to(sys.ring.s(), bound))
    if (syzygy_profile(sys, d).h1_dim > 0) return MultiDegreeAnswer::found(d, bound);
  return MultiDegreeAnswer::not_found(bound);
}

DegreeAnswer dff_prime(const SystemInstance& sys, int bound) {
  auto ordered = dff_prime_ordered(sys, bound);
  if (!ordered.is_found()) return DegreeAnswer::not_found(bound);
  return DegreeAnswer::found(ordered.value->total(), bound);
}

TruncatedProfile truncated_profile(const SystemInstance& sys_in, int d) {
  const SystemInstance sys = standard_view(sys_in);
  const auto degs = sys.degrees();
  const FieldSpec& f = sys.ring.field();
  const int q = static_cast<int>(f.p());
  for (const auto& di : degs)
    if (di[0] != degs.front()[0]) throw Error(ErrorKind::MixedDegrees, "generators must share one degree");

  TruncatedProfile out;
  out.degree = d;
  const MultiDegree target{d};
  auto view = macaulay_rank(sys, target, q);
  out.syz_dim = static_cast<long long>(view.kernel_dim);
  if (out.syz_dim == 0 || degs.empty()) return out;

  // tau_i = h_i^{q-1} e_i sits in syzygy degree q*d0.
  const int d0 = degs.front()[0];
  std::vector<Poly> tau;
  std::vector<MultiDegree> tau_degs;
  const bool with_tau = static_cast<long long>(d) >= static_cast<long long>(q) * d0;
  if (with_tau)
    for (const auto& h : sys.polys) {
      tau.push_back(truncated_power(h, static_cast<unsigned>(q - 1), q, f));
      tau_degs.push_back(MultiDegree{d0 * (q - 1)});
    }
  SparseMatrix m = trivial_syzygy_matrix(sys, degs, target, q, with_tau ? &tau : nullptr,
                                         with_tau ? &tau_degs : nullptr);
  out.tsyz_dim = m.rows.empty() ? 0 : static_cast<long long>(rank_sparse(m, f, static_cast<std::size_t>(out.syz_dim)));
  return out;
}

DegreeAnswer dff_truncated(const SystemInstance& sys_in, int bound) {
  const SystemInstance sys = standard_view(sys_in);
  const auto degs = sys.degrees();
  for (const auto& di : degs)
    if (di[0] != degs.front()[0]) throw Error(ErrorKind::MixedDegrees, "generators must share one degree");
  for (int d = 0; d <= bound; ++d) {
    auto prof = truncated_profile(sys, d);
    if (prof.syz_dim > prof.tsyz_dim) return DegreeAnswer::found(d, bound);
  }
  return DegreeAnswer::not_found(bound);
}

// ---------------------------------------------------------------------------

namespace {

/// Memoized dim (S/<h_1..h_k>)_d for prefixes k = 0..m.
class PrefixQuotients {
 public:
  explicit PrefixQuotients(const SystemInstance& sys) : sys_(sys), degs_(sys.degrees()) {
    for (std::size_t k = 0; k <= sys.size(); ++k) prefixes_.push_back(sys.prefix(k));
  }

  long long dim(std::size_t k, const MultiDegree& d) {
    if (!d.is_nonneg()) return 0;
    auto key = std::make_pair(k, std::vector<int>(d.components().begin(), d.components().end()));
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    long long v = k == 0 ? static_cast<long long>(monomial_count(sys_.ring, d))
                         : static_cast<long long>(quotient_dim(prefixes_[k], d));
    cache_.emplace(std::move(key), v);
    return v;
  }

  /// Every multiplication map x h_i into degree d is injective.
  bool injective_at(const MultiDegree& d) {
    for (std::size_t i = 1; i <= degs_.size(); ++i)
      if (dim(i, d) != dim(i - 1, d) - dim(i - 1, d - degs_[i - 1])) return false;
    return true;
  }

 private:
  const SystemInstance& sys_;
  std::vector<MultiDegree> degs_;
  std::vector<SystemInstance> prefixes_;
  std::map<std::pair<std::size_t, std::vector<int>>, long long> cache_;
};

}  // namespace

bool regular_up_to(const SystemInstance& sys, const MultiDegree& d) {
  if (d.size() != sys.ring.s()) throw Error(ErrorKind::DimensionMismatch, "degree " + d.str());
  PrefixQuotients pq(sys);
  for (const auto& d0 : multidegrees_up_to(sys.ring.s(), d.total())) {
    if (deglex_cmp(d0, d) == std::strong_ordering::greater) break;
    if (!pq.injective_at(d0)) return false;
  }
  return true;
}

bool regular_up_to_total(const SystemInstance& sys, int t) {
  PrefixQuotients pq(sys);
  for (const auto& d0 : multidegrees_up_to(sys.ring.s(), t))
    if (!pq.injective_at(d0)) return false;
  return true;
}

RegularityScan regularity_scan(const SystemInstance& sys, int bound) {
  PrefixQuotients pq(sys);
  const auto series = estimate_series(sys.ring, sys.degrees(), bound);
  RegularityScan scan;
  for (const auto& d : multidegrees_up_to(sys.ring.s(), bound)) {
    scan.degrees.push_back(d);
    scan.injective.push_back(pq.injective_at(d));
    scan.hilbert_match.push_back(mpz_class(static_cast<long>(pq.dim(sys.size(), d))) == series.coeff(d));
    scan.h1_zero.push_back(syzygy_profile(sys, d).h1_dim == 0);
  }
  return scan;
}

std::string_view to_string(SemiRegularity v) {
  switch (v) {
    case SemiRegularity::True: return "true";
    case SemiRegularity::False: return "false";
    case SemiRegularity::UnknownAboveBound: return "UnknownAboveBound";
  }
  return "?";
}

DegreeAnswer series_dreg(const SystemInstance& sys, int bound) {
  const auto collapsed = sys.collapsed();
  return find_dreg(estimate_series(collapsed.ring, collapsed.degrees(), bound));
}

SemiRegularity is_semiregular(const SystemInstance& sys, int bound) {
  const auto dreg = series_dreg(sys, bound + 1);
  if (!dreg.is_found() || *dreg.value - 1 > bound) return SemiRegularity::UnknownAboveBound;
  return regular_up_to_total(sys, *dreg.value - 1) ? SemiRegularity::True : SemiRegularity::False;
}

}  // namespace firstfall
