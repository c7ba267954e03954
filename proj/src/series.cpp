#include "firstfall/series.hpp"

#include <algorithm>
#include <map>

#include <omp.h>

namespace firstfall {

std::string DegreeAnswer::str() const {
  return value ? std::to_string(*value) : "NotFoundUpTo(" + std::to_string(bound) + ")";
}

std::string MultiDegreeAnswer::str() const {
  return value ? value->str() : "NotFoundUpTo(" + std::to_string(bound) + ")";
}

// ---------------------------------------------------------------------------

namespace {

// C(n, k) in size_t, saturating.
std::size_t binom_sat(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > std::numeric_limits<std::size_t>::max()) return std::numeric_limits<std::size_t>::max();
  }
  return static_cast<std::size_t>(r);
}

}  // namespace

std::size_t DegreeIndex::count(std::size_t s, int bound) {
  if (bound < 0) return 0;
  return binom_sat(static_cast<std::size_t>(bound) + s, s);
}

DegreeIndex::DegreeIndex(std::size_t s, int bound) : s_(s), bound_(bound) {
  if (s == 0) throw Error(ErrorKind::DimensionMismatch, "series arity must be >= 1");
  if (bound < 0) throw Error(ErrorKind::InvalidArgument, "bound must be >= 0");
  for (int t = 0; t <= bound; ++t) {
    level_start_.push_back(degrees_.size());
    auto level = multidegrees_of_total(s, t);
    degrees_.insert(degrees_.end(), std::make_move_iterator(level.begin()), std::make_move_iterator(level.end()));
  }
  level_start_.push_back(degrees_.size());
}

std::size_t DegreeIndex::rank(const MultiDegree& d) const {
  const int t = d.total();
  std::size_t r = level_start_[static_cast<std::size_t>(t)];
  int rest = t;
  for (std::size_t i = 0; i + 1 < s_; ++i) {
    const std::size_t parts = s_ - i - 1;  // components after i
    for (int u = 0; u < d[i]; ++u)
      r += binom_sat(static_cast<std::size_t>(rest - u) + parts - 1, parts - 1);
    rest -= d[i];
  }
  return r;
}

// ---------------------------------------------------------------------------

SeriesTrunc::SeriesTrunc(std::size_t s, int bound) : index_(s, bound), coeffs_(index_.size()) {}

SeriesTrunc SeriesTrunc::one(std::size_t s, int bound) {
  SeriesTrunc r(s, bound);
  r.coeffs_[0] = 1;
  return r;
}

mpz_class SeriesTrunc::coeff(const MultiDegree& d) const {
  if (d.size() != s()) throw Error(ErrorKind::DimensionMismatch, "coefficient index " + d.str());
  if (!d.is_nonneg()) return 0;
  if (d.total() > bound())
    throw Error(ErrorKind::DimensionMismatch, "degree " + d.str() + " beyond truncation " + std::to_string(bound()));
  return coeffs_[index_.rank(d)];
}

std::vector<std::ptrdiff_t> SeriesTrunc::shift_table(const MultiDegree& a) const {
  if (a.size() != s()) throw Error(ErrorKind::DimensionMismatch, "factor degree " + a.str());
  std::vector<std::ptrdiff_t> src(index_.size(), -1);
  for (std::size_t i = 0; i < index_.size(); ++i) {
    MultiDegree d = index_.at(i) - a;
    if (d.is_nonneg()) src[i] = static_cast<std::ptrdiff_t>(index_.rank(d));
  }
  return src;
}

// Factor kernels. Every entry of a total-degree level reads only entries of
// strictly lower levels (a != 0), so a level is data-parallel.
void SeriesTrunc::mul_one_minus(const MultiDegree& a, unsigned power, Kernel kernel) {
  if (a.is_zero()) throw Error(ErrorKind::InvalidArgument, "factor (1 - t^0)");
  const auto src = shift_table(a);
  for (unsigned rep = 0; rep < power; ++rep) {
    for (int t = bound(); t >= 1; --t) {
      const auto lo = static_cast<std::ptrdiff_t>(index_.level_begin(t));
      const auto hi = static_cast<std::ptrdiff_t>(index_.level_begin(t + 1));
#pragma omp parallel for schedule(static) if (kernel == Kernel::Parallel && hi - lo > 64)
      for (std::ptrdiff_t i = lo; i < hi; ++i)
        if (src[static_cast<std::size_t>(i)] >= 0)
          coeffs_[static_cast<std::size_t>(i)] -= coeffs_[static_cast<std::size_t>(src[static_cast<std::size_t>(i)])];
    }
  }
}

void SeriesTrunc::div_one_minus(const MultiDegree& a, unsigned power, Kernel kernel) {
  if (a.is_zero()) throw Error(ErrorKind::InvalidArgument, "factor (1 - t^0)");
  const auto src = shift_table(a);
  for (unsigned rep = 0; rep < power; ++rep) {
    for (int t = 1; t <= bound(); ++t) {
      const auto lo = static_cast<std::ptrdiff_t>(index_.level_begin(t));
      const auto hi = static_cast<std::ptrdiff_t>(index_.level_begin(t + 1));
#pragma omp parallel for schedule(static) if (kernel == Kernel::Parallel && hi - lo > 64)
      for (std::ptrdiff_t i = lo; i < hi; ++i)
        if (src[static_cast<std::size_t>(i)] >= 0)
          coeffs_[static_cast<std::size_t>(i)] += coeffs_[static_cast<std::size_t>(src[static_cast<std::size_t>(i)])];
    }
  }
}

SeriesTrunc operator*(const SeriesTrunc& x, const SeriesTrunc& y) {
  if (x.s() != y.s() || x.bound() != y.bound())
    throw Error(ErrorKind::DimensionMismatch, "series product operands differ in shape");
  SeriesTrunc r(x.s(), x.bound());
  const auto& idx = x.index();
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (x.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < idx.size(); ++j) {
      if (y.coeffs_[j] == 0) continue;
      if (idx.at(i).total() + idx.at(j).total() > x.bound()) continue;
      r.coeffs_[idx.rank(idx.at(i) + idx.at(j))] += x.coeffs_[i] * y.coeffs_[j];
    }
  }
  return r;
}

SeriesTrunc operator+(const SeriesTrunc& x, const SeriesTrunc& y) {
  if (x.s() != y.s() || x.bound() != y.bound())
    throw Error(ErrorKind::DimensionMismatch, "series sum operands differ in shape");
  SeriesTrunc r = x;
  for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] += y.coeffs_[i];
  return r;
}

SeriesTrunc SeriesTrunc::collapse_total() const {
  SeriesTrunc r(1, bound());
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    r.coeffs_[static_cast<std::size_t>(index_.at(i).total())] += coeffs_[i];
  return r;
}

std::vector<std::pair<MultiDegree, mpz_class>> SeriesTrunc::terms() const {
  std::vector<std::pair<MultiDegree, mpz_class>> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) out.emplace_back(index_.at(i), coeffs_[i]);
  return out;
}

// ---------------------------------------------------------------------------

namespace {

void check_cap(std::size_t s, int bound, std::size_t cap) {
  const std::size_t n = DegreeIndex::count(s, bound);
  if (n > cap)
    throw Error(ErrorKind::BoundTooLarge, "series table needs " + std::to_string(n) + " entries, cap is " +
                                              std::to_string(cap));
}

template <typename F>
void for_each_grouped(const std::vector<MultiDegree>& degs, F&& fn) {
  std::map<std::vector<int>, unsigned> groups;
  for (const auto& d : degs) ++groups[std::vector<int>(d.components().begin(), d.components().end())];
  for (const auto& [d, count] : groups) fn(MultiDegree(d), count);
}

}  // namespace

SeriesTrunc hilbert_series_ring(const RingSpec& r, int bound, Kernel kernel) {
  check_cap(r.s(), bound, kDefaultSeriesCap);
  SeriesTrunc hs = SeriesTrunc::one(r.s(), bound);
  for_each_grouped(r.weights(), [&](const MultiDegree& w, unsigned k) { hs.div_one_minus(w, k, kernel); });
  return hs;
}

SeriesTrunc estimate_series(const RingSpec& r, const std::vector<MultiDegree>& gen_degs, int bound, Kernel kernel,
                            std::size_t cap) {
  if (bound < 0) throw Error(ErrorKind::InvalidArgument, "bound must be >= 0");
  for (const auto& d : gen_degs) {
    if (d.size() != r.s())
      throw Error(ErrorKind::DimensionMismatch, "generator degree " + d.str() + " for s=" + std::to_string(r.s()));
    if (!d.is_nonneg() || d.is_zero())
      throw Error(ErrorKind::InvalidArgument, "generator degree " + d.str() + " must be nonzero");
  }
  check_cap(r.s(), bound, cap);
  SeriesTrunc series = SeriesTrunc::one(r.s(), bound);
  for_each_grouped(r.weights(), [&](const MultiDegree& w, unsigned k) { series.div_one_minus(w, k, kernel); });
  for_each_grouped(gen_degs, [&](const MultiDegree& d, unsigned k) { series.mul_one_minus(d, k, kernel); });
  return series;
}

DegreeAnswer find_dreg(const SeriesTrunc& series) {
  if (series.s() != 1)
    throw Error(ErrorKind::ArityError, "D_reg needs a univariate series, got s=" + std::to_string(series.s()));
  for (int d = 1; d <= series.bound(); ++d)
    if (series.at(static_cast<std::size_t>(d)) <= 0) return DegreeAnswer::found(d, series.bound());
  return DegreeAnswer::not_found(series.bound());
}

DegreeAnswer find_dmulti(const SeriesTrunc& series) {
  auto ordered = find_dmulti_ordered(series);
  if (!ordered.is_found()) return DegreeAnswer::not_found(series.bound());
  return DegreeAnswer::found(ordered.value->total(), series.bound());
}

MultiDegreeAnswer find_dmulti_ordered(const SeriesTrunc& series) {
  // storage order is deglex, so the first negative entry is the minimum
  for (std::size_t i = 0; i < series.coeffs().size(); ++i)
    if (series.at(i) < 0) return MultiDegreeAnswer::found(series.index().at(i), series.bound());
  return MultiDegreeAnswer::not_found(series.bound());
}

// ---------------------------------------------------------------------------

SeriesTrunc product_form_series(const std::vector<NumeratorFactor>& numerator,
                                const std::vector<unsigned>& denominators, int bound) {
  const std::size_t s = denominators.size();
  for (const auto& nf : numerator)
    if (nf.degree.size() != s || nf.degree.is_zero() || !nf.degree.is_nonneg())
      throw Error(ErrorKind::DimensionMismatch, "numerator factor degree " + nf.degree.str());
  check_cap(s, bound, kDefaultSeriesCap);

  // Numerator polynomial: sum over k-tuples of (-1)^{|k|} prod C(e_i, k_i) t^{sum k_i a_i}.
  std::map<std::vector<int>, mpz_class> num;
  std::vector<int> acc(s, 0);
  auto rec = [&](auto&& self, std::size_t f, int total, const mpz_class& c) -> void {
    if (f == numerator.size()) {
      num[acc] += c;
      return;
    }
    const auto& nf = numerator[f];
    const int step = nf.degree.total();
    mpz_class binom;
    for (unsigned k = 0; k <= nf.exponent && total + static_cast<int>(k) * step <= bound; ++k) {
      mpz_bin_uiui(binom.get_mpz_t(), nf.exponent, k);
      for (std::size_t j = 0; j < s; ++j) acc[j] += static_cast<int>(k) * nf.degree[j];
      self(self, f + 1, total + static_cast<int>(k) * step, (k % 2 ? -c : c) * binom);
      for (std::size_t j = 0; j < s; ++j) acc[j] -= static_cast<int>(k) * nf.degree[j];
    }
  };
  rec(rec, 0, 0, mpz_class(1));

  SeriesTrunc out(s, bound);
  mpz_class term, b;
  for (std::size_t i = 0; i < out.index().size(); ++i) {
    const MultiDegree& d = out.index().at(i);
    mpz_class sum = 0;
    for (const auto& [nd, c] : num) {
      if (c == 0) continue;
      term = c;
      for (std::size_t j = 0; j < s && term != 0; ++j) {
        const int rj = d[j] - nd[j];
        if (rj < 0) {
          term = 0;
        } else if (denominators[j] == 0) {
          if (rj != 0) term = 0;
        } else {
          mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(rj) + denominators[j] - 1, denominators[j] - 1);
          term *= b;
        }
      }
      sum += term;
    }
    out.at(i) = sum;
  }
  return out;
}

}  // namespace firstfall
