#include "firstfall/ring.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace firstfall {

namespace {

void require_same_size(const MultiDegree& a, const MultiDegree& b) {
  if (a.size() != b.size())
    throw Error(ErrorKind::DimensionMismatch,
                "multidegree lengths " + std::to_string(a.size()) + " and " + std::to_string(b.size()));
}

}  // namespace

MultiDegree MultiDegree::unit(std::size_t s, std::size_t i) {
  MultiDegree d(s);
  d[i] = 1;
  return d;
}

int MultiDegree::total() const noexcept { return std::accumulate(d_.begin(), d_.end(), 0); }

bool MultiDegree::is_nonneg() const noexcept {
  return std::all_of(d_.begin(), d_.end(), [](int x) { return x >= 0; });
}

bool MultiDegree::is_zero() const noexcept {
  return std::all_of(d_.begin(), d_.end(), [](int x) { return x == 0; });
}

MultiDegree& MultiDegree::operator+=(const MultiDegree& o) {
  require_same_size(*this, o);
  for (std::size_t i = 0; i < d_.size(); ++i) d_[i] += o.d_[i];
  return *this;
}

MultiDegree& MultiDegree::operator-=(const MultiDegree& o) {
  require_same_size(*this, o);
  for (std::size_t i = 0; i < d_.size(); ++i) d_[i] -= o.d_[i];
  return *this;
}

std::string MultiDegree::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < d_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(d_[i]);
  }
  return out + ")";
}

std::strong_ordering deglex_cmp(const MultiDegree& a, const MultiDegree& b) {
  require_same_size(a, b);
  if (auto c = a.total() <=> b.total(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.components().begin(), a.components().end(),
                                                b.components().begin(), b.components().end());
}

// ---------------------------------------------------------------------------

namespace {

std::vector<MultiDegree> unit_block_weights(const std::vector<Block>& blocks) {
  std::vector<MultiDegree> w;
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (int k = 0; k < blocks[i].vars; ++k) w.push_back(MultiDegree::unit(blocks.size(), i));
  return w;
}

}  // namespace

RingSpec::RingSpec(FieldSpec field, std::vector<Block> blocks)
    : RingSpec(field, blocks, unit_block_weights(blocks)) {}

RingSpec::RingSpec(FieldSpec field, std::vector<Block> blocks, std::vector<MultiDegree> weights)
    : field_(field), blocks_(std::move(blocks)), weights_(std::move(weights)) {
  n_ = 0;
  for (const auto& b : blocks_) {
    if (b.vars < 0) throw Error(ErrorKind::InvalidArgument, "block '" + b.name + "' has negative size");
    if (b.vars == 0) throw Error(ErrorKind::InvalidArgument, "block '" + b.name + "' has no variables");
    n_ += b.vars;
  }
  if (n_ < 1) throw Error(ErrorKind::InvalidArgument, "ring needs at least one variable");
  if (static_cast<int>(weights_.size()) != n_ || weights_.empty())
    throw Error(ErrorKind::DimensionMismatch, "expected one weight per variable");
  s_ = weights_.front().size();
  if (s_ == 0) throw Error(ErrorKind::DimensionMismatch, "weights must have at least one component");
  for (const auto& w : weights_) {
    if (w.size() != s_) throw Error(ErrorKind::DimensionMismatch, "weights differ in length");
    if (!w.is_nonneg() || w.is_zero())
      throw Error(ErrorKind::InvalidArgument, "weight " + w.str() + " must be nonzero and nonnegative");
  }
}

RingSpec RingSpec::standard(FieldSpec field, int n, std::string name) {
  return RingSpec(field, {Block{std::move(name), n}});
}

bool RingSpec::has_default_weights() const {
  if (s_ != blocks_.size()) return false;
  int var = 0;
  for (std::size_t i = 0; i < blocks_.size(); ++i)
    for (int k = 0; k < blocks_[i].vars; ++k, ++var)
      if (!(weights_[var] == MultiDegree::unit(s_, i))) return false;
  return true;
}

RingSpec RingSpec::collapsed() const {
  std::vector<MultiDegree> w;
  w.reserve(weights_.size());
  for (const auto& x : weights_) w.push_back(MultiDegree{x.total()});
  return RingSpec(field_, blocks_, std::move(w));
}

std::string RingSpec::var_name(int var) const {
  for (const auto& b : blocks_) {
    if (var < b.vars) return b.name + std::to_string(var + 1);
    var -= b.vars;
  }
  return "?";
}

// ---------------------------------------------------------------------------

Monomial Monomial::var(int n, int k, int e) {
  Monomial m = one(n);
  m.exps[k] = static_cast<std::uint16_t>(e);
  return m;
}

int Monomial::total() const noexcept {
  int t = 0;
  for (auto e : exps) t += e;
  return t;
}

bool Monomial::divides(const Monomial& other) const noexcept {
  for (std::size_t k = 0; k < exps.size(); ++k)
    if (exps[k] > other.exps[k]) return false;
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t k = 0; k < r.exps.size(); ++k) r.exps[k] = static_cast<std::uint16_t>(r.exps[k] + b.exps[k]);
  return r;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (auto e : m.exps) h = (h ^ e) * 1099511628211ULL;
  return h;
}

MultiDegree mdeg(const RingSpec& r, const Monomial& m) {
  MultiDegree d(r.s());
  for (int k = 0; k < r.n(); ++k)
    if (m.exps[k])
      for (std::size_t i = 0; i < r.s(); ++i) d[i] += m.exps[k] * r.weight(k)[i];
  return d;
}

// ---------------------------------------------------------------------------

FieldElem Poly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? FieldElem{0} : it->second;
}

void Poly::add_term(const Monomial& m, FieldElem c, const FieldSpec& f) {
  if (c.value == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second = f.add(it->second, c);
    if (it->second.value == 0) terms_.erase(it);
  }
}

Poly add(const Poly& a, const Poly& b, const FieldSpec& f) {
  Poly r = a;
  for (const auto& [m, c] : b.terms()) r.add_term(m, c, f);
  return r;
}

Poly sub(const Poly& a, const Poly& b, const FieldSpec& f) {
  Poly r = a;
  for (const auto& [m, c] : b.terms()) r.add_term(m, f.neg(c), f);
  return r;
}

Poly scale(const Poly& a, FieldElem c, const FieldSpec& f) {
  Poly r;
  if (c.value == 0) return r;
  for (const auto& [m, v] : a.terms()) r.add_term(m, f.mul(v, c), f);
  return r;
}

Poly mul(const Poly& a, const Poly& b, const FieldSpec& f) {
  Poly r;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) r.add_term(ma * mb, f.mul(ca, cb), f);
  return r;
}

Poly mul_monomial(const Poly& a, const Monomial& m) {
  Poly r;
  // multiplication by a monomial is injective on monomials: no cancellation
  for (const auto& [ma, ca] : a.terms()) r.insert_unique(ma * m, ca);
  return r;
}

FieldElem evaluate(const Poly& p, std::span<const FieldElem> point, const FieldSpec& f) {
  FieldElem acc = f.zero();
  for (const auto& [m, c] : p.terms()) {
    FieldElem t = c;
    for (std::size_t k = 0; k < m.exps.size(); ++k)
      if (m.exps[k]) t = f.mul(t, f.pow(point[k], m.exps[k]));
    acc = f.add(acc, t);
  }
  return acc;
}

Poly substitute(const Poly& p, std::span<const Poly> images, const FieldSpec& f, int target_n) {
  Poly result;
  for (const auto& [m, c] : p.terms()) {
    Poly term;
    term.add_term(Monomial::one(target_n), c, f);
    for (std::size_t k = 0; k < m.exps.size(); ++k)
      for (int e = 0; e < m.exps[k]; ++e) term = mul(term, images[k], f);
    result = add(result, term, f);
  }
  return result;
}

std::string to_string(const Poly& p, const RingSpec& r) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    if (!first) os << " + ";
    first = false;
    bool is_one = m.total() == 0;
    if (c.value != 1 || is_one) os << c.value;
    bool need_star = c.value != 1;
    for (int k = 0; k < r.n(); ++k) {
      if (!m.exps[k]) continue;
      if (need_star) os << "*";
      os << r.var_name(k);
      if (m.exps[k] > 1) os << "^" << m.exps[k];
      need_star = true;
    }
  }
  return os.str();
}

Homogeneity is_multihomogeneous(const Poly& p, const RingSpec& r) {
  if (p.is_zero()) return {Homogeneity::Kind::Zero, {}};
  std::optional<MultiDegree> d;
  for (const auto& [m, c] : p.terms()) {
    MultiDegree dm = mdeg(r, m);
    if (!d) d = dm;
    else if (!(*d == dm)) return {Homogeneity::Kind::NotHomogeneous, {}};
  }
  return {Homogeneity::Kind::Degree, *d};
}

Poly top_component(const Poly& p) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "top component of the zero polynomial");
  int top = 0;
  for (const auto& [m, c] : p.terms()) top = std::max(top, m.total());
  Poly r;
  for (const auto& [m, c] : p.terms())
    if (m.total() == top) r.insert_unique(m, c);
  return r;
}

// ---------------------------------------------------------------------------

namespace {

struct BasisEnumerator {
  const RingSpec& r;
  int cap;  // exponent strict upper bound, or INT_MAX
  std::vector<Monomial>* out;
  std::size_t count = 0;
  Monomial cur;

  // Exponents are assigned from the first variable on; trying exponents in
  // increasing order yields ascending lexicographic output.
  void run(int var, MultiDegree& rest) {
    if (var == r.n()) {
      if (rest.is_zero()) {
        ++count;
        if (out) out->push_back(cur);
      }
      return;
    }
    const MultiDegree& w = r.weight(var);
    int max_e = cap - 1;
    for (std::size_t i = 0; i < w.size(); ++i)
      if (w[i] > 0) max_e = std::min(max_e, rest[i] / w[i]);
    for (int e = 0; e <= max_e; ++e) {
      cur.exps[var] = static_cast<std::uint16_t>(e);
      if (e) rest -= w;
      run(var + 1, rest);
    }
    for (int e = 1; e <= max_e; ++e) rest += w;
    cur.exps[var] = 0;
  }
};

void check_degree(const RingSpec& r, const MultiDegree& d) {
  if (d.size() != r.s())
    throw Error(ErrorKind::DimensionMismatch,
                "degree " + d.str() + " has length " + std::to_string(d.size()) + ", ring has s=" +
                    std::to_string(r.s()));
}

}  // namespace

std::vector<Monomial> monomial_basis(const RingSpec& r, const MultiDegree& d, std::optional<int> exp_cap) {
  check_degree(r, d);
  if (exp_cap && *exp_cap < 1) throw Error(ErrorKind::InvalidArgument, "exp_cap must be >= 1");
  std::vector<Monomial> out;
  if (!d.is_nonneg()) return out;
  BasisEnumerator e{r, exp_cap.value_or(1 << 20), &out, 0, Monomial::one(r.n())};
  MultiDegree rest = d;
  e.run(0, rest);
  return out;
}

std::size_t monomial_count(const RingSpec& r, const MultiDegree& d, std::optional<int> exp_cap) {
  check_degree(r, d);
  if (!d.is_nonneg()) return 0;
  BasisEnumerator e{r, exp_cap.value_or(1 << 20), nullptr, 0, Monomial::one(r.n())};
  MultiDegree rest = d;
  e.run(0, rest);
  return e.count;
}

std::vector<MultiDegree> multidegrees_of_total(std::size_t s, int t) {
  std::vector<MultiDegree> out;
  if (s == 0 || t < 0) return out;
  MultiDegree cur(s);
  // lexicographically ascending: first component grows slowest
  auto rec = [&](auto&& self, std::size_t i, int rest) -> void {
    if (i + 1 == s) {
      cur[i] = rest;
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= rest; ++v) {
      cur[i] = v;
      self(self, i + 1, rest - v);
    }
  };
  rec(rec, 0, t);
  return out;
}

std::vector<MultiDegree> multidegrees_up_to(std::size_t s, int bound) {
  std::vector<MultiDegree> out;
  for (int t = 0; t <= bound; ++t) {
    auto level = multidegrees_of_total(s, t);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

// ---------------------------------------------------------------------------

bool SystemInstance::homogeneous() const {
  for (const auto& p : polys)
    if (!is_multihomogeneous(p, ring).is_degree()) return false;
  return true;
}

std::vector<MultiDegree> SystemInstance::degrees() const {
  std::vector<MultiDegree> out;
  out.reserve(polys.size());
  for (std::size_t i = 0; i < polys.size(); ++i) {
    auto h = is_multihomogeneous(polys[i], ring);
    if (h.kind == Homogeneity::Kind::Zero)
      throw Error(ErrorKind::NonHomogeneousSystem, "generator " + std::to_string(i) + " is zero");
    if (h.kind == Homogeneity::Kind::NotHomogeneous)
      throw Error(ErrorKind::NonHomogeneousSystem,
                  "generator " + std::to_string(i) + " is not multihomogeneous");
    out.push_back(h.degree);
  }
  return out;
}

SystemInstance SystemInstance::top_components() const {
  SystemInstance out{ring, {}, provenance};
  for (const auto& p : polys)
    if (!p.is_zero()) out.polys.push_back(top_component(p));
  return out;
}

SystemInstance SystemInstance::collapsed() const { return SystemInstance{ring.collapsed(), polys, provenance}; }

SystemInstance SystemInstance::prefix(std::size_t k) const {
  SystemInstance out{ring, {}, provenance};
  out.polys.assign(polys.begin(), polys.begin() + static_cast<std::ptrdiff_t>(std::min(k, polys.size())));
  return out;
}

}  // namespace firstfall
