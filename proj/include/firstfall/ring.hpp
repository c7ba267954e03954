#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "firstfall/field.hpp"

namespace firstfall {

/// Element of Z_{>=0}^s. Arithmetic checks lengths; subtraction may go negative
/// (callers test `is_nonneg()` before using the result as a degree).
class MultiDegree {
 public:
  MultiDegree() = default;
  explicit MultiDegree(std::size_t s) : d_(s, 0) {}
  MultiDegree(std::initializer_list<int> d) : d_(d) {}
  explicit MultiDegree(std::vector<int> d) : d_(std::move(d)) {}

  static MultiDegree unit(std::size_t s, std::size_t i);

  std::size_t size() const noexcept { return d_.size(); }
  int operator[](std::size_t i) const { return d_[i]; }
  int& operator[](std::size_t i) { return d_[i]; }
  std::span<const int> components() const noexcept { return d_; }

  int total() const noexcept;
  bool is_nonneg() const noexcept;
  bool is_zero() const noexcept;

  MultiDegree& operator+=(const MultiDegree& o);
  MultiDegree& operator-=(const MultiDegree& o);
  friend MultiDegree operator+(MultiDegree a, const MultiDegree& b) { return a += b; }
  friend MultiDegree operator-(MultiDegree a, const MultiDegree& b) { return a -= b; }
  friend bool operator==(const MultiDegree&, const MultiDegree&) = default;

  std::string str() const;

 private:
  std::vector<int> d_;
};

/// Canonical degree-compatible well-ordering: total degree first, then
/// lexicographic on (d_1, ..., d_s).
std::strong_ordering deglex_cmp(const MultiDegree& a, const MultiDegree& b);

struct DeglexLess {
  bool operator()(const MultiDegree& a, const MultiDegree& b) const {
    return deglex_cmp(a, b) == std::strong_ordering::less;
  }
};

struct Block {
  std::string name;
  int vars = 0;
  friend bool operator==(const Block&, const Block&) = default;
};

/// Z^s-graded polynomial ring over a prime field. Variables are numbered in
/// block-concatenation order.
class RingSpec {
 public:
  /// Default grading: every variable of block i has degree e_i, s = #blocks.
  RingSpec(FieldSpec field, std::vector<Block> blocks);
  RingSpec(FieldSpec field, std::vector<Block> blocks, std::vector<MultiDegree> weights);

  static RingSpec standard(FieldSpec field, int n, std::string name = "x");

  const FieldSpec& field() const noexcept { return field_; }
  std::size_t s() const noexcept { return s_; }
  int n() const noexcept { return n_; }
  const std::vector<Block>& blocks() const noexcept { return blocks_; }
  const std::vector<MultiDegree>& weights() const noexcept { return weights_; }
  const MultiDegree& weight(int var) const { return weights_[var]; }
  bool has_default_weights() const;

  /// The same variables graded by total weight |w| (s = 1).
  RingSpec collapsed() const;

  std::string var_name(int var) const;

  friend bool operator==(const RingSpec&, const RingSpec&) = default;

 private:
  FieldSpec field_;
  std::vector<Block> blocks_;
  std::vector<MultiDegree> weights_;
  std::size_t s_ = 0;
  int n_ = 0;
};

struct Monomial {
  std::vector<std::uint16_t> exps;

  static Monomial one(int n) { return Monomial{std::vector<std::uint16_t>(n, 0)}; }
  static Monomial var(int n, int k, int e = 1);

  int total() const noexcept;
  bool divides(const Monomial& other) const noexcept;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

MultiDegree mdeg(const RingSpec& r, const Monomial& m);

/// Sparse polynomial; never stores zero coefficients.
class Poly {
 public:
  using TermMap = std::map<Monomial, FieldElem>;

  Poly() = default;

  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  FieldElem coeff(const Monomial& m) const;

  /// Adds c*m in place.
  void add_term(const Monomial& m, FieldElem c, const FieldSpec& f);
  /// Inserts a term whose monomial is not yet present; c must be nonzero.
  void insert_unique(const Monomial& m, FieldElem c) { terms_.emplace_hint(terms_.end(), m, c); }

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  TermMap terms_;
};

Poly add(const Poly& a, const Poly& b, const FieldSpec& f);
Poly sub(const Poly& a, const Poly& b, const FieldSpec& f);
Poly scale(const Poly& a, FieldElem c, const FieldSpec& f);
Poly mul(const Poly& a, const Poly& b, const FieldSpec& f);
Poly mul_monomial(const Poly& a, const Monomial& m);
FieldElem evaluate(const Poly& p, std::span<const FieldElem> point, const FieldSpec& f);
/// Polynomial substitution x_k -> images[k]; all images live in the target ring.
Poly substitute(const Poly& p, std::span<const Poly> images, const FieldSpec& f, int target_n);

std::string to_string(const Poly& p, const RingSpec& r);

/// Outcome of a homogeneity check.
struct Homogeneity {
  enum class Kind { Degree, NotHomogeneous, Zero } kind;
  MultiDegree degree;

  bool is_degree() const { return kind == Kind::Degree; }
};

Homogeneity is_multihomogeneous(const Poly& p, const RingSpec& r);

/// Terms of maximal total degree (standard grading, ignoring weights).
Poly top_component(const Poly& p);

/// All monomials of multidegree exactly d, ascending lexicographic order on
/// exponent vectors; with exp_cap every exponent is < exp_cap.
std::vector<Monomial> monomial_basis(const RingSpec& r, const MultiDegree& d,
                                     std::optional<int> exp_cap = std::nullopt);

/// Number of monomials of multidegree d; same semantics as monomial_basis.
std::size_t monomial_count(const RingSpec& r, const MultiDegree& d,
                           std::optional<int> exp_cap = std::nullopt);

/// All multidegrees with total <= bound in deglex order.
std::vector<MultiDegree> multidegrees_up_to(std::size_t s, int bound);
/// All multidegrees with total == t in deglex (lexicographic) order.
std::vector<MultiDegree> multidegrees_of_total(std::size_t s, int t);

/// A sequence of polynomials over a common ring, with provenance metadata.
struct SystemInstance {
  RingSpec ring;
  std::vector<Poly> polys;
  nlohmann::json provenance = nlohmann::json::object();

  std::size_t size() const noexcept { return polys.size(); }

  bool homogeneous() const;
  /// Per-generator multidegrees; throws NonHomogeneousSystem if any generator
  /// is zero or not multihomogeneous.
  std::vector<MultiDegree> degrees() const;

  /// Top (total-degree) components of every generator, same ring.
  SystemInstance top_components() const;
  /// Same polynomials in the collapsed (s = 1) ring.
  SystemInstance collapsed() const;
  /// First k generators.
  SystemInstance prefix(std::size_t k) const;

  friend bool operator==(const SystemInstance& a, const SystemInstance& b) {
    return a.ring == b.ring && a.polys == b.polys && a.provenance == b.provenance;
  }
};

}  // namespace firstfall
