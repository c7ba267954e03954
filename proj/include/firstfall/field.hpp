#pragma once

#include <compare>
#include <cstdint>
#include <random>

#include "firstfall/error.hpp"

namespace firstfall {

/// Canonical representative of an element of F_p, always in [0, p).
struct FieldElem {
  std::uint32_t value = 0;

  friend constexpr auto operator<=>(FieldElem, FieldElem) = default;
};

/// Prime field F_p with 2 <= p < 2^31.
class FieldSpec {
 public:
  explicit FieldSpec(std::uint64_t p);

  std::uint32_t p() const noexcept { return p_; }

  FieldElem zero() const noexcept { return {0}; }
  FieldElem one() const noexcept { return {1}; }
  FieldElem from_int(std::int64_t v) const noexcept;

  FieldElem add(FieldElem a, FieldElem b) const noexcept {
    std::uint32_t s = a.value + b.value;
    return {s >= p_ ? s - p_ : s};
  }
  FieldElem sub(FieldElem a, FieldElem b) const noexcept {
    return {a.value >= b.value ? a.value - b.value : a.value + p_ - b.value};
  }
  FieldElem neg(FieldElem a) const noexcept { return {a.value == 0 ? 0 : p_ - a.value}; }
  FieldElem mul(FieldElem a, FieldElem b) const noexcept {
    return {static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.value) * b.value % p_)};
  }
  FieldElem pow(FieldElem a, std::uint64_t e) const noexcept;
  FieldElem inv(FieldElem a) const;

  template <typename Rng>
  FieldElem random(Rng& rng) const {
    std::uniform_int_distribution<std::uint32_t> dist(0, p_ - 1);
    return {dist(rng)};
  }
  template <typename Rng>
  FieldElem random_nonzero(Rng& rng) const {
    std::uniform_int_distribution<std::uint32_t> dist(1, p_ - 1);
    return {dist(rng)};
  }

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n) noexcept;

/// Inverse of a in F_p; throws ZeroInverse for a = 0.
FieldElem ff_inv(FieldElem a, const FieldSpec& f);

/// Raw modular inverse on representatives, used by the elimination kernels.
std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p);

}  // namespace firstfall
