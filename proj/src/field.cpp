#include "firstfall/field.hpp"

#include <string>

namespace firstfall {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ZeroInverse: return "ZeroInverse";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::BoundTooLarge: return "BoundTooLarge";
    case ErrorKind::ArityError: return "ArityError";
    case ErrorKind::NonHomogeneousSystem: return "NonHomogeneousSystem";
    case ErrorKind::MixedDegrees: return "MixedDegrees";
    case ErrorKind::EvenCharacteristic: return "EvenCharacteristic";
    case ErrorKind::SingularSample: return "SingularSample";
    case ErrorKind::SigningFailure: return "SigningFailure";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::OmegaOutOfRange: return "OmegaOutOfRange";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

FieldSpec::FieldSpec(std::uint64_t p) : p_(static_cast<std::uint32_t>(p)) {
  if (p >= (1ULL << 31) || !is_prime(p))
    throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not a prime below 2^31");
}

FieldElem FieldSpec::from_int(std::int64_t v) const noexcept {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return {static_cast<std::uint32_t>(r)};
}

FieldElem FieldSpec::pow(FieldElem a, std::uint64_t e) const noexcept {
  FieldElem result = one();
  while (e) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  if (a % p == 0) throw Error(ErrorKind::ZeroInverse, "inverse of zero");
  // extended Euclid on signed 64-bit
  std::int64_t t = 0, new_t = 1, r = p, new_r = a % p;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

FieldElem FieldSpec::inv(FieldElem a) const { return {inv_mod(a.value, p_)}; }

FieldElem ff_inv(FieldElem a, const FieldSpec& f) { return f.inv(a); }

}  // namespace firstfall
