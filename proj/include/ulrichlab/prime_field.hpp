#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ulrichlab {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// The prime field F_p. Elements are plain residues in [0, p).
class PrimeField {
 public:
  using Element = std::uint32_t;

  explicit PrimeField(std::uint32_t p) : p_(p) {
    if (p >= (1u << 31) || !is_prime(p))
      throw std::invalid_argument("PrimeField: " + std::to_string(p) + " is not a supported prime");
  }

  std::uint32_t characteristic() const { return p_; }

  Element reduce(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<Element>(r < 0 ? r + p_ : r);
  }

  Element add(Element a, Element b) const { return static_cast<Element>((std::uint64_t{a} + b) % p_); }
  Element sub(Element a, Element b) const { return add(a, neg(b)); }
  Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
  Element mul(Element a, Element b) const { return static_cast<Element>((std::uint64_t{a} * b) % p_); }

  Element pow(Element a, std::uint64_t e) const {
    Element result = 1 % p_;
    while (e) {
      if (e & 1) result = mul(result, a);
      a = mul(a, a);
      e >>= 1;
    }
    return result;
  }

  Element inv(Element a) const {
    if (a % p_ == 0) throw std::domain_error("PrimeField: inverse of zero");
    return pow(a, p_ - 2);
  }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

}  // namespace ulrichlab
