#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace ulrichlab {

/// A monomial x_0^{e_0} ... x_n^{e_n} with non-negative exponents.
///
/// Ordering is graded lexicographic: total degree first, then the exponent
/// vectors lexicographically with x_0 most significant. Within one degree the
/// largest monomial is x_0^t.
class Monomial {
 public:
  Monomial() = default;

  explicit Monomial(std::vector<int> exponents) : exps_(std::move(exponents)) {
    for (int e : exps_)
      if (e < 0) throw std::invalid_argument("Monomial: negative exponent");
    degree_ = std::accumulate(exps_.begin(), exps_.end(), 0);
  }

  static Monomial one(std::size_t n_vars) { return Monomial(std::vector<int>(n_vars, 0)); }

  static Monomial variable(std::size_t n_vars, std::size_t i, int e = 1) {
    std::vector<int> v(n_vars, 0);
    v.at(i) = e;
    return Monomial(std::move(v));
  }

  std::size_t n_vars() const { return exps_.size(); }
  int degree() const { return degree_; }
  int operator[](std::size_t i) const { return exps_[i]; }
  std::span<const int> exponents() const { return exps_; }

  Monomial operator*(const Monomial& o) const {
    if (o.n_vars() != n_vars()) throw std::invalid_argument("Monomial: variable count mismatch");
    std::vector<int> v(exps_);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += o.exps_[i];
    return Monomial(std::move(v));
  }

  /// True when every exponent is at most `bound`.
  bool bounded_by(int bound) const {
    return std::all_of(exps_.begin(), exps_.end(), [bound](int e) { return e <= bound; });
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
    return std::lexicographical_compare_three_way(a.exps_.begin(), a.exps_.end(), b.exps_.begin(),
                                                  b.exps_.end());
  }

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
      if (exps_[i] == 0) continue;
      if (!out.empty()) out += '*';
      out += 'x' + std::to_string(i);
      if (exps_[i] > 1) out += '^' + std::to_string(exps_[i]);
    }
    return out.empty() ? "1" : out;
  }

 private:
  std::vector<int> exps_;
  int degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (int e : m.exponents()) h = (h ^ static_cast<std::size_t>(e)) * 0x100000001b3ull;
    return h;
  }
};

/// All monomials of total degree t in n_vars variables, largest first.
/// Empty for t < 0.
inline std::vector<Monomial> graded_piece_basis(std::size_t n_vars, int t) {
  if (n_vars == 0) throw std::invalid_argument("graded_piece_basis: need at least one variable");
  std::vector<Monomial> out;
  if (t < 0) return out;
  std::vector<int> e(n_vars, 0);
  // Recursive fill of e[i..] with the remaining degree, larger leading exponents first.
  std::function<void(std::size_t, int)> fill = [&](std::size_t i, int remaining) {
    if (i + 1 == n_vars) {
      e[i] = remaining;
      out.emplace_back(e);
      return;
    }
    for (int v = remaining; v >= 0; --v) {
      e[i] = v;
      fill(i + 1, remaining - v);
    }
  };
  fill(0, t);
  return out;
}

/// A graded piece together with the reverse lookup monomial -> position.
class GradedBasis {
 public:
  GradedBasis(std::size_t n_vars, int t) : monomials_(graded_piece_basis(n_vars, t)) {
    index_.reserve(monomials_.size());
    for (std::size_t i = 0; i < monomials_.size(); ++i) index_.emplace(monomials_[i], i);
  }

  std::size_t size() const { return monomials_.size(); }
  const std::vector<Monomial>& monomials() const { return monomials_; }
  std::size_t index_of(const Monomial& m) const { return index_.at(m); }

 private:
  std::vector<Monomial> monomials_;
  std::unordered_map<Monomial, std::size_t, MonomialHash> index_;
};

}  // namespace ulrichlab
