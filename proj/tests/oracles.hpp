#pragma once

// Brute-force reference computations used only by the tests. Nothing here
// shares code paths with the library beyond the value types.

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <vector>

#include "ulrichlab/ulrichlab.hpp"

namespace oracle {

/// Every exponent vector in [0, t]^n_vars whose entries sum to t.
inline std::vector<std::vector<int>> enumerate_degree(std::size_t n_vars, int t) {
  std::vector<std::vector<int>> out;
  if (t < 0) return out;
  std::vector<int> e(n_vars, 0);
  for (;;) {
    int s = 0;
    for (int v : e) s += v;
    if (s == t) out.push_back(e);
    std::size_t i = 0;
    while (i < n_vars && ++e[i] > t) e[i++] = 0;
    if (i == n_vars) return out;
  }
}

/// h^0(P^n, O(t)) as the number of degree-t monomials.
inline std::int64_t h0_pn_by_count(int n, int t) {
  return static_cast<std::int64_t>(enumerate_degree(static_cast<std::size_t>(n + 1), t).size());
}

/// h^n(P^n, O(t)) as the number of Laurent monomials with all exponents <= -1 of degree t.
inline std::int64_t hn_pn_by_count(int n, int t) {
  // Substitute e_i = -c_i - 1 >= 0 with sum -t - n - 1.
  return static_cast<std::int64_t>(enumerate_degree(static_cast<std::size_t>(n + 1), -t - n - 1).size());
}

/// Rank over F_p by inserting rows one at a time into a basis keyed by leading column.
inline std::size_t rank_by_insertion(const std::vector<std::vector<std::int64_t>>& rows, std::int64_t p) {
  auto mod = [p](std::int64_t v) { return ((v % p) + p) % p; };
  auto inverse = [&](std::int64_t a) {
    for (std::int64_t x = 1; x < p; ++x)
      if (mod(a * x) == 1) return x;
    return std::int64_t{0};
  };
  std::map<std::size_t, std::vector<std::int64_t>> basis;
  for (auto row : rows) {
    for (auto& v : row) v = mod(v);
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (row[c] == 0) continue;
      auto it = basis.find(c);
      if (it == basis.end()) {
        const std::int64_t inv = inverse(row[c]);
        for (auto& v : row) v = mod(v * inv);
        basis.emplace(c, row);
        break;
      }
      const std::int64_t factor = row[c];
      for (std::size_t k = 0; k < row.size(); ++k) row[k] = mod(row[k] - factor * it->second[k]);
    }
  }
  return basis.size();
}

/// Product of two polynomials by expanding term lists into a plain map.
inline std::map<std::vector<int>, std::int64_t> expand_product(
    const std::vector<std::pair<std::vector<int>, std::int64_t>>& a,
    const std::vector<std::pair<std::vector<int>, std::int64_t>>& b, std::int64_t p) {
  std::map<std::vector<int>, std::int64_t> out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      std::vector<int> e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out[e] = (out[e] + ca * cb) % p;
    }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

inline ulrichlab::Polynomial random_form(const ulrichlab::PrimeField& field, std::size_t n_vars, int d,
                                         std::mt19937_64& rng, double density = 1.0) {
  std::uniform_int_distribution<std::uint32_t> coeff(0, field.characteristic() - 1);
  std::bernoulli_distribution keep(density);
  for (;;) {
    ulrichlab::Polynomial f(field, n_vars);
    for (const auto& m : ulrichlab::graded_piece_basis(n_vars, d))
      if (keep(rng)) f.add_term(m, coeff(rng));
    if (!f.is_zero()) return f;
  }
}

}  // namespace oracle
