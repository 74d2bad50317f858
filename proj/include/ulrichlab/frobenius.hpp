#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bigint.hpp"
#include "cohomology.hpp"
#include "errors.hpp"
#include "matrix.hpp"
#include "monomial.hpp"
#include "polynomial.hpp"

namespace ulrichlab {

/// Multiplicities of line-bundle summands: twist j -> number of copies of O(j).
using TwistMultiset = std::map<int, int, std::greater<>>;

namespace detail {

/// All exponent vectors in {0, ..., p-1}^{n_vars}, lexicographic.
inline std::vector<std::vector<int>> residue_box(std::uint32_t p, std::size_t n_vars) {
  std::vector<std::vector<int>> out;
  std::vector<int> a(n_vars, 0);
  for (;;) {
    out.push_back(a);
    std::size_t i = n_vars;
    while (i > 0) {
      --i;
      if (++a[i] < static_cast<int>(p)) break;
      a[i] = 0;
      if (i == 0) return out;
    }
  }
}

inline int total(const std::vector<int>& a) { return std::accumulate(a.begin(), a.end(), 0); }

inline bool congruent(int x, int y, int p) { return ((x - y) % p + p) % p == 0; }

/// Residue classes a with |a| = k (mod p), paired with their pushforward degree (|a| - k) / p.
inline std::vector<std::pair<std::vector<int>, int>> pushforward_generators(std::uint32_t p, std::size_t n_vars,
                                                                            int k) {
  std::vector<std::pair<std::vector<int>, int>> gens;
  const int ip = static_cast<int>(p);
  for (auto& a : residue_box(p, n_vars)) {
    const int s = total(a);
    if (congruent(s, k, ip)) gens.emplace_back(a, (s - k) / ip);
  }
  return gens;
}

}  // namespace detail

/// F_* O_{P^n}(k) = sum over residues a in {0..p-1}^{n+1} with |a| = k (mod p)
/// of O(-(|a| - k)/p).
inline TwistMultiset decompose_pn(std::uint32_t p, int n, int k) {
  (void)PrimeField(p);
  if (n < 1 || n > AmbientSpace::kMaxAmbientDim) throw UnsupportedSpace("decompose_pn: n must be in [1, 4]");
  TwistMultiset out;
  for (const auto& [a, t] : detail::pushforward_generators(p, static_cast<std::size_t>(n + 1), k)) ++out[-t];
  return out;
}

inline std::string format_decomposition(const TwistMultiset& ms) {
  std::string out;
  for (const auto& [j, mult] : ms) {
    if (!out.empty()) out += " ⊕ ";
    out += j == 0 ? "O" : "O(" + std::to_string(j) + ")";
    if (mult > 1) out += "^" + std::to_string(mult);
  }
  return out;
}

/// Graded map of free S-modules  sum_c S(-col_twist_c) -> sum_r S(-row_twist_r)
/// whose cokernel is the module under study. Entry (r, c) is homogeneous of
/// degree col_twist_c - row_twist_r, or zero.
class PresentationMatrix {
 public:
  enum class Kind { FrobPushHyp, B1Hyp };

  PresentationMatrix(Kind kind, PrimeField field, std::size_t n_vars, std::vector<int> row_twists,
                     std::vector<int> col_twists, std::vector<Polynomial> entries)
      : kind_(kind),
        field_(field),
        n_vars_(n_vars),
        row_twists_(std::move(row_twists)),
        col_twists_(std::move(col_twists)),
        entries_(std::move(entries)) {
    if (entries_.size() != row_twists_.size() * col_twists_.size())
      throw std::invalid_argument("PresentationMatrix: entry count does not match shape");
    for (std::size_t r = 0; r < rows(); ++r)
      for (std::size_t c = 0; c < cols(); ++c) {
        const Polynomial& e = entry(r, c);
        if (e.is_zero()) continue;
        if (!e.is_homogeneous() || e.degree() != col_twists_[c] - row_twists_[r])
          throw InconsistentDegrees("PresentationMatrix: entry (" + std::to_string(r) + "," + std::to_string(c) +
                                    ") is not homogeneous of degree " +
                                    std::to_string(col_twists_[c] - row_twists_[r]));
      }
  }

  Kind kind() const { return kind_; }
  const PrimeField& field() const { return field_; }
  std::size_t n_vars() const { return n_vars_; }
  std::size_t rows() const { return row_twists_.size(); }
  std::size_t cols() const { return col_twists_.size(); }
  const std::vector<int>& row_twists() const { return row_twists_; }
  const std::vector<int>& col_twists() const { return col_twists_; }
  const Polynomial& entry(std::size_t r, std::size_t c) const { return entries_[r * cols() + c]; }

 private:
  Kind kind_;
  PrimeField field_;
  std::size_t n_vars_;
  std::vector<int> row_twists_;
  std::vector<int> col_twists_;
  std::vector<Polynomial> entries_;
};

namespace detail {

inline void check_defining_polynomial(std::uint32_t p, const Polynomial& f, int d) {
  if (f.field().characteristic() != p) throw InconsistentDegrees("defining polynomial lives over a different field");
  if (f.is_zero() || !f.is_homogeneous() || f.degree() != d)
    throw InconsistentDegrees("defining polynomial is not homogeneous of degree " + std::to_string(d));
}

}  // namespace detail

/// Presentation of F_* O_X(k) over S = F_p[x_0..x_n]: F_* of multiplication by f,
///   F_* S(k - d) -> F_* S(k),
/// written in the free bases {x^a : a a residue class}. Square of size p^n.
inline PresentationMatrix build_frobpush_presentation(std::uint32_t p, const Polynomial& f, int d, int k) {
  detail::check_defining_polynomial(p, f, d);
  const std::size_t nv = f.n_vars();
  const int ip = static_cast<int>(p);

  const auto targets = detail::pushforward_generators(p, nv, k);
  const auto sources = detail::pushforward_generators(p, nv, k - d);
  std::map<std::vector<int>, std::size_t> target_index;
  for (std::size_t r = 0; r < targets.size(); ++r) target_index.emplace(targets[r].first, r);

  std::vector<Polynomial> entries(targets.size() * sources.size(), Polynomial(f.field(), nv));
  for (std::size_t c = 0; c < sources.size(); ++c) {
    const auto& src = sources[c].first;
    for (const auto& [u, coeff] : f.terms()) {
      // x^u * x^src = (x^w)^p * x^a with a the componentwise residue.
      std::vector<int> a(nv), w(nv);
      for (std::size_t i = 0; i < nv; ++i) {
        const int e = u[i] + src[i];
        a[i] = e % ip;
        w[i] = e / ip;
      }
      const std::size_t r = target_index.at(a);
      entries[r * sources.size() + c].add_term(Monomial(std::move(w)), coeff);
    }
  }

  std::vector<int> row_twists, col_twists;
  for (const auto& g : targets) row_twists.push_back(g.second);
  for (const auto& g : sources) col_twists.push_back(g.second);
  return PresentationMatrix(PresentationMatrix::Kind::FrobPushHyp, f.field(), nv, std::move(row_twists),
                            std::move(col_twists), std::move(entries));
}

/// Presentation of B^1_X = F_* O_X / O_X: the k = 0 pushforward presentation with
/// one extra relation killing the degree-0 generator (the class of 1).
/// Assumes f irreducible so that g -> g^p mod f is injective in each degree.
inline PresentationMatrix build_b1_presentation(std::uint32_t p, const Polynomial& f, int d) {
  const PresentationMatrix base = build_frobpush_presentation(p, f, d, 0);
  const std::size_t nv = f.n_vars();
  const std::size_t rows = base.rows(), cols = base.cols() + 1;

  std::vector<Polynomial> entries;
  entries.reserve(rows * cols);
  std::optional<std::size_t> unit_row;
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < base.cols(); ++c) entries.push_back(base.entry(r, c));
    entries.emplace_back(f.field(), nv);
  }
  // Residue 0 is the first element of the lexicographic box.
  for (std::size_t r = 0; r < rows; ++r)
    if (base.row_twists()[r] == 0) {
      unit_row = r;
      break;
    }
  entries[*unit_row * cols + base.cols()] = Polynomial::constant(f.field(), nv, 1);

  std::vector<int> col_twists = base.col_twists();
  col_twists.push_back(0);
  return PresentationMatrix(PresentationMatrix::Kind::B1Hyp, f.field(), nv, base.row_twists(), std::move(col_twists),
                            std::move(entries));
}

/// dim_k of the degree-t piece of the cokernel, by exact rank over F_p.
inline BigInt hilbert_function(const PresentationMatrix& pm, int t) {
  const std::size_t nv = pm.n_vars();
  std::vector<std::optional<GradedBasis>> row_bases(pm.rows());
  std::vector<std::size_t> offsets(pm.rows());
  std::size_t target_dim = 0;
  for (std::size_t r = 0; r < pm.rows(); ++r) {
    offsets[r] = target_dim;
    const int deg = t - pm.row_twists()[r];
    if (deg < 0) continue;
    row_bases[r].emplace(nv, deg);
    target_dim += row_bases[r]->size();
  }
  if (target_dim == 0) return 0;

  std::size_t source_dim = 0;
  std::vector<std::vector<Monomial>> col_bases(pm.cols());
  for (std::size_t c = 0; c < pm.cols(); ++c) {
    col_bases[c] = graded_piece_basis(nv, t - pm.col_twists()[c]);
    source_dim += col_bases[c].size();
  }

  // One matrix row per source basis element (transpose of the map).
  MatrixFp image(pm.field(), source_dim, target_dim);
  std::size_t row = 0;
  for (std::size_t c = 0; c < pm.cols(); ++c) {
    for (const Monomial& mu : col_bases[c]) {
      for (std::size_t r = 0; r < pm.rows(); ++r) {
        const Polynomial& e = pm.entry(r, c);
        if (e.is_zero()) continue;
        for (const auto& [w, coeff] : e.terms())
          image.accumulate(row, offsets[r] + row_bases[r]->index_of(w * mu), coeff);
      }
      ++row;
    }
  }
  return BigInt(target_dim - matrix_rank(image));
}

/// Generic rank of the sheaf presented by `pm`, read off the leading coefficient
/// r * d / q! of its Hilbert polynomial. The q-th finite difference of the
/// Hilbert function must be constant over [t_lo, t_hi].
inline int rank_from_hilbert(const PresentationMatrix& pm, const AmbientSpace& space, int t_lo = 3,
                             std::optional<int> t_hi = std::nullopt) {
  if (!space.is_hypersurface()) throw std::invalid_argument("rank_from_hilbert: space is not a hypersurface");
  const int q = space.q();
  const int hi = t_hi.value_or(t_lo + q + 1);
  if (hi - t_lo + 1 < q + 2)
    throw InsufficientWindow("rank_from_hilbert: window [" + std::to_string(t_lo) + "," + std::to_string(hi) +
                             "] too short to confirm a degree-" + std::to_string(q) + " polynomial");
  std::vector<BigInt> diffs;
  for (int t = t_lo; t <= hi; ++t) diffs.push_back(hilbert_function(pm, t));
  for (int level = 0; level < q; ++level)
    for (std::size_t i = 0; i + 1 < diffs.size() - level; ++i) diffs[i] = diffs[i + 1] - diffs[i];
  diffs.resize(diffs.size() - q);
  for (const auto& v : diffs)
    if (v != diffs.front())
      throw InsufficientWindow("rank_from_hilbert: Hilbert function not yet polynomial on [" + std::to_string(t_lo) +
                               "," + std::to_string(hi) + "]");
  const BigInt& lead = diffs.front();
  if (lead % space.d() != 0) throw InsufficientWindow("rank_from_hilbert: leading coefficient not divisible by d");
  return static_cast<int>(lead / space.d());
}

}  // namespace ulrichlab
