#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bigint.hpp"
#include "cohomology.hpp"
#include "matrix.hpp"
#include "polynomial.hpp"

namespace ulrichlab {

/// Outcome of Fedder's criterion for X = V(f): X is Frobenius split iff
/// f^{p-1} is not in (x_0^p, ..., x_n^p).
struct SplitVerdict {
  bool split = false;
  /// Largest surviving monomial of f^{p-1} (all exponents <= p-1), when split.
  std::optional<Monomial> witness;
  PrimeField::Element witness_coefficient = 0;
};

inline SplitVerdict fedder_check(std::uint32_t p, const Polynomial& f, int d, int n) {
  if (f.field().characteristic() != p || f.n_vars() != static_cast<std::size_t>(n + 1))
    throw InconsistentDegrees("fedder_check: polynomial does not live in F_p[x_0..x_n]");
  if (f.is_zero() || !f.is_homogeneous() || f.degree() != d)
    throw InconsistentDegrees("fedder_check: polynomial is not homogeneous of degree " + std::to_string(d));

  const Polynomial power = f.pow(p - 1);
  const int bound = static_cast<int>(p) - 1;
  for (const auto& [m, c] : power.terms())
    if (m.bounded_by(bound)) return SplitVerdict{true, m, c};
  return SplitVerdict{false, std::nullopt, 0};
}

/// Matrix of the Frobenius action xi -> f^{p-1} xi^p on H^n(P^n, O(-d)), which
/// is H^q(X, O_X) for the hypersurface. Basis: Laurent monomials x^c with every
/// c_i <= -1 and |c| = -d, in the order of `frobenius_action_basis`.
/// Column j holds the image of basis element j.
struct FrobActionMatrix {
  std::vector<std::vector<int>> basis;
  MatrixFp matrix;
};

inline std::vector<std::vector<int>> frobenius_action_basis(int n, int d) {
  // c_i = -1 - e_i with e a monomial of degree d - n - 1 in n + 1 variables.
  std::vector<std::vector<int>> basis;
  for (const auto& e : graded_piece_basis(static_cast<std::size_t>(n + 1), d - n - 1)) {
    std::vector<int> c(e.n_vars());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = -1 - e[i];
    basis.push_back(std::move(c));
  }
  return basis;
}

inline FrobActionMatrix frobenius_action(std::uint32_t p, const Polynomial& f, int d, int n) {
  if (f.field().characteristic() != p || f.n_vars() != static_cast<std::size_t>(n + 1))
    throw InconsistentDegrees("frobenius_action: polynomial does not live in F_p[x_0..x_n]");
  if (f.is_zero() || !f.is_homogeneous() || f.degree() != d)
    throw InconsistentDegrees("frobenius_action: polynomial is not homogeneous of degree " + std::to_string(d));

  auto basis = frobenius_action_basis(n, d);
  std::map<std::vector<int>, std::size_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);

  MatrixFp matrix(f.field(), basis.size(), basis.size());
  if (basis.empty()) return {std::move(basis), std::move(matrix)};

  const Polynomial power = f.pow(p - 1);
  const int ip = static_cast<int>(p);
  for (std::size_t j = 0; j < basis.size(); ++j) {
    for (const auto& [u, coeff] : power.terms()) {
      std::vector<int> image(u.n_vars());
      bool survives = true;
      for (std::size_t i = 0; i < image.size() && survives; ++i) {
        image[i] = u[i] + ip * basis[j][i];
        survives = image[i] <= -1;
      }
      // Terms with a non-negative exponent die in the top cohomology.
      if (survives) matrix.accumulate(index.at(image), j, coeff);
    }
  }
  return {std::move(basis), std::move(matrix)};
}

/// The space with its splitting state decided by Fedder's criterion. P^n and
/// hypersurfaces without a defining polynomial are returned unchanged.
inline AmbientSpace verify_splitting(const AmbientSpace& space) {
  if (!space.is_hypersurface() || !space.f()) return space;
  const bool split = fedder_check(space.p(), *space.f(), space.d(), space.n()).split;
  return space.with_split_state(split ? SplitState::Split : SplitState::NotSplit);
}

/// Calabi-Yau hypersurfaces (d = n + 1) only: split iff the Frobenius action on
/// the one-dimensional H^q(O_X) is nonzero.
inline AmbientSpace verify_splitting_hasse_witt(const AmbientSpace& space) {
  if (!space.is_hypersurface() || !space.f()) return space;
  if (space.d() != space.n() + 1)
    throw UnsupportedSpace("Hasse-Witt splitting route needs a Calabi-Yau hypersurface (d = n + 1)");
  const bool split = !frobenius_action(space.p(), *space.f(), space.d(), space.n()).matrix.is_zero();
  return space.with_split_state(split ? SplitState::Split : SplitState::NotSplit);
}

}  // namespace ulrichlab
