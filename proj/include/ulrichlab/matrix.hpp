#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "prime_field.hpp"

namespace ulrichlab {

/// Dense row-major matrix over F_p.
class MatrixFp {
 public:
  using Element = PrimeField::Element;

  MatrixFp(PrimeField field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static MatrixFp identity(PrimeField field, std::size_t n) {
    MatrixFp m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
  }

  const PrimeField& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Element at(std::size_t r, std::size_t c) const { return data_.at(r * cols_ + c); }
  void set(std::size_t r, std::size_t c, std::int64_t v) { data_.at(r * cols_ + c) = field_.reduce(v); }
  void accumulate(std::size_t r, std::size_t c, Element v) {
    auto& slot = data_[r * cols_ + c];
    slot = field_.add(slot, v);
  }

  std::span<const Element> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](Element v) { return v == 0; });
  }

  friend bool operator==(const MatrixFp&, const MatrixFp&) = default;

 private:
  PrimeField field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Element> data_;
};

namespace detail {

// Forward elimination on a row-major buffer. P != 0 fixes the modulus at compile
// time so the inner update vectorizes; P == 0 reads it from `p`.
// Word must hold (p-1) + (p-1)^2 without overflow.
template <typename Word, std::uint32_t P>
std::size_t eliminate(std::vector<Word>& a, std::size_t rows, std::size_t cols, std::uint32_t p) {
  using Wide = std::conditional_t<(sizeof(Word) < 4), std::uint32_t, std::uint64_t>;
  const PrimeField field(P ? P : p);
  auto reduce = [p](Wide v) -> Word {
    if constexpr (P != 0)
      return static_cast<Word>(v % P);
    else
      return static_cast<Word>(v % p);
  };
  const Wide modulus = P ? P : p;

  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot * cols + col] == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank)
      std::swap_ranges(a.begin() + pivot * cols, a.begin() + (pivot + 1) * cols, a.begin() + rank * cols);

    Word* prow = a.data() + rank * cols;
    const Wide inv = field.inv(prow[col]);
    for (std::size_t j = col; j < cols; ++j) prow[j] = reduce(Wide{prow[j]} * inv);

    for (std::size_t r = rank + 1; r < rows; ++r) {
      Word* row = a.data() + r * cols;
      const Wide c = row[col];
      if (c == 0) continue;
      const Word factor = static_cast<Word>(modulus - c);
      for (std::size_t j = col; j < cols; ++j) row[j] = reduce(Wide{row[j]} + Wide{factor} * prow[j]);
    }
    ++rank;
  }
  return rank;
}

template <typename Word, std::uint32_t P>
std::size_t rank_with(const MatrixFp& m) {
  std::vector<Word> buf(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto src = m.row(r);
    std::copy(src.begin(), src.end(), buf.begin() + r * m.cols());
  }
  return eliminate<Word, P>(buf, m.rows(), m.cols(), m.field().characteristic());
}

}  // namespace detail

/// Exact rank over F_p by Gaussian elimination.
inline std::size_t matrix_rank(const MatrixFp& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  switch (m.field().characteristic()) {
    case 2: return detail::rank_with<std::uint8_t, 2>(m);
    case 3: return detail::rank_with<std::uint8_t, 3>(m);
    case 5: return detail::rank_with<std::uint8_t, 5>(m);
    case 7: return detail::rank_with<std::uint8_t, 7>(m);
    default: break;
  }
  if (m.field().characteristic() < 256) return detail::rank_with<std::uint16_t, 0>(m);
  return detail::rank_with<std::uint64_t, 0>(m);
}

}  // namespace ulrichlab
