#ifndef CWM_CONSTRUCTIONS_HPP
#define CWM_CONSTRUCTIONS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "cwm/circulant.hpp"

namespace cwm {

/// Dense square {-1, 0, +1} matrix, row-major.
class DenseMatrix {
public:
  explicit DenseMatrix(std::int64_t order);

  static DenseMatrix identity(std::int64_t order);
  /// The full circulant matrix whose first row is `row`; row r is the
  /// first row cyclically shifted right r times.
  static DenseMatrix circulant(const CirculantRow& row);

  std::int64_t order() const noexcept { return order_; }
  std::int8_t operator()(std::int64_t i, std::int64_t j) const { return entries_[index(i, j)]; }
  void set(std::int64_t i, std::int64_t j, std::int8_t value);

  /// k with A A^T = k I, or nullopt.
  std::optional<std::int64_t> weighing_weight() const;
  bool is_circulant() const;
  CirculantRow first_row() const;

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

private:
  std::size_t index(std::int64_t i, std::int64_t j) const {
    return static_cast<std::size_t>(i * order_ + j);
  }

  std::int64_t order_;
  std::vector<std::int8_t> entries_;
};

/// Block matrix (A_ij B).
DenseMatrix kronecker(const DenseMatrix& a, const DenseMatrix& b);

/// Index map on 0..km-1 sending r*m + s to s*k + r (0 <= r < k, 0 <= s < m):
/// interleaves k blocks of size m.
class InterleavePermutation {
public:
  InterleavePermutation(std::int64_t blocks, std::int64_t block_size);

  std::int64_t blocks() const noexcept { return blocks_; }
  std::int64_t block_size() const noexcept { return block_size_; }
  std::int64_t size() const noexcept { return blocks_ * block_size_; }

  std::int64_t operator()(std::int64_t i) const;

  /// B with B(p(i), p(j)) = A(i, j), i.e. P^{-1} A P.
  DenseMatrix conjugate(const DenseMatrix& a) const;

private:
  std::int64_t blocks_;
  std::int64_t block_size_;
};

/// Builds I_m (x) circ(row), conjugates it by the interleave permutation of
/// m blocks of size n and returns the first row of the resulting circulant.
/// Throws std::logic_error if the conjugate is not circulant.
CirculantRow conjugate_to_circulant(const CirculantRow& row, std::int64_t blocks);

} // namespace cwm

#endif // CWM_CONSTRUCTIONS_HPP
