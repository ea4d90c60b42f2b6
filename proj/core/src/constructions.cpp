#include "cwm/constructions.hpp"

#include <stdexcept>

namespace cwm {

DenseMatrix::DenseMatrix(std::int64_t order) : order_(order) {
  if (order < 1) throw std::invalid_argument("DenseMatrix: order must be >= 1");
  entries_.assign(static_cast<std::size_t>(order * order), 0);
}

DenseMatrix DenseMatrix::identity(std::int64_t order) {
  DenseMatrix m(order);
  for (std::int64_t i = 0; i < order; ++i) m.set(i, i, 1);
  return m;
}

DenseMatrix DenseMatrix::circulant(const CirculantRow& row) {
  const auto n = row.order();
  DenseMatrix m(n);
  for (std::int64_t r = 0; r < n; ++r)
    for (std::int64_t c = 0; c < n; ++c) m.set(r, c, row[mod(c - r, n)]);
  return m;
}

void DenseMatrix::set(std::int64_t i, std::int64_t j, std::int8_t value) {
  if (value < -1 || value > 1) throw std::invalid_argument("DenseMatrix: entries must be in {-1, 0, 1}");
  entries_[index(i, j)] = value;
}

std::optional<std::int64_t> DenseMatrix::weighing_weight() const {
  std::optional<std::int64_t> weight;
  for (std::int64_t i = 0; i < order_; ++i) {
    for (std::int64_t j = i; j < order_; ++j) {
      std::int64_t dot = 0;
      for (std::int64_t c = 0; c < order_; ++c) dot += (*this)(i, c) * (*this)(j, c);
      if (i == j) {
        if (weight && *weight != dot) return std::nullopt;
        weight = dot;
      } else if (dot != 0) {
        return std::nullopt;
      }
    }
  }
  return weight;
}

bool DenseMatrix::is_circulant() const {
  for (std::int64_t i = 0; i < order_; ++i)
    for (std::int64_t j = 0; j < order_; ++j)
      if ((*this)(i, j) != (*this)((i + 1) % order_, (j + 1) % order_)) return false;
  return true;
}

CirculantRow DenseMatrix::first_row() const {
  return CirculantRow(std::vector<std::int8_t>(entries_.begin(), entries_.begin() + order_));
}

DenseMatrix kronecker(const DenseMatrix& a, const DenseMatrix& b) {
  const auto na = a.order(), nb = b.order();
  DenseMatrix out(na * nb);
  for (std::int64_t i = 0; i < na; ++i)
    for (std::int64_t j = 0; j < na; ++j) {
      if (a(i, j) == 0) continue;
      for (std::int64_t p = 0; p < nb; ++p)
        for (std::int64_t q = 0; q < nb; ++q)
          out.set(i * nb + p, j * nb + q, static_cast<std::int8_t>(a(i, j) * b(p, q)));
    }
  return out;
}

InterleavePermutation::InterleavePermutation(std::int64_t blocks, std::int64_t block_size)
    : blocks_(blocks), block_size_(block_size) {
  if (blocks < 1 || block_size < 1)
    throw std::invalid_argument("InterleavePermutation: block count and size must be >= 1");
}

std::int64_t InterleavePermutation::operator()(std::int64_t i) const {
  if (i < 0 || i >= size()) throw std::out_of_range("InterleavePermutation: index out of range");
  const auto r = i / block_size_;
  const auto s = i % block_size_;
  return s * blocks_ + r;
}

DenseMatrix InterleavePermutation::conjugate(const DenseMatrix& a) const {
  if (a.order() != size()) throw std::invalid_argument("InterleavePermutation::conjugate: order mismatch");
  DenseMatrix out(size());
  for (std::int64_t i = 0; i < size(); ++i)
    for (std::int64_t j = 0; j < size(); ++j) out.set((*this)(i), (*this)(j), a(i, j));
  return out;
}

CirculantRow conjugate_to_circulant(const CirculantRow& row, std::int64_t blocks) {
  if (blocks < 1) throw std::invalid_argument("conjugate_to_circulant: block count must be >= 1");
  const DenseMatrix block_diagonal = kronecker(DenseMatrix::identity(blocks), DenseMatrix::circulant(row));
  const DenseMatrix conjugated = InterleavePermutation(blocks, row.order()).conjugate(block_diagonal);
  if (!conjugated.is_circulant())
    throw std::logic_error("conjugate_to_circulant: conjugated block diagonal is not circulant");
  return conjugated.first_row();
}

} // namespace cwm
