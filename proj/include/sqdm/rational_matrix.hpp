#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "sqdm/rational.hpp"

namespace sqdm {

/// Dense square matrix over the rationals, stored row major.
///
/// `symmetric()` is a tag set by builders that produce symmetric matrices by
/// construction; `is_symmetric()` checks the entries.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  explicit RationalMatrix(std::size_t order, bool symmetric = false)
      : order_(order), entries_(order * order), symmetric_(symmetric) {}

  static RationalMatrix identity(std::size_t order);
  static RationalMatrix zero(std::size_t order) { return RationalMatrix(order, true); }
  /// Row-major integer literal; rows must all have the same length as the row count.
  static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

  std::size_t order() const noexcept { return order_; }
  bool symmetric() const noexcept { return symmetric_; }
  void set_symmetric(bool tag) noexcept { symmetric_ = tag; }
  bool is_symmetric() const;

  Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * order_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * order_ + j]; }

  std::span<const Rational> row(std::size_t i) const { return {entries_.data() + i * order_, order_}; }

  RationalMatrix transpose() const;
  /// Matrix with row i and column j removed.
  RationalMatrix minor(std::size_t i, std::size_t j) const;

  RationalMatrix operator+(const RationalMatrix& rhs) const;
  RationalMatrix operator-(const RationalMatrix& rhs) const;
  RationalMatrix operator*(const RationalMatrix& rhs) const;
  RationalMatrix operator*(const Rational& scalar) const;
  RationalMatrix operator-() const;
  std::vector<Rational> operator*(std::span<const Rational> v) const;

  /// M - mu * I
  RationalMatrix shifted(const Rational& mu) const;

  bool operator==(const RationalMatrix& rhs) const;

 private:
  std::size_t order_ = 0;
  std::vector<Rational> entries_;
  bool symmetric_ = false;
};

/// u v^T
RationalMatrix outer(std::span<const Rational> u, std::span<const Rational> v);

}  // namespace sqdm
