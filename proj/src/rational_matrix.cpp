#include "sqdm/rational_matrix.hpp"

#include "sqdm/error.hpp"

namespace sqdm {

namespace {

void require_same_order(std::size_t a, std::size_t b) {
  if (a != b) throw Error(ErrorCode::DimensionMismatch, "matrix orders differ");
}

}  // namespace

RationalMatrix RationalMatrix::identity(std::size_t order) {
  RationalMatrix m(order, true);
  for (std::size_t i = 0; i < order; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  RationalMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    require_same_order(rows[i].size(), rows.size());
    for (std::size_t j = 0; j < rows.size(); ++j) {
      m(i, j) = rows[i][j];
      m(i, j).canonicalize();
    }
  }
  m.symmetric_ = m.is_symmetric();
  return m;
}

bool RationalMatrix::is_symmetric() const {
  for (std::size_t i = 0; i < order_; ++i) {
    for (std::size_t j = i + 1; j < order_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) return false;
    }
  }
  return true;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix out(order_, symmetric_);
  for (std::size_t i = 0; i < order_; ++i) {
    for (std::size_t j = 0; j < order_; ++j) out(j, i) = (*this)(i, j);
  }
  return out;
}

RationalMatrix RationalMatrix::minor(std::size_t row, std::size_t col) const {
  RationalMatrix out(order_ - 1, symmetric_ && row == col);
  for (std::size_t i = 0, oi = 0; i < order_; ++i) {
    if (i == row) continue;
    for (std::size_t j = 0, oj = 0; j < order_; ++j) {
      if (j == col) continue;
      out(oi, oj++) = (*this)(i, j);
    }
    ++oi;
  }
  return out;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& rhs) const {
  require_same_order(order_, rhs.order_);
  RationalMatrix out(order_, symmetric_ && rhs.symmetric_);
  for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] = entries_[k] + rhs.entries_[k];
  return out;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix& rhs) const {
  require_same_order(order_, rhs.order_);
  RationalMatrix out(order_, symmetric_ && rhs.symmetric_);
  for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] = entries_[k] - rhs.entries_[k];
  return out;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& rhs) const {
  require_same_order(order_, rhs.order_);
  RationalMatrix out(order_);
  Rational acc;
  for (std::size_t i = 0; i < order_; ++i) {
    for (std::size_t j = 0; j < order_; ++j) {
      acc = 0;
      for (std::size_t k = 0; k < order_; ++k) {
        const Rational& a = (*this)(i, k);
        if (sgn(a) != 0) acc += a * rhs(k, j);
      }
      out(i, j) = acc;
    }
  }
  return out;
}

RationalMatrix RationalMatrix::operator*(const Rational& scalar) const {
  RationalMatrix out(order_, symmetric_);
  for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] = entries_[k] * scalar;
  return out;
}

RationalMatrix RationalMatrix::operator-() const {
  RationalMatrix out(order_, symmetric_);
  for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] = -entries_[k];
  return out;
}

std::vector<Rational> RationalMatrix::operator*(std::span<const Rational> v) const {
  require_same_order(order_, v.size());
  std::vector<Rational> out(order_);
  for (std::size_t i = 0; i < order_; ++i) {
    Rational acc = 0;
    for (std::size_t k = 0; k < order_; ++k) acc += (*this)(i, k) * v[k];
    out[i] = acc;
  }
  return out;
}

RationalMatrix RationalMatrix::shifted(const Rational& mu) const {
  RationalMatrix out(*this);
  for (std::size_t i = 0; i < order_; ++i) out(i, i) -= mu;
  return out;
}

bool RationalMatrix::operator==(const RationalMatrix& rhs) const {
  return order_ == rhs.order_ && entries_ == rhs.entries_;
}

RationalMatrix outer(std::span<const Rational> u, std::span<const Rational> v) {
  require_same_order(u.size(), v.size());
  RationalMatrix out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    for (std::size_t j = 0; j < v.size(); ++j) out(i, j) = u[i] * v[j];
  }
  out.set_symmetric(out.is_symmetric());
  return out;
}

}  // namespace sqdm
