// Dense matrices over F_q and Gaussian elimination.
#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "kgunits/field_spec.hpp"

namespace kgunits {

class Matrix {
 public:
  Matrix(Field field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)),
        rows_(rows),
        cols_(cols),
        data_(rows * cols, 0) {}

  static Matrix identity(Field field, std::size_t n) {
    Matrix m(std::move(field), n, n);
    for (std::size_t i = 0; i < n; ++i) {
      m(i, i) = 1;
    }
    return m;
  }

  Field const& field() const noexcept {
    return field_;
  }
  std::size_t rows() const noexcept {
    return rows_;
  }
  std::size_t cols() const noexcept {
    return cols_;
  }
  Code& operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }
  Code operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::vector<Code> column(std::size_t j) const {
    std::vector<Code> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      c[i] = (*this)(i, j);
    }
    return c;
  }

  std::vector<Code> apply(std::span<Code const> v) const {
    if (v.size() != cols_) {
      throw std::invalid_argument("matrix-vector size mismatch");
    }
    auto const&       f = *field_;
    std::vector<Code> out(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i) {
      Code acc = 0;
      for (std::size_t j = 0; j < cols_; ++j) {
        acc = f.add(acc, f.mul((*this)(i, j), v[j]));
      }
      out[i] = acc;
    }
    return out;
  }

  friend Matrix operator*(Matrix const& a, Matrix const& b) {
    if (a.cols_ != b.rows_ || !a.field_->same_as(*b.field_)) {
      throw std::invalid_argument("incompatible matrix product");
    }
    auto const& f = *a.field_;
    Matrix      c(a.field_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        Code const x = a(i, k);
        if (x == 0) {
          continue;
        }
        for (std::size_t j = 0; j < b.cols_; ++j) {
          c(i, j) = f.add(c(i, j), f.mul(x, b(k, j)));
        }
      }
    }
    return c;
  }

  friend bool operator==(Matrix const& a, Matrix const& b) {
    return a.field_->same_as(*b.field_) && a.rows_ == b.rows_
           && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  Field             field_;
  std::size_t       rows_;
  std::size_t       cols_;
  std::vector<Code> data_;
};

namespace detail {

  // Reduces m in place to reduced row echelon form; returns pivot columns.
  inline std::vector<std::size_t> row_reduce(Matrix& m) {
    auto const&              f = *m.field();
    std::vector<std::size_t> pivots;
    std::size_t              r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
      std::size_t piv = r;
      while (piv < m.rows() && m(piv, c) == 0) {
        ++piv;
      }
      if (piv == m.rows()) {
        continue;
      }
      if (piv != r) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
          std::swap(m(piv, j), m(r, j));
        }
      }
      Code const inv = f.inv(m(r, c));
      for (std::size_t j = 0; j < m.cols(); ++j) {
        m(r, j) = f.mul(m(r, j), inv);
      }
      for (std::size_t i = 0; i < m.rows(); ++i) {
        if (i == r || m(i, c) == 0) {
          continue;
        }
        Code const factor = m(i, c);
        for (std::size_t j = 0; j < m.cols(); ++j) {
          m(i, j) = f.sub(m(i, j), f.mul(factor, m(r, j)));
        }
      }
      pivots.push_back(c);
      ++r;
    }
    return pivots;
  }

}  // namespace detail

inline std::size_t rank(Matrix m) {
  return detail::row_reduce(m).size();
}

// Some x with A x = b, or nullopt if the system is inconsistent.
inline std::optional<std::vector<Code>> solve(Matrix const&         a,
                                              std::span<Code const> b) {
  if (b.size() != a.rows()) {
    throw std::invalid_argument("solve: right-hand side size mismatch");
  }
  Matrix aug(a.field(), a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      aug(i, j) = a(i, j);
    }
    aug(i, a.cols()) = b[i];
  }
  auto const pivots = detail::row_reduce(aug);
  if (!pivots.empty() && pivots.back() == a.cols()) {
    return std::nullopt;
  }
  std::vector<Code> x(a.cols(), 0);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    x[pivots[r]] = aug(r, a.cols());
  }
  return x;
}

inline std::optional<Matrix> inverse(Matrix const& a) {
  if (a.rows() != a.cols()) {
    throw std::invalid_argument("inverse of a non-square matrix");
  }
  std::size_t const n = a.rows();
  Matrix            aug(a.field(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      aug(i, j) = a(i, j);
    }
    aug(i, n + i) = 1;
  }
  auto const pivots = detail::row_reduce(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) {
    return std::nullopt;
  }
  Matrix inv(a.field(), n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      inv(i, j) = aug(i, n + j);
    }
  }
  return inv;
}

}  // namespace kgunits
