#ifndef NORDEN_LINALG_HPP
#define NORDEN_LINALG_HPP

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "norden/errors.hpp"
#include "norden/rational.hpp"

namespace norden {

/// Coordinate vector over exact rationals, expressed in a distinguished basis.
class Vec {
 public:
  Vec() = default;
  explicit Vec(std::size_t n) : c_(n, Scalar(0)) {}
  Vec(std::initializer_list<Scalar> init) : c_(init) {}
  explicit Vec(std::vector<Scalar> coords) : c_(std::move(coords)) {}

  static Vec unit(std::size_t n, std::size_t i) {
    Vec v(n);
    v[i] = 1;
    return v;
  }

  std::size_t size() const { return c_.size(); }
  Scalar& operator[](std::size_t i) { return c_[i]; }
  const Scalar& operator[](std::size_t i) const { return c_[i]; }
  const std::vector<Scalar>& coords() const { return c_; }

  bool is_zero() const {
    for (const auto& x : c_)
      if (x != 0) return false;
    return true;
  }

  friend bool operator==(const Vec& a, const Vec& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Vec& a, const Vec& b) { return !(a == b); }

  Vec& operator+=(const Vec& o) {
    check_same(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  Vec& operator-=(const Vec& o) {
    check_same(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  Vec& operator*=(const Scalar& s) {
    for (auto& x : c_) x *= s;
    return *this;
  }

  friend Vec operator+(Vec a, const Vec& b) { return a += b; }
  friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
  friend Vec operator*(const Scalar& s, Vec v) { return v *= s; }
  friend Vec operator-(Vec v) {
    for (auto& x : v.c_) x = -x;
    return v;
  }

 private:
  void check_same(const Vec& o) const {
    if (c_.size() != o.c_.size()) throw input_error("vector dimension mismatch");
  }
  std::vector<Scalar> c_;
};

/// Dense rational matrix, row major.
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, Scalar(0)) {}

  static Mat identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static Mat from_rows(const std::vector<Vec>& rows) {
    if (rows.empty()) return Mat(0, 0);
    Mat m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_) throw input_error("ragged rows");
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static Mat from_columns(const std::vector<Vec>& cols) {
    if (cols.empty()) return Mat(0, 0);
    Mat m(cols[0].size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != m.rows_) throw input_error("ragged columns");
      for (std::size_t i = 0; i < m.rows_; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  Vec row(std::size_t i) const {
    Vec v(cols_);
    for (std::size_t j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
    return v;
  }
  Vec column(std::size_t j) const {
    Vec v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }

  Mat transposed() const {
    Mat t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }
  friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

  friend Mat operator*(const Mat& a, const Mat& b) {
    if (a.cols_ != b.rows_) throw input_error("matrix product dimension mismatch");
    Mat c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Scalar& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend Vec operator*(const Mat& a, const Vec& x) {
    if (a.cols_ != x.size()) throw input_error("matrix-vector dimension mismatch");
    Vec y(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j)
        if (a(i, j) != 0 && x[j] != 0) y[i] += a(i, j) * x[j];
    return y;
  }

  friend Mat operator+(const Mat& a, const Mat& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw input_error("matrix sum dimension mismatch");
    Mat c = a;
    for (std::size_t i = 0; i < c.a_.size(); ++i) c.a_[i] += b.a_[i];
    return c;
  }

  friend Mat operator-(const Mat& a) {
    Mat c = a;
    for (auto& x : c.a_) x = -x;
    return c;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<Scalar> a_;
};

struct Echelon {
  Mat reduced;              // reduced row echelon form, zero rows dropped
  std::vector<std::size_t> pivots;  // pivot column per kept row
  std::size_t rank = 0;
};

/// Reduced row echelon form with leading entries scaled to 1 and cleared
/// above and below. Deterministic: first usable pivot row is chosen.
inline Echelon rref(const Mat& m) {
  Mat a = m;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(r, j), a(p, j));
    Scalar inv = 1 / a(r, c);
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c) == 0) continue;
      Scalar f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  Echelon e;
  e.rank = r;
  e.pivots = pivots;
  e.reduced = Mat(r, m.cols());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) e.reduced(i, j) = a(i, j);
  return e;
}

inline std::size_t rank(const Mat& m) { return rref(m).rank; }

/// Canonical basis of {x : m x = 0}: one vector per free column, with a 1 in
/// that column, listed in increasing column order.
inline std::vector<Vec> nullspace(const Mat& m) {
  Echelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (is_pivot[c]) continue;
    Vec v(m.cols());
    v[c] = 1;
    for (std::size_t i = 0; i < e.rank; ++i) v[e.pivots[i]] = -e.reduced(i, c);
    basis.push_back(v);
  }
  return basis;
}

/// Inverse via Gauss-Jordan. Throws internal_error on singular input.
inline Mat inverse(const Mat& m) {
  if (m.rows() != m.cols()) throw input_error("inverse of non-square matrix");
  std::size_t n = m.rows();
  Mat a = m;
  Mat inv = Mat::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) throw internal_error("singular matrix");
    if (p != c)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(c, j), a(p, j));
        std::swap(inv(c, j), inv(p, j));
      }
    Scalar f = 1 / a(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) *= f;
      inv(c, j) *= f;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a(i, c) == 0) continue;
      Scalar g = a(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= g * a(c, j);
        inv(i, j) -= g * inv(c, j);
      }
    }
  }
  return inv;
}

/// Unique solution of a x = b for square invertible a.
inline Vec solve(const Mat& a, const Vec& b) { return inverse(a) * b; }

inline Scalar dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw input_error("dot dimension mismatch");
  Scalar s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
  return s;
}

}  // namespace norden

#endif
