#ifndef NORDEN_BILINEAR_HPP
#define NORDEN_BILINEAR_HPP

#include <cstddef>
#include <vector>

#include "norden/linalg.hpp"
#include "norden/subspace.hpp"

namespace norden {

/// Symmetric bilinear form, possibly degenerate, held by its Gram matrix in
/// the ambient basis.
class BilinearForm {
 public:
  explicit BilinearForm(Mat gram) : gram_(std::move(gram)) {
    if (gram_.rows() != gram_.cols()) throw input_error("Gram matrix must be square");
    if (!gram_.is_symmetric()) throw metric_error("Gram matrix must be symmetric");
  }

  std::size_t dim() const { return gram_.rows(); }
  const Mat& gram() const { return gram_; }

  Scalar eval(const Vec& x, const Vec& y) const {
    if (x.size() != dim() || y.size() != dim()) throw input_error("form argument dimension mismatch");
    return dot(x, gram_ * y);
  }

  friend bool operator==(const BilinearForm& a, const BilinearForm& b) { return a.gram_ == b.gram_; }

  friend BilinearForm operator-(const BilinearForm& b) { return BilinearForm(-b.gram_); }

 private:
  Mat gram_;
};

/// Gram matrix of B on the canonical basis of W.
inline BilinearForm restrict_form(const BilinearForm& b, const Subspace& w) {
  if (w.ambient_dim() != b.dim()) throw input_error("subspace/form dimension mismatch");
  std::size_t k = w.dim();
  Mat gram(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) {
      gram(i, j) = b.eval(w.basis()[i], w.basis()[j]);
      gram(j, i) = gram(i, j);
    }
  return BilinearForm(gram);
}

/// {v : B(v, w) = 0 for all w in W}, taken in the ambient space.
inline Subspace orthogonal_complement(const BilinearForm& b, const Subspace& w) {
  if (w.ambient_dim() != b.dim()) throw input_error("subspace/form dimension mismatch");
  if (w.dim() == 0) return Subspace::full(b.dim());
  Mat sys(w.dim(), b.dim());
  for (std::size_t i = 0; i < w.dim(); ++i) {
    Vec gw = b.gram() * w.basis()[i];
    for (std::size_t j = 0; j < b.dim(); ++j) sys(i, j) = gw[j];
  }
  return Subspace::span(b.dim(), nullspace(sys));
}

/// Rad(W) = {xi in W : B(xi, x) = 0 for all x in W}: the kernel of the
/// restricted Gram, lifted back to ambient coordinates.
inline Subspace radical(const BilinearForm& b, const Subspace& w) {
  if (w.ambient_dim() != b.dim()) throw input_error("subspace/form dimension mismatch");
  if (w.dim() == 0) return Subspace::zero(b.dim());
  BilinearForm on_w = restrict_form(b, w);
  std::vector<Vec> gens;
  for (const auto& k : nullspace(on_w.gram())) {
    Vec v(b.dim());
    for (std::size_t j = 0; j < w.dim(); ++j)
      if (k[j] != 0) v += k[j] * w.basis()[j];
    gens.push_back(v);
  }
  return Subspace::span(b.dim(), gens);
}

inline bool is_degenerate_on(const BilinearForm& b, const Subspace& w) {
  return radical(b, w).dim() > 0;
}

struct Signature {
  std::size_t positive = 0, negative = 0, zero = 0;
  friend bool operator==(const Signature& a, const Signature& b) {
    return a.positive == b.positive && a.negative == b.negative && a.zero == b.zero;
  }
};

/// Sylvester signature by symmetric congruence diagonalization: simultaneous
/// row/column elimination over the rationals, with a swap or a symmetric
/// row/column addition when a zero pivot blocks progress.
inline Signature signature(const Mat& gram) {
  if (!gram.is_symmetric()) throw metric_error("signature of a non-symmetric matrix");
  Mat a = gram;
  std::size_t n = a.rows();
  auto swap_rc = [&](std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < n; ++k) std::swap(a(i, k), a(j, k));
    for (std::size_t k = 0; k < n; ++k) std::swap(a(k, i), a(k, j));
  };
  auto add_rc = [&](std::size_t dst, std::size_t src, const Scalar& f) {
    for (std::size_t k = 0; k < n; ++k) a(dst, k) += f * a(src, k);
    for (std::size_t k = 0; k < n; ++k) a(k, dst) += f * a(k, src);
  };
  for (std::size_t k = 0; k < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t d = k;
      while (d < n && a(d, d) == 0) ++d;
      if (d < n) {
        swap_rc(k, d);
      } else {
        std::size_t j = k + 1;
        while (j < n && a(k, j) == 0) ++j;
        if (j == n) continue;  // row k is zero beyond the diagonal block
        add_rc(k, j, Scalar(1));
      }
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      add_rc(i, k, -a(i, k) / a(k, k));
    }
  }
  Signature s;
  for (std::size_t k = 0; k < n; ++k) {
    int sg = sign(a(k, k));
    if (sg > 0)
      ++s.positive;
    else if (sg < 0)
      ++s.negative;
    else
      ++s.zero;
  }
  return s;
}

inline Signature signature(const BilinearForm& b) { return signature(b.gram()); }

}  // namespace norden

#endif
