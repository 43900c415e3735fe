#ifndef NORDEN_SUBSPACE_HPP
#define NORDEN_SUBSPACE_HPP

#include <cstddef>
#include <vector>

#include "norden/linalg.hpp"

namespace norden {

/// A subspace of a fixed-dimension ambient space, held by its canonical
/// reduced row echelon basis. Two spans of the same subspace compare equal.
class Subspace {
 public:
  static Subspace span(std::size_t ambient_dim, const std::vector<Vec>& generators) {
    for (const auto& g : generators)
      if (g.size() != ambient_dim) throw input_error("generator dimension mismatch");
    Subspace s;
    s.ambient_dim_ = ambient_dim;
    if (!generators.empty()) {
      Echelon e = rref(Mat::from_rows(generators));
      for (std::size_t i = 0; i < e.rank; ++i) s.basis_.push_back(e.reduced.row(i));
    }
    return s;
  }

  static Subspace zero(std::size_t ambient_dim) { return span(ambient_dim, {}); }

  static Subspace full(std::size_t ambient_dim) {
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < ambient_dim; ++i) rows.push_back(Vec::unit(ambient_dim, i));
    return span(ambient_dim, rows);
  }

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vec>& basis() const { return basis_; }

  bool contains(const Vec& v) const {
    if (v.size() != ambient_dim_) throw input_error("vector dimension mismatch");
    if (v.is_zero()) return true;
    std::vector<Vec> rows = basis_;
    rows.push_back(v);
    return rref(Mat::from_rows(rows)).rank == dim();
  }

  bool contains(const Subspace& other) const {
    check_ambient(other);
    for (const auto& v : other.basis_)
      if (!contains(v)) return false;
    return true;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_dim_ == b.ambient_dim_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

  friend Subspace sum(const Subspace& a, const Subspace& b) {
    a.check_ambient(b);
    std::vector<Vec> rows = a.basis_;
    rows.insert(rows.end(), b.basis_.begin(), b.basis_.end());
    return span(a.ambient_dim_, rows);
  }

  /// Intersection: x = sum a_i u_i = sum b_j w_j; solve for the combined
  /// coefficient kernel of [U^T | -W^T] and map back through U.
  friend Subspace intersect(const Subspace& a, const Subspace& b) {
    a.check_ambient(b);
    if (a.dim() == 0 || b.dim() == 0) return zero(a.ambient_dim_);
    std::size_t n = a.ambient_dim_;
    Mat sys(n, a.dim() + b.dim());
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < a.dim(); ++j) sys(i, j) = a.basis_[j][i];
      for (std::size_t j = 0; j < b.dim(); ++j) sys(i, a.dim() + j) = -b.basis_[j][i];
    }
    std::vector<Vec> gens;
    for (const auto& k : nullspace(sys)) {
      Vec v(n);
      for (std::size_t j = 0; j < a.dim(); ++j)
        if (k[j] != 0) v += k[j] * a.basis_[j];
      gens.push_back(v);
    }
    return span(n, gens);
  }

 private:
  void check_ambient(const Subspace& other) const {
    if (ambient_dim_ != other.ambient_dim_) throw input_error("ambient dimension mismatch");
  }
  std::size_t ambient_dim_ = 0;
  std::vector<Vec> basis_;
};

/// Image of a subspace under a linear map given in ambient coordinates.
inline Subspace image(const Mat& op, const Subspace& w) {
  if (op.cols() != w.ambient_dim()) throw input_error("operator dimension mismatch");
  std::vector<Vec> gens;
  for (const auto& v : w.basis()) gens.push_back(op * v);
  return Subspace::span(op.rows(), gens);
}

/// Greedily extends `base` to all of `inside` using candidate vectors, then
/// the canonical basis of `inside`. Returns the chosen complement.
inline Subspace complement_within(const Subspace& base, const Subspace& inside,
                                  const std::vector<Vec>& preferred = {}) {
  if (!inside.contains(base)) throw input_error("base not contained in the target space");
  std::vector<Vec> chosen;
  Subspace cur = base;
  std::vector<Vec> candidates = preferred;
  candidates.insert(candidates.end(), inside.basis().begin(), inside.basis().end());
  for (const auto& v : candidates) {
    if (cur.dim() == inside.dim()) break;
    if (!inside.contains(v)) continue;
    Subspace ext = sum(cur, Subspace::span(inside.ambient_dim(), {v}));
    if (ext.dim() > cur.dim()) {
      chosen.push_back(v);
      cur = ext;
    }
  }
  if (cur.dim() != inside.dim()) throw internal_error("complement extension failed");
  return Subspace::span(inside.ambient_dim(), chosen);
}

}  // namespace norden

#endif
