#ifndef NORDEN_NORDEN_PAIR_HPP
#define NORDEN_NORDEN_PAIR_HPP

#include <cstddef>
#include <utility>

#include "norden/bilinear.hpp"
#include "norden/linalg.hpp"

namespace norden {

/// Almost complex structure: a square matrix J with J o J = -Id.
class ComplexStructure {
 public:
  explicit ComplexStructure(Mat j) : j_(std::move(j)) {
    if (j_.rows() != j_.cols()) throw input_error("complex structure must be square");
    if (j_ * j_ != -Mat::identity(j_.rows()))
      throw structure_error("J^2 != -Id");
  }

  std::size_t dim() const { return j_.rows(); }
  const Mat& matrix() const { return j_; }
  Vec apply(const Vec& x) const { return j_ * x; }

 private:
  Mat j_;
};

/// g~(X,Y) = g(JX,Y). For a Norden pair this is symmetric and itself a
/// Norden metric for the same J; applying the construction twice gives -g.
inline BilinearForm associated_metric(const ComplexStructure& j, const BilinearForm& g) {
  if (j.dim() != g.dim()) throw input_error("structure/metric dimension mismatch");
  Mat gt = j.matrix().transposed() * g.gram();
  if (!gt.is_symmetric()) throw metric_error("associated form is not symmetric");
  return BilinearForm(gt);
}

enum class MetricKind { g, g_assoc };

inline const char* metric_name(MetricKind k) { return k == MetricKind::g ? "g" : "gtilde"; }

/// A validated pair (J, g) with J an anti-isometry of g, plus the associated
/// metric. Both metrics have split signature (n, n).
class NordenPair {
 public:
  static NordenPair validate(ComplexStructure j, BilinearForm g) {
    if (j.dim() != g.dim()) throw input_error("structure/metric dimension mismatch");
    if (g.dim() % 2 != 0) throw input_error("Norden metrics need even dimension");
    const Mat& jm = j.matrix();
    if (jm.transposed() * g.gram() * jm != -g.gram())
      throw metric_error("J is not an anti-isometry of g");
    BilinearForm gt = associated_metric(j, g);
    std::size_t half = g.dim() / 2;
    Signature want{half, half, 0};
    if (!(signature(g) == want)) throw metric_error("g does not have split signature (n,n)");
    if (!(signature(gt) == want)) throw metric_error("associated metric does not have split signature (n,n)");
    return NordenPair(std::move(j), std::move(g), std::move(gt));
  }

  std::size_t dim() const { return j_.dim(); }
  std::size_t half_dim() const { return j_.dim() / 2; }
  const ComplexStructure& j() const { return j_; }
  const BilinearForm& g() const { return g_; }
  const BilinearForm& g_assoc() const { return g_assoc_; }
  const BilinearForm& metric(MetricKind k) const { return k == MetricKind::g ? g_ : g_assoc_; }
  static MetricKind other(MetricKind k) { return k == MetricKind::g ? MetricKind::g_assoc : MetricKind::g; }

 private:
  NordenPair(ComplexStructure j, BilinearForm g, BilinearForm g_assoc)
      : j_(std::move(j)), g_(std::move(g)), g_assoc_(std::move(g_assoc)) {}
  ComplexStructure j_;
  BilinearForm g_;
  BilinearForm g_assoc_;
};

}  // namespace norden

#endif
