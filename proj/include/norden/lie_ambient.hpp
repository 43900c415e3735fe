#ifndef NORDEN_LIE_AMBIENT_HPP
#define NORDEN_LIE_AMBIENT_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "norden/norden_pair.hpp"

namespace norden {

using ConnectionTable = std::vector<std::vector<Vec>>;

struct KaehlerReport {
  bool kaehler = false;            // F vanishes on all basis triples
  bool phi_zero = false;           // consequence certified when kaehler
  bool connections_equal = false;  // both Levi-Civita tables coincide
  bool curvature_commutes_with_j = false;  // R(X,Y,JZ) = J R(X,Y,Z)
  bool curvature_kaehler_tensor = false;   // R(X,Y,JZ,JU) = -R(X,Y,Z,U)
  bool assoc_curvature_shift = false;      // R~(X,Y,Z,U) = R(X,Y,Z,JU)
  bool assoc_curvature_kaehler = false;    // the shifted tensor is Kaehler too
};

/// A Lie algebra with a Norden pair on it, modelling the left-invariant
/// geometry of the group: brackets from structure constants, the two
/// Levi-Civita connections solved from the invariant-metric formula
/// 2 g(nabla_X Y, Z) = g([X,Y],Z) + g([Z,X],Y) + g([Z,Y],X), and the derived
/// tensors. Directional derivatives of invariant scalars vanish, so every
/// identity reduces to a finite exact computation on basis tuples.
class LieAlgebraAmbient {
 public:
  LieAlgebraAmbient(std::vector<std::vector<Vec>> structure, NordenPair pair)
      : dim_(pair.dim()), c_(std::move(structure)), pair_(std::move(pair)) {
    validate_structure();
    nabla_ = solve_connection(pair_.g());
    nabla_tilde_ = solve_connection(pair_.g_assoc());
    verify_connection(nabla_, pair_.g());
    verify_connection(nabla_tilde_, pair_.g_assoc());
  }

  std::size_t dim() const { return dim_; }
  const NordenPair& pair() const { return pair_; }
  const std::vector<std::vector<Vec>>& structure_constants() const { return c_; }
  const ConnectionTable& connection(MetricKind k) const {
    return k == MetricKind::g ? nabla_ : nabla_tilde_;
  }

  Vec bracket(const Vec& x, const Vec& y) const { return bilinear(c_, x, y); }

  /// nabla_X Y for the chosen metric, extended bilinearly from the table.
  Vec nabla(MetricKind k, const Vec& x, const Vec& y) const { return bilinear(connection(k), x, y); }

  /// F(X,Y,Z) = g(nabla_X(JY) - J(nabla_X Y), Z).
  Scalar f3(const Vec& x, const Vec& y, const Vec& z) const {
    const Mat& j = pair_.j().matrix();
    Vec v = nabla(MetricKind::g, x, j * y) - j * nabla(MetricKind::g, x, y);
    return pair_.g().eval(v, z);
  }

  /// Phi(X,Y): the difference of the two Levi-Civita connections.
  Vec phi(const Vec& x, const Vec& y) const {
    return nabla(MetricKind::g_assoc, x, y) - nabla(MetricKind::g, x, y);
  }

  /// Scalar form Phi(X,Y,Z) = g(Phi(X,Y), Z).
  Scalar phi3(const Vec& x, const Vec& y, const Vec& z) const { return pair_.g().eval(phi(x, y), z); }

  /// R(X,Y)Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z - nabla_[X,Y] Z.
  Vec curvature(MetricKind k, const Vec& x, const Vec& y, const Vec& z) const {
    return nabla(k, x, nabla(k, y, z)) - nabla(k, y, nabla(k, x, z)) - nabla(k, bracket(x, y), z);
  }

  /// (0,4) convention: R(X,Y,Z,U) = g(R(X,Y)Z, U) with the metric matching
  /// the connection.
  Scalar curvature04(MetricKind k, const Vec& x, const Vec& y, const Vec& z, const Vec& u) const {
    return pair_.metric(k).eval(curvature(k, x, y, z), u);
  }

  bool f3_vanishes() const {
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) {
        const Mat& jm = pair_.j().matrix();
        Vec v = bilinear(nabla_, Vec::unit(dim_, i), jm * Vec::unit(dim_, j)) -
                jm * nabla_[i][j];
        if (!v.is_zero()) return false;
      }
    return true;
  }

  /// Kaehler test plus the consequences it certifies when it holds.
  KaehlerReport kaehler_check() const {
    KaehlerReport rep;
    rep.kaehler = f3_vanishes();
    if (!rep.kaehler) return rep;
    const Mat& j = pair_.j().matrix();
    rep.phi_zero = true;
    rep.connections_equal = true;
    for (std::size_t a = 0; a < dim_; ++a)
      for (std::size_t b = 0; b < dim_; ++b) {
        if (nabla_[a][b] != nabla_tilde_[a][b]) rep.connections_equal = false;
        if (!phi(Vec::unit(dim_, a), Vec::unit(dim_, b)).is_zero()) rep.phi_zero = false;
      }
    rep.curvature_commutes_with_j = true;
    rep.curvature_kaehler_tensor = true;
    rep.assoc_curvature_shift = true;
    rep.assoc_curvature_kaehler = true;
    const BilinearForm& g = pair_.g();
    const BilinearForm& gt = pair_.g_assoc();
    for (std::size_t a = 0; a < dim_; ++a)
      for (std::size_t b = 0; b < dim_; ++b)
        for (std::size_t c = 0; c < dim_; ++c) {
          Vec ea = Vec::unit(dim_, a), eb = Vec::unit(dim_, b), ec = Vec::unit(dim_, c);
          Vec jz = j * ec;
          Vec r = curvature(MetricKind::g, ea, eb, ec);
          Vec rjz = curvature(MetricKind::g, ea, eb, jz);
          if (rjz != j * r) rep.curvature_commutes_with_j = false;
          Vec rt = curvature(MetricKind::g_assoc, ea, eb, ec);
          Vec rtjz = curvature(MetricKind::g_assoc, ea, eb, jz);
          for (std::size_t d = 0; d < dim_; ++d) {
            Vec ed = Vec::unit(dim_, d);
            if (g.eval(rjz, j * ed) != -g.eval(r, ed)) rep.curvature_kaehler_tensor = false;
            if (gt.eval(rt, ed) != g.eval(r, j * ed)) rep.assoc_curvature_shift = false;
            if (gt.eval(rtjz, j * ed) != -gt.eval(rt, ed)) rep.assoc_curvature_kaehler = false;
          }
        }
    return rep;
  }

 private:
  void validate_structure() {
    if (c_.size() != dim_) throw input_error("structure constant table has wrong size");
    for (const auto& row : c_) {
      if (row.size() != dim_) throw input_error("structure constant table has wrong size");
      for (const auto& v : row)
        if (v.size() != dim_) throw input_error("structure constant vector has wrong size");
    }
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j)
        if (c_[i][j] != -c_[j][i]) throw structure_error("bracket is not antisymmetric");
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = i + 1; j < dim_; ++j)
        for (std::size_t k = j + 1; k < dim_; ++k) {
          Vec ei = Vec::unit(dim_, i), ej = Vec::unit(dim_, j), ek = Vec::unit(dim_, k);
          Vec cyc = bracket(ei, bracket(ej, ek)) + bracket(ej, bracket(ek, ei)) +
                    bracket(ek, bracket(ei, ej));
          if (!cyc.is_zero()) throw structure_error("Jacobi identity fails");
        }
  }

  ConnectionTable solve_connection(const BilinearForm& metric) const {
    Mat ginv = inverse(metric.gram());
    ConnectionTable nab(dim_, std::vector<Vec>(dim_, Vec(dim_)));
    for (std::size_t i = 0; i < dim_; ++i) {
      Vec ei = Vec::unit(dim_, i);
      for (std::size_t j = 0; j < dim_; ++j) {
        Vec ej = Vec::unit(dim_, j);
        Vec cij = c_[i][j];
        Vec rhs(dim_);
        for (std::size_t k = 0; k < dim_; ++k) {
          Vec ek = Vec::unit(dim_, k);
          rhs[k] = metric.eval(cij, ek) + metric.eval(c_[k][i], ej) + metric.eval(c_[k][j], ei);
        }
        Vec sol = ginv * rhs;
        for (auto idx = std::size_t{0}; idx < dim_; ++idx) sol[idx] /= 2;
        nab[i][j] = sol;
      }
    }
    return nab;
  }

  void verify_connection(const ConnectionTable& nab, const BilinearForm& metric) const {
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) {
        if (nab[i][j] - nab[j][i] != c_[i][j]) throw internal_error("connection is not torsion-free");
        for (std::size_t k = 0; k < dim_; ++k) {
          Vec ek = Vec::unit(dim_, k), ej = Vec::unit(dim_, j);
          if (metric.eval(nab[i][j], ek) + metric.eval(ej, nab[i][k]) != 0)
            throw internal_error("connection is not metric");
        }
      }
  }

  Vec bilinear(const std::vector<std::vector<Vec>>& table, const Vec& x, const Vec& y) const {
    if (x.size() != dim_ || y.size() != dim_) throw input_error("vector dimension mismatch");
    Vec out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        if (y[j] == 0) continue;
        Vec term = table[i][j];
        term *= x[i] * y[j];
        out += term;
      }
    }
    return out;
  }

  std::size_t dim_;
  std::vector<std::vector<Vec>> c_;
  NordenPair pair_;
  ConnectionTable nabla_;
  ConnectionTable nabla_tilde_;
};

/// Bundles the Phi table of an ambient with its split along a chosen triple
/// decomposition of the ambient space (projectors supplied by the caller).
struct PhiSplit {
  std::vector<std::vector<Vec>> phi;        // Phi(e_i, e_j)
  std::vector<std::vector<Vec>> tangential; // part in the first summand
  std::vector<std::vector<Vec>> transversal_j;     // part in the second
  std::vector<std::vector<Vec>> transversal_perp;  // part in the third
};

inline PhiSplit phi_split(const LieAlgebraAmbient& amb, const Mat& proj_w, const Mat& proj_jtm,
                          const Mat& proj_perp) {
  std::size_t n = amb.dim();
  PhiSplit out;
  out.phi.assign(n, std::vector<Vec>(n, Vec(n)));
  out.tangential = out.phi;
  out.transversal_j = out.phi;
  out.transversal_perp = out.phi;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec p = amb.phi(Vec::unit(n, i), Vec::unit(n, j));
      out.phi[i][j] = p;
      out.tangential[i][j] = proj_w * p;
      out.transversal_j[i][j] = proj_jtm * p;
      out.transversal_perp[i][j] = proj_perp * p;
    }
  return out;
}

}  // namespace norden

#endif
