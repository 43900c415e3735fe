#ifndef NORDEN_SUBMANIFOLD_HPP
#define NORDEN_SUBMANIFOLD_HPP

#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "norden/classify.hpp"
#include "norden/lie_ambient.hpp"
#include "norden/subspace.hpp"

namespace norden {

/// The geometric situation of a totally real tangent space W (non-degenerate
/// for g, 1 < dim W < half the ambient dimension) whose partner is isotropic:
/// the ambient splits g-orthogonally as W + JW + (JW)^perp, the last summand
/// J-invariant. W must be closed under the bracket so the induced objects are
/// the left-invariant geometry of an actual subgroup.
class TotallyRealSetting {
 public:
  TotallyRealSetting(const LieAlgebraAmbient& ambient, const Subspace& w)
      : ambient_(&ambient), w_(w) {
    const NordenPair& pair = ambient.pair();
    std::size_t n = pair.dim();
    if (w.ambient_dim() != n) throw input_error("subspace/ambient dimension mismatch");
    ComplexClassification cls = classify_complex_type(pair, w, MetricKind::g);
    if (cls.kind != ComplexKind::totally_real)
      throw precondition_error("setting needs a totally real subspace with 1 < dim < half dimension");
    for (const auto& a : w.basis())
      for (const auto& b : w.basis())
        if (!w.contains(ambient.bracket(a, b)))
          throw precondition_error("tangent space is not closed under the bracket");

    const Mat& j = pair.j().matrix();
    jtm_ = image(j, w);
    jtm_perp_ = orthogonal_complement(pair.g(), sum(w, jtm_));
    if (image(j, jtm_perp_) != jtm_perp_)
      throw theorem_violation("complement of W + JW is not J-invariant");

    wb_ = w_.basis();
    for (const auto& v : wb_) nb_.push_back(j * v);
    pb_ = jtm_perp_.basis();
    std::vector<Vec> cols = wb_;
    cols.insert(cols.end(), nb_.begin(), nb_.end());
    cols.insert(cols.end(), pb_.begin(), pb_.end());
    if (cols.size() != n) throw internal_error("setting decomposition has wrong dimension");
    Mat s = Mat::from_columns(cols);
    sinv_ = inverse(s);
    Mat dw(n, n), dj(n, n), dp(n, n);
    std::size_t m = wb_.size();
    for (std::size_t i = 0; i < m; ++i) dw(i, i) = 1;
    for (std::size_t i = m; i < 2 * m; ++i) dj(i, i) = 1;
    for (std::size_t i = 2 * m; i < n; ++i) dp(i, i) = 1;
    proj_w_ = s * dw * sinv_;
    proj_jtm_ = s * dj * sinv_;
    proj_perp_ = s * dp * sinv_;

    // pairwise g-orthogonality of the three summands
    const BilinearForm& g = pair.g();
    for (const auto& a : wb_)
      for (const auto& c : pb_)
        if (g.eval(a, c) != 0) throw internal_error("W not orthogonal to the screen transversal part");
    for (const auto& a : nb_)
      for (const auto& c : pb_)
        if (g.eval(a, c) != 0) throw internal_error("JW not orthogonal to the screen transversal part");
  }

  const LieAlgebraAmbient& ambient() const { return *ambient_; }
  const NordenPair& pair() const { return ambient_->pair(); }
  std::size_t dim() const { return ambient_->dim(); }
  std::size_t m() const { return wb_.size(); }
  std::size_t perp_dim() const { return pb_.size(); }

  const Subspace& tangent() const { return w_; }
  const Subspace& jtm() const { return jtm_; }
  const Subspace& jtm_perp() const { return jtm_perp_; }

  const std::vector<Vec>& tangent_basis() const { return wb_; }
  const std::vector<Vec>& jtm_basis() const { return nb_; }  // n_i = J w_i
  const std::vector<Vec>& perp_basis() const { return pb_; }

  const Mat& proj_tangent() const { return proj_w_; }
  const Mat& proj_jtm() const { return proj_jtm_; }
  const Mat& proj_perp() const { return proj_perp_; }

  struct Parts {
    Vec tangent, jtm, perp;
  };
  Parts decompose(const Vec& v) const {
    return {proj_w_ * v, proj_jtm_ * v, proj_perp_ * v};
  }

  enum class Bundle { tangent, jtm, perp };

  /// Coordinates of v in the chosen bundle basis; v must lie in that bundle.
  std::vector<Scalar> coords(const Vec& v, Bundle b) const {
    Vec all = sinv_ * v;
    std::size_t off = 0, len = m();
    if (b == Bundle::jtm) off = m();
    if (b == Bundle::perp) {
      off = 2 * m();
      len = perp_dim();
    }
    std::vector<Scalar> out(len);
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (i >= off && i < off + len)
        out[i - off] = all[i];
      else if (all[i] != 0)
        throw internal_error("vector not contained in the requested bundle");
    }
    return out;
  }

 private:
  const LieAlgebraAmbient* ambient_;
  Subspace w_;
  Subspace jtm_ = Subspace::zero(0);
  Subspace jtm_perp_ = Subspace::zero(0);
  std::vector<Vec> wb_, nb_, pb_;
  Mat sinv_, proj_w_, proj_jtm_, proj_perp_;
};

using Table = std::vector<std::vector<Vec>>;

/// Every induced object of both calculi, tabulated on the setting bases.
/// Index conventions: a, b over the tangent basis; i over the J-tangent
/// frame n_i = J w_i; al over the screen-transversal basis.
struct GaussWeingartenData {
  Table nabla;   // [a][b] tangential part of ambient nabla
  Table h1;      // [a][b] J-tangent part (second fundamental form, ltr part)
  Table h2;      // [a][b] screen-transversal part
  Table a_n;     // [i][a] shape operator of n_i
  Table nabla1;  // [a][i] induced connection on JW
  Table d2;      // [a][i] cross form into (JW)^perp
  Table a_w;     // [al][a] shape operator of the screen-transversal frame
  Table d1;      // [a][al] cross form into JW
  Table nabla2;  // [a][al] induced connection on (JW)^perp
  // The same projections applied to the other ambient connection: the
  // isotropic-side family.
  Table nabla_t, h_l, h_s;
  Table a_n_t, nabla_l, d_s;
  Table a_w_t, d_l, nabla_s;
};

inline GaussWeingartenData gauss_weingarten(const TotallyRealSetting& st) {
  const LieAlgebraAmbient& amb = st.ambient();
  std::size_t m = st.m(), p = st.perp_dim();
  GaussWeingartenData d;
  auto fill = [&](MetricKind k, Table& nab, Table& hj, Table& hp, Table& an, Table& n1, Table& dd2,
                  Table& aw, Table& dd1, Table& n2) {
    nab.assign(m, std::vector<Vec>(m));
    hj.assign(m, std::vector<Vec>(m));
    hp.assign(m, std::vector<Vec>(m));
    an.assign(m, std::vector<Vec>(m));
    n1.assign(m, std::vector<Vec>(m));
    dd2.assign(m, std::vector<Vec>(m));
    aw.assign(p, std::vector<Vec>(m));
    dd1.assign(m, std::vector<Vec>(p));
    n2.assign(m, std::vector<Vec>(p));
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = 0; b < m; ++b) {
        auto parts = st.decompose(amb.nabla(k, st.tangent_basis()[a], st.tangent_basis()[b]));
        nab[a][b] = parts.tangent;
        hj[a][b] = parts.jtm;
        hp[a][b] = parts.perp;
      }
      for (std::size_t i = 0; i < m; ++i) {
        auto parts = st.decompose(amb.nabla(k, st.tangent_basis()[a], st.jtm_basis()[i]));
        an[i][a] = -parts.tangent;
        n1[a][i] = parts.jtm;
        dd2[a][i] = parts.perp;
      }
      for (std::size_t al = 0; al < p; ++al) {
        auto parts = st.decompose(amb.nabla(k, st.tangent_basis()[a], st.perp_basis()[al]));
        aw[al][a] = -parts.tangent;
        dd1[a][al] = parts.jtm;
        n2[a][al] = parts.perp;
      }
    }
  };
  fill(MetricKind::g, d.nabla, d.h1, d.h2, d.a_n, d.nabla1, d.d2, d.a_w, d.d1, d.nabla2);
  fill(MetricKind::g_assoc, d.nabla_t, d.h_l, d.h_s, d.a_n_t, d.nabla_l, d.d_s, d.a_w_t, d.d_l,
       d.nabla_s);
  return d;
}

struct Check {
  std::string name;
  bool passed = true;
  std::string detail;  // first offending tuple, empty when passed
};

using Ledger = std::vector<Check>;

inline bool all_passed(const Ledger& ledger) {
  for (const auto& c : ledger)
    if (!c.passed) return false;
  return true;
}

namespace detail {

/// Bilinear/linear extension helpers around the tabulated data.
class Calculus {
 public:
  Calculus(const TotallyRealSetting& st, const GaussWeingartenData& d, bool tilde)
      : st_(st), d_(d), tilde_(tilde) {}

  const TotallyRealSetting& setting() const { return st_; }
  bool tilde() const { return tilde_; }

  /// The metric the family measures against: g for the totally real side,
  /// the associated metric for the isotropic side.
  const BilinearForm& metric() const {
    return tilde_ ? st_.pair().g_assoc() : st_.pair().g();
  }

  Vec nabla(const Vec& x, const Vec& y) const { return ext2(tbl(&GaussWeingartenData::nabla, &GaussWeingartenData::nabla_t), x, TotallyRealSetting::Bundle::tangent, y, TotallyRealSetting::Bundle::tangent); }
  Vec h1(const Vec& x, const Vec& y) const { return ext2(tbl(&GaussWeingartenData::h1, &GaussWeingartenData::h_l), x, TotallyRealSetting::Bundle::tangent, y, TotallyRealSetting::Bundle::tangent); }
  Vec h2(const Vec& x, const Vec& y) const { return ext2(tbl(&GaussWeingartenData::h2, &GaussWeingartenData::h_s), x, TotallyRealSetting::Bundle::tangent, y, TotallyRealSetting::Bundle::tangent); }
  Vec nabla1(const Vec& x, const Vec& n) const { return ext2(tbl(&GaussWeingartenData::nabla1, &GaussWeingartenData::nabla_l), x, TotallyRealSetting::Bundle::tangent, n, TotallyRealSetting::Bundle::jtm); }
  Vec d2(const Vec& x, const Vec& n) const { return ext2(tbl(&GaussWeingartenData::d2, &GaussWeingartenData::d_s), x, TotallyRealSetting::Bundle::tangent, n, TotallyRealSetting::Bundle::jtm); }
  Vec d1(const Vec& x, const Vec& w) const { return ext2(tbl(&GaussWeingartenData::d1, &GaussWeingartenData::d_l), x, TotallyRealSetting::Bundle::tangent, w, TotallyRealSetting::Bundle::perp); }
  Vec nabla2(const Vec& x, const Vec& w) const { return ext2(tbl(&GaussWeingartenData::nabla2, &GaussWeingartenData::nabla_s), x, TotallyRealSetting::Bundle::tangent, w, TotallyRealSetting::Bundle::perp); }

  /// Shape operator A(V, X) for V anywhere in the transversal bundle.
  Vec shape(const Vec& v, const Vec& x) const {
    Vec all = Vec(st_.dim());
    auto vj = st_.decompose(v);
    if (!vj.tangent.is_zero()) throw internal_error("shape operator argument not transversal");
    const Table& an = tilde_ ? d_.a_n_t : d_.a_n;
    const Table& aw = tilde_ ? d_.a_w_t : d_.a_w;
    auto cj = st_.coords(vj.jtm, TotallyRealSetting::Bundle::jtm);
    auto cp = st_.coords(vj.perp, TotallyRealSetting::Bundle::perp);
    auto cx = st_.coords(x, TotallyRealSetting::Bundle::tangent);
    for (std::size_t i = 0; i < cj.size(); ++i) {
      if (cj[i] == 0) continue;
      for (std::size_t a = 0; a < cx.size(); ++a)
        if (cx[a] != 0) all += cj[i] * cx[a] * an[i][a];
    }
    for (std::size_t al = 0; al < cp.size(); ++al) {
      if (cp[al] == 0) continue;
      for (std::size_t a = 0; a < cx.size(); ++a)
        if (cx[a] != 0) all += cp[al] * cx[a] * aw[al][a];
    }
    return all;
  }

  /// Transversal connection: the non-tangential part of the ambient
  /// derivative of a transversal section.
  Vec transversal_conn(const Vec& x, const Vec& v) const {
    Vec full = st_.ambient().nabla(tilde_ ? MetricKind::g_assoc : MetricKind::g, x, v);
    auto parts = st_.decompose(full);
    return parts.jtm + parts.perp;
  }

  /// Screen-transversal component of the transversal connection.
  Vec transversal_conn_perp(const Vec& x, const Vec& v) const {
    Vec full = st_.ambient().nabla(tilde_ ? MetricKind::g_assoc : MetricKind::g, x, v);
    return st_.decompose(full).perp;
  }

  /// (nabla_X h2)(Y, Z) with the screen-transversal connection on the value.
  Vec cov_h2(const Vec& x, const Vec& y, const Vec& z) const {
    return nabla2(x, h2(y, z)) - h2(nabla(x, y), z) - h2(y, nabla(x, z));
  }

  /// (nabla_X A)(V, Y) for V in the screen-transversal bundle.
  Vec cov_shape(const Vec& x, const Vec& v, const Vec& y) const {
    return nabla(x, shape(v, y)) - shape(nabla2(x, v), y) - shape(v, nabla(x, y));
  }

  /// Curvature of a connection given as an application function; x, y must be
  /// tangent and their bracket tangent as well.
  Vec curv(const std::function<Vec(const Vec&, const Vec&)>& conn, const Vec& x, const Vec& y,
           const Vec& s) const {
    Vec br = st_.ambient().bracket(x, y);
    return conn(x, conn(y, s)) - conn(y, conn(x, s)) - conn(br, s);
  }

  std::function<Vec(const Vec&, const Vec&)> conn_tangent() const {
    return [this](const Vec& x, const Vec& s) { return nabla(x, s); };
  }
  std::function<Vec(const Vec&, const Vec&)> conn_jtm() const {
    return [this](const Vec& x, const Vec& s) { return nabla1(x, s); };
  }
  std::function<Vec(const Vec&, const Vec&)> conn_perp() const {
    return [this](const Vec& x, const Vec& s) { return nabla2(x, s); };
  }
  std::function<Vec(const Vec&, const Vec&)> conn_transversal() const {
    return [this](const Vec& x, const Vec& s) { return transversal_conn(x, s); };
  }

 private:
  using Member = Table GaussWeingartenData::*;
  const Table& tbl(Member plain, Member tl) const { return tilde_ ? d_.*tl : d_.*plain; }

  Vec ext2(const Table& t, const Vec& x, TotallyRealSetting::Bundle bx, const Vec& y,
           TotallyRealSetting::Bundle by) const {
    auto cx = st_.coords(x, bx);
    auto cy = st_.coords(y, by);
    Vec out(st_.dim());
    for (std::size_t i = 0; i < cx.size(); ++i) {
      if (cx[i] == 0) continue;
      for (std::size_t j = 0; j < cy.size(); ++j)
        if (cy[j] != 0) out += cx[i] * cy[j] * t[i][j];
    }
    return out;
  }

  const TotallyRealSetting& st_;
  const GaussWeingartenData& d_;
  bool tilde_;
};

inline void record(Ledger& ledger, const std::string& name, bool ok, const std::string& detail = "") {
  ledger.push_back({name, ok, ok ? "" : detail});
}

/// Runs `body` over all index tuples and records a single ledger line.
template <typename Body>
void check_all(Ledger& ledger, const std::string& name, Body body) {
  std::string detail;
  bool ok = body(detail);
  record(ledger, name, ok, detail);
}

}  // namespace detail

}  // namespace norden

#include "norden/submanifold_suites.hpp"

#endif
