#ifndef NORDEN_CLASSIFY_HPP
#define NORDEN_CLASSIFY_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "norden/norden_pair.hpp"
#include "norden/splitting.hpp"
#include "norden/subspace.hpp"

namespace norden {

enum class ComplexKind { holomorphic, totally_real, lagrangian, cr, generic, unclassified };

inline const char* complex_kind_name(ComplexKind k) {
  switch (k) {
    case ComplexKind::holomorphic: return "holomorphic";
    case ComplexKind::totally_real: return "totally real";
    case ComplexKind::lagrangian: return "lagrangian";
    case ComplexKind::cr: return "cr";
    case ComplexKind::generic: return "generic";
    case ComplexKind::unclassified: return "unclassified";
  }
  return "?";
}

struct ComplexClassification {
  ComplexKind kind = ComplexKind::unclassified;
  std::optional<Subspace> d;       // maximal J-invariant part, when it splits W
  std::optional<Subspace> d_perp;  // its orthogonal complement inside W
  std::size_t m = 0;               // dim W
  std::size_t half_dim = 0;        // half the ambient dimension
  std::size_t codim = 0;
  bool proper = false;             // both D and D^perp non-zero
};

/// Classifies a non-degenerate W through its maximal J-invariant part
/// H = W cap J(W). H is the only candidate for the holomorphic distribution:
/// any valid splitting W = D perp D^perp with J(D) = D and J(D^perp) inside
/// W^perp forces D = H.
inline ComplexClassification classify_complex_type(const NordenPair& pair, const Subspace& w,
                                                   MetricKind which) {
  if (w.ambient_dim() != pair.dim()) throw input_error("subspace/ambient dimension mismatch");
  if (w.dim() == 0 || w.dim() == pair.dim())
    throw precondition_error("classification needs 0 < dim W < ambient dimension");
  const BilinearForm& b = pair.metric(which);
  if (radical(b, w).dim() != 0)
    throw precondition_error("subspace is degenerate; use the lightlike classification");

  ComplexClassification out;
  out.m = w.dim();
  out.half_dim = pair.half_dim();
  out.codim = pair.dim() - w.dim();

  const Mat& j = pair.j().matrix();
  Subspace jw = image(j, w);
  Subspace h = intersect(w, jw);
  if (image(j, h) != h) throw internal_error("maximal invariant part not J-invariant");

  if (h == w) {
    out.kind = ComplexKind::holomorphic;
    out.d = w;
    out.d_perp = Subspace::zero(pair.dim());
    if (out.m % 2 != 0) throw internal_error("odd-dimensional holomorphic subspace");
    return out;
  }
  Subspace w_perp = orthogonal_complement(b, w);
  if (h.dim() == 0) {
    if (w_perp.contains(jw)) {
      if (out.m > out.half_dim) throw internal_error("totally real subspace larger than half dimension");
      out.kind = out.m == out.half_dim ? ComplexKind::lagrangian : ComplexKind::totally_real;
      out.d = Subspace::zero(pair.dim());
      out.d_perp = w;
      return out;
    }
    return out;  // unclassified
  }
  Subspace d_perp = intersect(w, orthogonal_complement(b, h));
  bool splits = intersect(h, d_perp).dim() == 0 && h.dim() + d_perp.dim() == w.dim();
  bool d_perp_nondeg = radical(b, d_perp).dim() == 0;
  bool d_perp_totally_real = w_perp.contains(image(j, d_perp));
  if (splits && d_perp_nondeg && d_perp_totally_real) {
    out.kind = d_perp.dim() == out.codim ? ComplexKind::generic : ComplexKind::cr;
    out.d = h;
    out.d_perp = d_perp;
    out.proper = true;
  }
  return out;
}

/// Tangential/transversal split of J along ambient = W + C: JX = T(X) + F(X)
/// for X in W and JV = t(V) + f(V) for V in C. T and t act through
/// j_tangential, F and f through j_transversal; the domain picks the name.
struct JSplitData {
  Mat proj_w;          // ambient projector onto W along C
  Mat proj_c;          // ambient projector onto C along W
  Mat j_tangential;    // proj_w * J
  Mat j_transversal;   // proj_c * J
};

inline JSplitData j_split(const NordenPair& pair, const Subspace& w, const Subspace& complement) {
  std::size_t n = pair.dim();
  if (w.ambient_dim() != n || complement.ambient_dim() != n)
    throw input_error("subspace/ambient dimension mismatch");
  if (w.dim() + complement.dim() != n || intersect(w, complement).dim() != 0)
    throw input_error("subspaces are not complementary");
  std::vector<Vec> cols;
  for (const auto& v : w.basis()) cols.push_back(v);
  for (const auto& v : complement.basis()) cols.push_back(v);
  Mat s = Mat::from_columns(cols);
  Mat sinv = inverse(s);
  Mat dw(n, n), dc(n, n);
  for (std::size_t i = 0; i < w.dim(); ++i) dw(i, i) = 1;
  for (std::size_t i = w.dim(); i < n; ++i) dc(i, i) = 1;
  JSplitData d{s * dw * sinv, s * dc * sinv, Mat(), Mat()};
  const Mat& j = pair.j().matrix();
  d.j_tangential = d.proj_w * j;
  d.j_transversal = d.proj_c * j;
  return d;
}

/// One side of the two-metric report.
struct SideReport {
  MetricKind metric = MetricKind::g;
  bool degenerate = false;
  std::optional<ComplexClassification> complex_type;  // when non-degenerate
  std::optional<DegeneracyReport> degeneracy;         // when degenerate
  std::optional<LightlikeSplitting> split;            // when degenerate
  std::optional<RadicalTransversalReport> rt;         // when degenerate
};

struct CrossReport {
  SideReport g_side;
  SideReport gt_side;
  std::vector<std::string> dictionary;  // names of the correspondences that fired
};

inline SideReport classify_side(const NordenPair& pair, const Subspace& w, MetricKind which) {
  SideReport side;
  side.metric = which;
  DegeneracyReport deg = classify_degeneracy(pair, w, which);
  side.degenerate = deg.degenerate;
  if (deg.degenerate) {
    side.degeneracy = deg;
    side.split = build_lightlike_splitting(pair, w, which);
    side.rt = is_radical_transversal(pair, *side.split);
  } else {
    side.complex_type = classify_complex_type(pair, w, which);
  }
  return side;
}

namespace detail {

inline void require(bool cond, const std::string& what, std::vector<std::string>& fired) {
  if (!cond) throw theorem_violation("dictionary violated: " + what);
  fired.push_back(what);
}

/// Asserts the classification dictionary in one direction: `a` plays the
/// non-degenerate role, `c` the lightlike role. Every implication is also
/// asserted with the two metrics interchanged by the caller.
inline void assert_dictionary(const SideReport& a, const SideReport& c, const std::string& tag,
                              std::vector<std::string>& fired) {
  if (!a.degenerate && a.complex_type) {
    const ComplexClassification& cls = *a.complex_type;
    if (cls.kind == ComplexKind::cr || cls.kind == ComplexKind::generic) {
      require(c.degenerate, tag + " proper CR partner must be lightlike", fired);
      require(c.degeneracy->rad == *cls.d_perp, tag + " radical must equal the totally real part", fired);
      require(c.degeneracy->r == cls.d_perp->dim(), tag + " radical rank must match dim D-perp", fired);
      require(c.rt->radical_transversal, tag + " CR partner must be radical-transversal", fired);
      if (cls.kind == ComplexKind::generic)
        require(c.degeneracy->case_tag == LightlikeCase::coisotropic,
                tag + " generic partner must be coisotropic", fired);
      else
        require(c.degeneracy->case_tag == LightlikeCase::r_lightlike,
                tag + " non-generic CR partner must be r-lightlike", fired);
    }
    if (cls.kind == ComplexKind::totally_real && cls.m > 1 && cls.m < cls.half_dim) {
      require(c.degenerate, tag + " totally real partner must be lightlike", fired);
      require(c.degeneracy->case_tag == LightlikeCase::isotropic,
              tag + " totally real partner must be isotropic", fired);
      require(c.rt->j_tm_is_ltr, tag + " isotropic partner must have J(TM) = ltr(TM)", fired);
    }
    if (cls.kind == ComplexKind::lagrangian) {
      require(c.degenerate, tag + " Lagrangian partner must be lightlike", fired);
      require(c.degeneracy->case_tag == LightlikeCase::totally_lightlike,
              tag + " Lagrangian partner must be totally lightlike", fired);
      require(c.rt->j_tm_is_ltr, tag + " totally lightlike partner must have J(TM) = ltr(TM)", fired);
    }
  }
  if (c.degenerate && c.rt) {
    const RadicalTransversalReport& rt = *c.rt;
    const DegeneracyReport& deg = *c.degeneracy;
    if (rt.radical_transversal && (deg.case_tag == LightlikeCase::r_lightlike ||
                                   deg.case_tag == LightlikeCase::coisotropic)) {
      require(!a.degenerate, tag + " radical-transversal partner must be non-degenerate", fired);
      bool is_cr = a.complex_type->kind == ComplexKind::cr || a.complex_type->kind == ComplexKind::generic;
      require(is_cr, tag + " radical-transversal partner must be CR", fired);
      require(*a.complex_type->d_perp == deg.rad, tag + " D-perp must equal the radical", fired);
      if (deg.case_tag == LightlikeCase::coisotropic)
        require(a.complex_type->kind == ComplexKind::generic,
                tag + " coisotropic partner must be generic", fired);
    }
    if (rt.j_tm_is_ltr && deg.case_tag == LightlikeCase::isotropic && deg.m > 1) {
      require(!a.degenerate, tag + " isotropic J(TM)=ltr partner must be non-degenerate", fired);
      require(a.complex_type->kind == ComplexKind::totally_real,
              tag + " isotropic J(TM)=ltr partner must be totally real", fired);
    }
    if (rt.j_tm_is_ltr && deg.case_tag == LightlikeCase::totally_lightlike) {
      require(!a.degenerate, tag + " totally lightlike J(TM)=ltr partner must be non-degenerate", fired);
      require(a.complex_type->kind == ComplexKind::lagrangian,
              tag + " totally lightlike J(TM)=ltr partner must be Lagrangian", fired);
    }
  }
}

}  // namespace detail

/// Classifies W against both metrics and asserts every stated correspondence
/// between the two sides, in both orientations. A violated correspondence is
/// a theorem_violation and must never fire on valid inputs.
inline CrossReport cross_classify(const NordenPair& pair, const Subspace& w) {
  CrossReport rep;
  rep.g_side = classify_side(pair, w, MetricKind::g);
  rep.gt_side = classify_side(pair, w, MetricKind::g_assoc);

  // A J-invariant subspace is degenerate for one metric exactly when it is
  // degenerate for the other; when non-degenerate, both sides classify as
  // holomorphic.
  if (image(pair.j().matrix(), w) == w) {
    detail::require(rep.g_side.degenerate == rep.gt_side.degenerate,
                    "holomorphic subspaces degenerate together", rep.dictionary);
    if (!rep.g_side.degenerate) {
      detail::require(rep.g_side.complex_type->kind == ComplexKind::holomorphic &&
                          rep.gt_side.complex_type->kind == ComplexKind::holomorphic,
                      "holomorphic against one metric iff holomorphic against the other", rep.dictionary);
    }
  }
  detail::assert_dictionary(rep.g_side, rep.gt_side, "[g vs gtilde]", rep.dictionary);
  detail::assert_dictionary(rep.gt_side, rep.g_side, "[gtilde vs g]", rep.dictionary);
  return rep;
}

}  // namespace norden

#endif
