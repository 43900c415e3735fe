#ifndef NORDEN_SPLITTING_HPP
#define NORDEN_SPLITTING_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "norden/bilinear.hpp"
#include "norden/norden_pair.hpp"
#include "norden/prng.hpp"
#include "norden/subspace.hpp"

namespace norden {

enum class LightlikeCase { r_lightlike, coisotropic, isotropic, totally_lightlike };

inline const char* lightlike_case_name(LightlikeCase c) {
  switch (c) {
    case LightlikeCase::r_lightlike: return "r-lightlike";
    case LightlikeCase::coisotropic: return "coisotropic";
    case LightlikeCase::isotropic: return "isotropic";
    case LightlikeCase::totally_lightlike: return "totally lightlike";
  }
  return "?";
}

struct DegeneracyReport {
  bool degenerate = false;
  std::optional<LightlikeCase> case_tag;
  std::size_t r = 0;      // dim Rad
  std::size_t m = 0;      // dim W
  std::size_t codim = 0;  // ambient - m
  Subspace rad = Subspace::zero(0);
};

/// Rad = W cap W^perp decides everything: r = 0 is the non-degenerate case,
/// r = codim swallows the whole normal space (coisotropic), r = m swallows
/// the whole tangent space (isotropic), r = m = codim is totally lightlike.
inline DegeneracyReport classify_degeneracy(const NordenPair& pair, const Subspace& w, MetricKind which) {
  if (w.ambient_dim() != pair.dim()) throw input_error("subspace/ambient dimension mismatch");
  if (w.dim() == 0 || w.dim() == pair.dim())
    throw precondition_error("classification needs 0 < dim W < ambient dimension");
  DegeneracyReport rep;
  rep.m = w.dim();
  rep.codim = pair.dim() - w.dim();
  rep.rad = radical(pair.metric(which), w);
  rep.r = rep.rad.dim();
  rep.degenerate = rep.r > 0;
  if (!rep.degenerate) return rep;
  if (rep.r < rep.m && rep.r < rep.codim)
    rep.case_tag = LightlikeCase::r_lightlike;
  else if (rep.r == rep.codim && rep.r < rep.m)
    rep.case_tag = LightlikeCase::coisotropic;
  else if (rep.r == rep.m && rep.r < rep.codim)
    rep.case_tag = LightlikeCase::isotropic;
  else
    rep.case_tag = LightlikeCase::totally_lightlike;
  return rep;
}

/// Screen selection. The default prefers the maximal J-invariant part of the
/// enclosing space, which surfaces the adapted frames of the transversal
/// constructions whenever they exist; `echelon` is the plain canonical basis
/// extension; `seeded` draws a randomized complement for
/// screen-independence checks.
enum class ScreenPolicy { j_adapted, echelon, seeded };

struct LightlikeSplitting {
  MetricKind metric = MetricKind::g;
  std::size_t r = 0;
  LightlikeCase case_tag = LightlikeCase::r_lightlike;
  Subspace w = Subspace::zero(0);            // TM
  Subspace rad = Subspace::zero(0);          // Rad TM
  Subspace screen = Subspace::zero(0);       // S(TM)
  Subspace w_perp = Subspace::zero(0);       // TM^perp for the chosen metric
  Subspace screen_perp = Subspace::zero(0);  // S(TM^perp)
  Subspace ltr = Subspace::zero(0);          // lightlike transversal bundle
  Subspace tr = Subspace::zero(0);           // ltr + S(TM^perp)
  std::vector<Vec> xi;                       // basis of Rad TM
  std::vector<Vec> n;                        // transversal frame, B(n_i, xi_j) = delta_ij
  std::vector<Vec> x_screen;                 // basis of S(TM)
  std::vector<Vec> w_screen_perp;            // basis of S(TM^perp)
};

namespace detail {

/// Complement of `base` in `inside`, preferring vectors of the maximal
/// J-invariant part (j_adapted), a seeded random combination (seeded), or
/// nothing (echelon) before falling back to the canonical basis of `inside`.
inline Subspace pick_screen(const NordenPair& pair, const Subspace& base, const Subspace& inside,
                            ScreenPolicy policy, uint64_t seed) {
  std::vector<Vec> preferred;
  if (policy == ScreenPolicy::j_adapted) {
    Subspace holo = intersect(inside, image(pair.j().matrix(), inside));
    preferred = holo.basis();
  } else if (policy == ScreenPolicy::seeded) {
    SeededGenerator gen{seed};
    std::size_t n = inside.ambient_dim();
    for (std::size_t t = 0; t + base.dim() < inside.dim() + 4; ++t) {
      Vec v(n);
      for (const auto& b : inside.basis()) {
        auto [raw, succ] = gen.below(2 * gen.bound + 1);
        gen = succ;
        v += rat(static_cast<long>(raw) - gen.bound) * b;
      }
      preferred.push_back(v);
    }
  }
  return complement_within(base, inside, preferred);
}

}  // namespace detail

/// Builds the full decomposition data for a W degenerate with respect to the
/// chosen metric: Rad, a screen inside W, a screen inside W^perp, and the
/// transversal frame n_i obtained by solving the pairing conditions
/// B(m_i, xi_j) = delta_ij inside the orthogonal complement of both screens
/// and then subtracting the half Gram correction that makes the frame null.
inline LightlikeSplitting build_lightlike_splitting(const NordenPair& pair, const Subspace& w,
                                                    MetricKind which,
                                                    ScreenPolicy policy = ScreenPolicy::j_adapted,
                                                    uint64_t seed = 0) {
  DegeneracyReport deg = classify_degeneracy(pair, w, which);
  if (!deg.degenerate) throw precondition_error("splitting needs a degenerate subspace");
  const BilinearForm& b = pair.metric(which);

  LightlikeSplitting s;
  s.metric = which;
  s.r = deg.r;
  s.case_tag = *deg.case_tag;
  s.w = w;
  s.rad = deg.rad;
  s.xi = s.rad.basis();
  s.screen = detail::pick_screen(pair, s.rad, w, policy, seed);
  s.w_perp = orthogonal_complement(b, w);
  s.screen_perp = detail::pick_screen(pair, s.rad, s.w_perp, policy, seed ^ 0x9e3779b97f4a7c15ULL);
  s.x_screen = s.screen.basis();
  s.w_screen_perp = s.screen_perp.basis();

  // Transversal frame: work in V0, the B-orthogonal complement of both
  // screens; Rad sits inside V0 with dim V0 = 2r.
  Subspace v0 = orthogonal_complement(b, sum(s.screen, s.screen_perp));
  if (v0.dim() != 2 * s.r || !v0.contains(s.rad))
    throw internal_error("transversal construction: unexpected V0");
  Subspace comp = complement_within(s.rad, v0);
  // pairing(i, j) = B(c_i, xi_j) must be invertible; m_i = sum_k inv(P)_ik c_k.
  Mat pairing(s.r, s.r);
  for (std::size_t i = 0; i < s.r; ++i)
    for (std::size_t j = 0; j < s.r; ++j) pairing(i, j) = b.eval(comp.basis()[i], s.xi[j]);
  Mat pinv = inverse(pairing);  // singular pairing cannot happen here
  std::vector<Vec> m(s.r, Vec(pair.dim()));
  for (std::size_t i = 0; i < s.r; ++i)
    for (std::size_t k = 0; k < s.r; ++k)
      if (pinv(i, k) != 0) m[i] += pinv(i, k) * comp.basis()[k];
  s.n.assign(s.r, Vec(pair.dim()));
  for (std::size_t i = 0; i < s.r; ++i) {
    s.n[i] = m[i];
    for (std::size_t j = 0; j < s.r; ++j) {
      Scalar c = b.eval(m[i], m[j]);
      if (c != 0) s.n[i] -= (c / 2) * s.xi[j];
    }
  }
  s.ltr = Subspace::span(pair.dim(), s.n);
  s.tr = sum(s.ltr, s.screen_perp);
  return s;
}

/// Checks every stated property of a splitting; returns the first failure
/// as text, or an empty string. Used by tests and by the verification CLI.
inline std::string splitting_defect(const NordenPair& pair, const LightlikeSplitting& s) {
  const BilinearForm& b = pair.metric(s.metric);
  std::size_t n = pair.dim();
  if (sum(s.rad, s.screen) != s.w || intersect(s.rad, s.screen).dim() != 0)
    return "TM != Rad + S(TM)";
  if (sum(s.rad, s.screen_perp) != s.w_perp || intersect(s.rad, s.screen_perp).dim() != 0)
    return "TM^perp != Rad + S(TM^perp)";
  if (sum(s.ltr, s.screen_perp) != s.tr || intersect(s.ltr, s.screen_perp).dim() != 0)
    return "tr != ltr + S(TM^perp)";
  if (sum(s.w, s.tr) != Subspace::full(n) || intersect(s.w, s.tr).dim() != 0)
    return "ambient != TM + tr";
  if (radical(b, s.screen).dim() != 0) return "screen is degenerate";
  if (radical(b, s.screen_perp).dim() != 0) return "screen transversal bundle is degenerate";
  for (const auto& x : s.x_screen)
    for (const auto& xi : s.xi)
      if (b.eval(x, xi) != 0) return "S(TM) not orthogonal to Rad";
  for (std::size_t i = 0; i < s.n.size(); ++i) {
    for (std::size_t j = 0; j < s.xi.size(); ++j)
      if (b.eval(s.n[i], s.xi[j]) != ((i == j) ? Scalar(1) : Scalar(0)))
        return "frame pairing B(n_i, xi_j) != delta";
    for (std::size_t j = 0; j < s.n.size(); ++j)
      if (b.eval(s.n[i], s.n[j]) != 0) return "transversal frame is not null";
    for (const auto& x : s.x_screen)
      if (b.eval(s.n[i], x) != 0) return "ltr not orthogonal to S(TM)";
    for (const auto& wv : s.w_screen_perp)
      if (b.eval(s.n[i], wv) != 0) return "ltr not orthogonal to S(TM^perp)";
  }
  return "";
}

struct RadicalTransversalReport {
  bool radical_transversal = false;   // J(Rad) is a valid transversal choice and J(S(TM)) = S(TM)
  bool proper = false;                // S(TM) != 0
  bool screen_holomorphic = false;    // J(S(TM)) = S(TM)
  bool j_rad_is_ltr_choice = false;   // J(Rad) satisfies every transversal-bundle condition
  bool screen_perp_holomorphic = false;  // J(S(TM^perp)) = S(TM^perp)
  bool j_tm_is_ltr = false;           // Rad = TM and J(TM) is the transversal bundle
  std::optional<LightlikeSplitting> adapted;  // splitting rebased with ltr = J(Rad)
};

/// Decides whether the splitting is radical-transversal: J maps Rad onto a
/// valid lightlike transversal bundle and preserves the screen. On success
/// the returned splitting is rebased so that ltr = J(Rad) with the pairing
/// frame normalized, and the screen-transversal bundle is certified to be
/// J-invariant (a violation of that consequence is a theorem_violation).
inline RadicalTransversalReport is_radical_transversal(const NordenPair& pair, const LightlikeSplitting& s) {
  const BilinearForm& b = pair.metric(s.metric);
  const Mat& j = pair.j().matrix();
  RadicalTransversalReport rep;
  rep.proper = s.screen.dim() > 0;
  rep.screen_holomorphic = image(j, s.screen) == s.screen;

  // J(Rad) qualifies as a transversal bundle iff it is null, B-orthogonal to
  // both screens, and pairs non-degenerately with Rad.
  bool ok = true;
  std::vector<Vec> jxi;
  for (const auto& xi : s.xi) jxi.push_back(j * xi);
  for (const auto& a : jxi) {
    for (const auto& c : jxi)
      if (b.eval(a, c) != 0) ok = false;
    for (const auto& x : s.x_screen)
      if (b.eval(a, x) != 0) ok = false;
    for (const auto& wv : s.w_screen_perp)
      if (b.eval(a, wv) != 0) ok = false;
  }
  Mat pairing(s.r, s.r);
  for (std::size_t i = 0; i < s.r; ++i)
    for (std::size_t k = 0; k < s.r; ++k) pairing(i, k) = b.eval(jxi[i], s.xi[k]);
  if (rank(pairing) != s.r) ok = false;
  rep.j_rad_is_ltr_choice = ok;
  rep.radical_transversal = ok && rep.screen_holomorphic;
  rep.screen_perp_holomorphic = image(j, s.screen_perp) == s.screen_perp;
  rep.j_tm_is_ltr = rep.j_rad_is_ltr_choice && s.rad == s.w;

  if (rep.radical_transversal) {
    if (!rep.screen_perp_holomorphic)
      throw theorem_violation("radical-transversal splitting with non-holomorphic S(TM^perp)");
    LightlikeSplitting adapted = s;
    Mat pinv = inverse(pairing);
    adapted.n.assign(s.r, Vec(pair.dim()));
    for (std::size_t i = 0; i < s.r; ++i)
      for (std::size_t k = 0; k < s.r; ++k)
        if (pinv(i, k) != 0) adapted.n[i] += pinv(i, k) * jxi[k];
    adapted.ltr = Subspace::span(pair.dim(), adapted.n);
    adapted.tr = sum(adapted.ltr, adapted.screen_perp);
    std::string defect = splitting_defect(pair, adapted);
    if (!defect.empty()) throw internal_error("adapted splitting defect: " + defect);
    rep.adapted = std::move(adapted);
  }
  return rep;
}

}  // namespace norden

#endif
