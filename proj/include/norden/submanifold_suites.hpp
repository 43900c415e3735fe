#ifndef NORDEN_SUBMANIFOLD_SUITES_HPP
#define NORDEN_SUBMANIFOLD_SUITES_HPP

// Implementation companion of submanifold.hpp: the identity, Otsuki,
// geodesic and curvature verification suites. Include submanifold.hpp.

namespace norden {

namespace detail {

inline std::string tuple_tag(std::initializer_list<std::size_t> idx) {
  std::string s = "(";
  bool first = true;
  for (auto i : idx) {
    if (!first) s += ",";
    s += std::to_string(i);
    first = false;
  }
  return s + ")";
}

}  // namespace detail

/// Evaluates both sides of every displayed pointwise identity of the two
/// Gauss-Weingarten calculi over all basis tuples and reports exact
/// residuals. The J-intertwining block runs only over Kaehler ambients.
inline Ledger identity_suite(const TotallyRealSetting& st, const GaussWeingartenData& d) {
  using detail::check_all;
  using detail::tuple_tag;
  Ledger ledger;
  detail::Calculus plain(st, d, false), tilde(st, d, true);
  const BilinearForm& g = st.pair().g();
  const BilinearForm& gt = st.pair().g_assoc();
  const Mat& j = st.pair().j().matrix();
  const LieAlgebraAmbient& amb = st.ambient();
  std::size_t m = st.m(), p = st.perp_dim();
  const auto& wb = st.tangent_basis();
  const auto& nb = st.jtm_basis();
  const auto& pb = st.perp_basis();

  auto over_ab = [&](auto body) {
    return [&, body](std::string& detail) {
      for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b)
          if (!body(a, b)) {
            detail = tuple_tag({a, b});
            return false;
          }
      return true;
    };
  };

  check_all(ledger, "second fundamental form symmetric (ltr part)",
            over_ab([&](std::size_t a, std::size_t b) { return d.h1[a][b] == d.h1[b][a]; }));
  check_all(ledger, "second fundamental form symmetric (screen part)",
            over_ab([&](std::size_t a, std::size_t b) { return d.h2[a][b] == d.h2[b][a]; }));
  check_all(ledger, "isotropic second fundamental form symmetric",
            over_ab([&](std::size_t a, std::size_t b) { return d.h_s[a][b] == d.h_s[b][a]; }));
  check_all(ledger, "isotropic second fundamental form has no ltr part",
            over_ab([&](std::size_t a, std::size_t b) { return d.h_l[a][b].is_zero(); }));
  check_all(ledger, "induced connection torsion-free", over_ab([&](std::size_t a, std::size_t b) {
              return d.nabla[a][b] - d.nabla[b][a] == amb.bracket(wb[a], wb[b]);
            }));
  check_all(ledger, "isotropic induced connection torsion-free",
            over_ab([&](std::size_t a, std::size_t b) {
              return d.nabla_t[a][b] - d.nabla_t[b][a] == amb.bracket(wb[a], wb[b]);
            }));

  check_all(ledger, "ambient derivative reconstructed (tangent arguments)",
            over_ab([&](std::size_t a, std::size_t b) {
              return d.nabla[a][b] + d.h1[a][b] + d.h2[a][b] == amb.nabla(MetricKind::g, wb[a], wb[b]) &&
                     d.nabla_t[a][b] + d.h_l[a][b] + d.h_s[a][b] ==
                         amb.nabla(MetricKind::g_assoc, wb[a], wb[b]);
            }));
  check_all(ledger, "ambient derivative reconstructed (transversal arguments)",
            [&](std::string& detail) {
              for (std::size_t a = 0; a < m; ++a) {
                for (std::size_t i = 0; i < m; ++i)
                  if (-d.a_n[i][a] + d.nabla1[a][i] + d.d2[a][i] !=
                          amb.nabla(MetricKind::g, wb[a], nb[i]) ||
                      -d.a_n_t[i][a] + d.nabla_l[a][i] + d.d_s[a][i] !=
                          amb.nabla(MetricKind::g_assoc, wb[a], nb[i])) {
                    detail = tuple_tag({a, i});
                    return false;
                  }
                for (std::size_t al = 0; al < p; ++al)
                  if (-d.a_w[al][a] + d.d1[a][al] + d.nabla2[a][al] !=
                          amb.nabla(MetricKind::g, wb[a], pb[al]) ||
                      -d.a_w_t[al][a] + d.d_l[a][al] + d.nabla_s[a][al] !=
                          amb.nabla(MetricKind::g_assoc, wb[a], pb[al])) {
                    detail = tuple_tag({a, al});
                    return false;
                  }
              }
              return true;
            });

  // metric-connection residuals; the isotropic-side checks against the
  // associated metric are vacuous on null bundles but kept for honesty.
  check_all(ledger, "induced connection metric", [&](std::string& detail) {
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b)
        for (std::size_t c = 0; c < m; ++c)
          if (g.eval(d.nabla[a][b], wb[c]) + g.eval(wb[b], d.nabla[a][c]) != 0) {
            detail = tuple_tag({a, b, c});
            return false;
          }
    return true;
  });
  check_all(ledger, "transversal connections metric", [&](std::string& detail) {
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t k = 0; k < m; ++k)
          if (g.eval(d.nabla1[a][i], nb[k]) + g.eval(nb[i], d.nabla1[a][k]) != 0) {
            detail = "jtm " + tuple_tag({a, i, k});
            return false;
          }
      for (std::size_t al = 0; al < p; ++al)
        for (std::size_t be = 0; be < p; ++be)
          if (g.eval(d.nabla2[a][al], pb[be]) + g.eval(pb[al], d.nabla2[a][be]) != 0) {
            detail = "screen " + tuple_tag({a, al, be});
            return false;
          }
    }
    return true;
  });
  check_all(ledger, "isotropic transversal connections metric", [&](std::string& detail) {
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t k = 0; k < m; ++k)
          if (gt.eval(d.nabla_l[a][i], nb[k]) + gt.eval(nb[i], d.nabla_l[a][k]) != 0) {
            detail = "ltr " + tuple_tag({a, i, k});
            return false;
          }
      for (std::size_t al = 0; al < p; ++al)
        for (std::size_t be = 0; be < p; ++be)
          if (gt.eval(d.nabla_s[a][al], pb[be]) + gt.eval(pb[al], d.nabla_s[a][be]) != 0) {
            detail = "screen " + tuple_tag({a, al, be});
            return false;
          }
      for (std::size_t b = 0; b < m; ++b)
        for (std::size_t c = 0; c < m; ++c)
          if (gt.eval(d.nabla_t[a][b], wb[c]) + gt.eval(wb[b], d.nabla_t[a][c]) != 0) {
            detail = "tangent " + tuple_tag({a, b, c});
            return false;
          }
    }
    return true;
  });

  check_all(ledger, "second form pairs with the shape operator (ltr part)", [&](std::string& detail) {
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b)
        for (std::size_t i = 0; i < m; ++i)
          if (g.eval(d.h1[a][b], nb[i]) != g.eval(d.a_n[i][a], wb[b])) {
            detail = tuple_tag({a, b, i});
            return false;
          }
    return true;
  });
  check_all(ledger, "second form pairs with the shape operator (screen part)",
            [&](std::string& detail) {
              for (std::size_t a = 0; a < m; ++a)
                for (std::size_t b = 0; b < m; ++b)
                  for (std::size_t al = 0; al < p; ++al)
                    if (g.eval(d.h2[a][b], pb[al]) != g.eval(d.a_w[al][a], wb[b])) {
                      detail = tuple_tag({a, b, al});
                      return false;
                    }
              return true;
            });
  check_all(ledger, "cross forms pair antisymmetrically", [&](std::string& detail) {
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t al = 0; al < p; ++al)
          if (g.eval(d.d2[a][i], pb[al]) != -g.eval(d.d1[a][al], nb[i])) {
            detail = tuple_tag({a, i, al});
            return false;
          }
    return true;
  });

  check_all(ledger, "isotropic second form pairs with the screen cross form",
            [&](std::string& detail) {
              for (std::size_t a = 0; a < m; ++a)
                for (std::size_t b = 0; b < m; ++b)
                  for (std::size_t al = 0; al < p; ++al)
                    if (gt.eval(d.h_s[a][b], pb[al]) + gt.eval(wb[b], d.d_l[a][al]) != 0) {
                      detail = tuple_tag({a, b, al});
                      return false;
                    }
              return true;
            });
  check_all(ledger, "isotropic cross form pairs with the shape operator", [&](std::string& detail) {
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t al = 0; al < p; ++al)
          if (gt.eval(d.d_s[a][i], pb[al]) != gt.eval(nb[i], d.a_w_t[al][a])) {
            detail = tuple_tag({a, i, al});
            return false;
          }
    return true;
  });
  check_all(ledger, "isotropic shape operators pair antisymmetrically", [&](std::string& detail) {
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t k = 0; k < m; ++k)
          if (gt.eval(d.a_n_t[i][a], nb[k]) + gt.eval(d.a_n_t[k][a], nb[i]) != 0) {
            detail = tuple_tag({a, i, k});
            return false;
          }
    return true;
  });

  // The two families differ by the projected parts of the difference tensor.
  check_all(ledger, "families differ by the connection-difference tensor", [&](std::string& detail) {
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = 0; b < m; ++b) {
        auto parts = st.decompose(amb.phi(wb[a], wb[b]));
        if (d.nabla_t[a][b] != d.nabla[a][b] + parts.tangent ||
            d.h_s[a][b] != d.h2[a][b] + parts.perp || d.h1[a][b] != -parts.jtm) {
          detail = "tangent " + tuple_tag({a, b});
          return false;
        }
      }
      for (std::size_t i = 0; i < m; ++i) {
        auto parts = st.decompose(amb.phi(wb[a], nb[i]));
        if (d.a_n_t[i][a] != d.a_n[i][a] - parts.tangent ||
            d.nabla_l[a][i] != d.nabla1[a][i] + parts.jtm || d.d_s[a][i] != d.d2[a][i] + parts.perp) {
          detail = "jtm " + tuple_tag({a, i});
          return false;
        }
      }
      for (std::size_t al = 0; al < p; ++al) {
        auto parts = st.decompose(amb.phi(wb[a], pb[al]));
        if (d.a_w_t[al][a] != d.a_w[al][a] - parts.tangent ||
            d.d_l[a][al] != d.d1[a][al] + parts.jtm || d.nabla_s[a][al] != d.nabla2[a][al] + parts.perp) {
          detail = "screen " + tuple_tag({a, al});
          return false;
        }
      }
    }
    return true;
  });

  if (!st.ambient().f3_vanishes()) return ledger;

  // Parallel complex structure: the J-intertwining identities and the
  // coincidence of the two families, in both families.
  check_all(ledger, "ltr second form and J-tangent shape operators vanish",
            over_ab([&](std::size_t a, std::size_t i) {
              return d.h1[a][i].is_zero() && d.a_n[i][a].is_zero() && d.h_l[a][i].is_zero() &&
                     d.a_n_t[i][a].is_zero();
            }));
  check_all(ledger, "jtm connection intertwines J", over_ab([&](std::size_t a, std::size_t b) {
              return d.nabla1[a][b] == j * d.nabla[a][b] && d.nabla_l[a][b] == j * d.nabla_t[a][b];
            }));
  check_all(ledger, "cross form intertwines the screen second form",
            over_ab([&](std::size_t a, std::size_t b) {
              return d.d2[a][b] == j * d.h2[a][b] && d.d_s[a][b] == j * d.h_s[a][b];
            }));
  check_all(ledger, "shape operator recovered from the screen cross form", [&](std::string& detail) {
    for (std::size_t al = 0; al < p; ++al)
      for (std::size_t a = 0; a < m; ++a) {
        Vec jw = j * pb[al];
        if (d.a_w[al][a] != j * plain.d1(wb[a], jw) || d.a_w_t[al][a] != j * tilde.d1(wb[a], jw)) {
          detail = tuple_tag({al, a});
          return false;
        }
      }
    return true;
  });
  check_all(ledger, "screen-transversal connection commutes with J", [&](std::string& detail) {
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t al = 0; al < p; ++al) {
        Vec jw = j * pb[al];
        if (plain.nabla2(wb[a], jw) != j * d.nabla2[a][al] ||
            tilde.nabla2(wb[a], jw) != j * d.nabla_s[a][al]) {
          detail = tuple_tag({a, al});
          return false;
        }
      }
    return true;
  });
  check_all(ledger, "both families coincide", [&](std::string& detail) {
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = 0; b < m; ++b)
        if (d.nabla_t[a][b] != d.nabla[a][b] || d.h_s[a][b] != d.h2[a][b] ||
            d.a_n_t[b][a] != d.a_n[b][a] || d.nabla_l[a][b] != d.nabla1[a][b] ||
            d.d_s[a][b] != d.d2[a][b]) {
          detail = tuple_tag({a, b});
          return false;
        }
      for (std::size_t al = 0; al < p; ++al)
        if (d.a_w_t[al][a] != d.a_w[al][a] || d.d_l[a][al] != d.d1[a][al] ||
            d.nabla_s[a][al] != d.nabla2[a][al]) {
          detail = tuple_tag({a, al});
          return false;
        }
    }
    return true;
  });
  return ledger;
}

/// The four-way equivalence for the screen-transversal Otsuki pair: both
/// cross forms vanish together, exactly when both projected connections are
/// metric. Disagreement is a violated equivalence, not data.
struct OtsukiReport {
  bool d1_metric = false;
  bool d1_cross_zero = false;
  bool d2_cross_zero = false;
  bool d2_metric = false;
  bool value = false;
};

inline OtsukiReport otsuki_report(const TotallyRealSetting& st, const GaussWeingartenData& d) {
  const BilinearForm& g = st.pair().g();
  std::size_t m = st.m(), p = st.perp_dim();
  OtsukiReport rep;
  std::vector<Vec> normal = st.jtm_basis();
  normal.insert(normal.end(), st.perp_basis().begin(), st.perp_basis().end());
  auto metric_after = [&](const Mat& proj) {
    for (std::size_t a = 0; a < m; ++a)
      for (const auto& v : normal)
        for (const auto& vp : normal) {
          Vec dv = proj * st.ambient().nabla(MetricKind::g, st.tangent_basis()[a], v);
          Vec dvp = proj * st.ambient().nabla(MetricKind::g, st.tangent_basis()[a], vp);
          if (g.eval(dv, vp) + g.eval(v, dvp) != 0) return false;
        }
    return true;
  };
  rep.d1_metric = metric_after(st.proj_jtm());
  rep.d2_metric = metric_after(st.proj_perp());
  rep.d1_cross_zero = true;
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t al = 0; al < p; ++al)
      if (!d.d1[a][al].is_zero()) rep.d1_cross_zero = false;
  rep.d2_cross_zero = true;
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t i = 0; i < m; ++i)
      if (!d.d2[a][i].is_zero()) rep.d2_cross_zero = false;
  if (rep.d1_metric != rep.d1_cross_zero || rep.d1_metric != rep.d2_cross_zero ||
      rep.d1_metric != rep.d2_metric)
    throw theorem_violation("Otsuki equivalence failed");
  rep.value = rep.d1_metric;
  return rep;
}

/// The totally-geodesic equivalences over a Kaehler ambient: ten distinct
/// conditions that must agree, with the shared verdict returned.
struct GeodesicReport {
  bool h_zero = false;            // second fundamental form vanishes
  bool h2_zero = false;           // screen part vanishes
  bool a_w_zero = false;          // screen shape operators vanish
  bool d1_zero = false;           // cross form into JW vanishes
  bool d2_zero = false;           // cross form into the screen part vanishes
  bool hs_zero = false;           // isotropic side totally geodesic
  bool d1_metric = false;
  bool d2_metric = false;
  bool transversal_metric = false;  // isotropic transversal connection metric
  bool ds_metric = false;           // its screen Otsuki part metric
  bool verdict = false;
};

inline GeodesicReport geodesic_report(const TotallyRealSetting& st, const GaussWeingartenData& d) {
  if (!st.ambient().f3_vanishes())
    throw precondition_error("geodesic equivalences need a Kaehler ambient");
  GeodesicReport rep;
  std::size_t m = st.m();
  auto table_zero = [](const Table& t) {
    for (const auto& row : t)
      for (const auto& v : row)
        if (!v.is_zero()) return false;
    return true;
  };
  rep.h2_zero = table_zero(d.h2);
  rep.h_zero = table_zero(d.h1) && rep.h2_zero;
  rep.a_w_zero = table_zero(d.a_w);
  rep.d1_zero = table_zero(d.d1);
  rep.d2_zero = table_zero(d.d2);
  rep.hs_zero = table_zero(d.h_s);
  OtsukiReport ot = otsuki_report(st, d);
  rep.d1_metric = ot.d1_metric;
  rep.d2_metric = ot.d2_metric;

  const BilinearForm& gt = st.pair().g_assoc();
  std::vector<Vec> normal = st.jtm_basis();
  normal.insert(normal.end(), st.perp_basis().begin(), st.perp_basis().end());
  rep.transversal_metric = true;
  rep.ds_metric = true;
  detail::Calculus tilde(st, d, true);
  for (std::size_t a = 0; a < m; ++a)
    for (const auto& v : normal)
      for (const auto& vp : normal) {
        Vec dv = tilde.transversal_conn(st.tangent_basis()[a], v);
        Vec dvp = tilde.transversal_conn(st.tangent_basis()[a], vp);
        if (gt.eval(dv, vp) + gt.eval(v, dvp) != 0) rep.transversal_metric = false;
        Vec sv = tilde.transversal_conn_perp(st.tangent_basis()[a], v);
        Vec svp = tilde.transversal_conn_perp(st.tangent_basis()[a], vp);
        if (gt.eval(sv, vp) + gt.eval(v, svp) != 0) rep.ds_metric = false;
      }
  bool v = rep.h_zero;
  if (rep.h2_zero != v || rep.a_w_zero != v || rep.d1_zero != v || rep.d2_zero != v ||
      rep.hs_zero != v || rep.d1_metric != v || rep.d2_metric != v || rep.transversal_metric != v ||
      rep.ds_metric != v)
    throw theorem_violation("totally geodesic equivalences failed");
  rep.verdict = v;
  return rep;
}

struct CurvatureReport {
  Ledger ledger;
  bool flat_tangent = false;        // induced connection
  bool flat_tangent_assoc = false;  // isotropic induced connection
  bool flat_jtm = false;            // connection on JW
  bool flat_jtm_assoc = false;      // isotropic connection on the transversal JW
  bool flatness_agree = false;
};

/// All curvature structure equations of the two calculi over a Kaehler
/// ambient, with exact residuals, plus the shared-flatness corollary.
inline CurvatureReport curvature_suite(const TotallyRealSetting& st) {
  if (!st.ambient().f3_vanishes())
    throw precondition_error("curvature structure equations need a Kaehler ambient");
  GaussWeingartenData data = gauss_weingarten(st);
  CurvatureReport rep;
  Ledger& ledger = rep.ledger;
  detail::Calculus plain(st, data, false), tilde(st, data, true);
  const LieAlgebraAmbient& amb = st.ambient();
  const BilinearForm& g = st.pair().g();
  const BilinearForm& gt = st.pair().g_assoc();
  const Mat& j = st.pair().j().matrix();
  std::size_t m = st.m(), p = st.perp_dim();
  const auto& wb = st.tangent_basis();
  const auto& nb = st.jtm_basis();
  const auto& pb = st.perp_basis();

  auto amb_r = [&](MetricKind k, const Vec& x, const Vec& y, const Vec& z) {
    return amb.curvature(k, x, y, z);
  };
  auto shape2 = [&](const detail::Calculus& c, const Vec& v, const Vec& x) { return c.shape(v, x); };

  using detail::check_all;
  using detail::tuple_tag;

  check_all(ledger, "curvature: tangential expansion", [&](std::string& detail) {
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b)
        for (std::size_t c = 0; c < m; ++c) {
          Vec lhs = amb_r(MetricKind::g, wb[a], wb[b], wb[c]);
          Vec r = plain.curv(plain.conn_tangent(), wb[a], wb[b], wb[c]);
          Vec rhs = r - shape2(plain, data.h2[b][c], wb[a]) + shape2(plain, data.h2[a][c], wb[b]) +
                    j * (shape2(plain, j * data.h2[b][c], wb[a]) -
                         shape2(plain, j * data.h2[a][c], wb[b])) +
                    plain.cov_h2(wb[a], wb[b], wb[c]) - plain.cov_h2(wb[b], wb[a], wb[c]);
          if (lhs != rhs) {
            detail = tuple_tag({a, b, c});
            return false;
          }
        }
    return true;
  });

  check_all(ledger, "curvature: screen-transversal expansion", [&](std::string& detail) {
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b)
        for (std::size_t al = 0; al < p; ++al) {
          Vec w = pb[al];
          Vec jw = j * w;
          Vec lhs = amb_r(MetricKind::g, wb[a], wb[b], w);
          Vec r2 = plain.curv(plain.conn_perp(), wb[a], wb[b], w);
          Vec rhs = r2 - plain.h2(wb[a], shape2(plain, w, wb[b])) +
                    plain.h2(wb[b], shape2(plain, w, wb[a])) +
                    j * (plain.h2(wb[a], shape2(plain, jw, wb[b])) -
                         plain.h2(wb[b], shape2(plain, jw, wb[a]))) -
                    plain.cov_shape(wb[a], w, wb[b]) + plain.cov_shape(wb[b], w, wb[a]) +
                    j * (plain.cov_shape(wb[a], jw, wb[b]) - plain.cov_shape(wb[b], jw, wb[a]));
          if (lhs != rhs) {
            detail = tuple_tag({a, b, al});
            return false;
          }
        }
    return true;
  });

  check_all(ledger, "curvature: ambient commutes with J", [&](std::string& detail) {
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b)
        for (std::size_t c = 0; c < m; ++c)
          if (amb_r(MetricKind::g, wb[a], wb[b], j * wb[c]) !=
              j * amb_r(MetricKind::g, wb[a], wb[b], wb[c])) {
            detail = tuple_tag({a, b, c});
            return false;
          }
    return true;
  });

  check_all(ledger, "curvature: J-twisted tangential expansion", [&](std::string& detail) {
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b)
        for (std::size_t c = 0; c < m; ++c) {
          Vec lhs = amb_r(MetricKind::g, wb[a], wb[b], j * wb[c]);
          Vec r = plain.curv(plain.conn_tangent(), wb[a], wb[b], wb[c]);
          Vec rhs = j * r -
                    j * (shape2(plain, data.h2[b][c], wb[a]) - shape2(plain, data.h2[a][c], wb[b])) -
                    shape2(plain, j * data.h2[b][c], wb[a]) + shape2(plain, j * data.h2[a][c], wb[b]) +
                    j * (plain.cov_h2(wb[a], wb[b], wb[c]) - plain.cov_h2(wb[b], wb[a], wb[c]));
          if (lhs != rhs) {
            detail = tuple_tag({a, b, c});
            return false;
          }
        }
    return true;
  });

  check_all(ledger, "curvature: transversal in J-tangent directions", [&](std::string& detail) {
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b)
        for (std::size_t c = 0; c < m; ++c) {
          Vec lhs = plain.curv(plain.conn_transversal(), wb[a], wb[b], j * wb[c]);
          Vec r = plain.curv(plain.conn_tangent(), wb[a], wb[b], wb[c]);
          Vec rhs = j * r + j * (plain.cov_h2(wb[a], wb[b], wb[c]) - plain.cov_h2(wb[b], wb[a], wb[c])) -
                    j * (shape2(plain, data.h2[b][c], wb[a]) - shape2(plain, data.h2[a][c], wb[b]));
          if (lhs != rhs) {
            detail = tuple_tag({a, b, c});
            return false;
          }
        }
    return true;
  });

  check_all(ledger, "curvature: transversal in screen directions", [&](std::string& detail) {
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b)
        for (std::size_t al = 0; al < p; ++al) {
          Vec w = pb[al];
          Vec jw = j * w;
          Vec lhs = plain.curv(plain.conn_transversal(), wb[a], wb[b], w);
          Vec r2 = plain.curv(plain.conn_perp(), wb[a], wb[b], w);
          Vec rhs = r2 + j * (plain.cov_shape(wb[a], jw, wb[b]) - plain.cov_shape(wb[b], jw, wb[a])) -
                    j * (plain.h2(wb[b], shape2(plain, jw, wb[a])) -
                         plain.h2(wb[a], shape2(plain, jw, wb[b])));
          if (lhs != rhs) {
            detail = tuple_tag({a, b, al});
            return false;
          }
        }
    return true;
  });

  check_all(ledger, "curvature: intertwining chain (J-tangent)", [&](std::string& detail) {
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b)
        for (std::size_t c = 0; c < m; ++c) {
          Vec r = plain.curv(plain.conn_tangent(), wb[a], wb[b], wb[c]);
          Vec rt = tilde.curv(tilde.conn_tangent(), wb[a], wb[b], wb[c]);
          Vec r1 = plain.curv(plain.conn_jtm(), wb[a], wb[b], j * wb[c]);
          Vec rl = tilde.curv(tilde.conn_jtm(), wb[a], wb[b], j * wb[c]);
          if (j * r != r1 || r1 != rl || rl != j * rt) {
            detail = tuple_tag({a, b, c});
            return false;
          }
        }
    return true;
  });

  check_all(ledger, "curvature: intertwining chain (screen)", [&](std::string& detail) {
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b)
        for (std::size_t al = 0; al < p; ++al) {
          Vec w = pb[al];
          Vec r2 = plain.curv(plain.conn_perp(), wb[a], wb[b], w);
          Vec r2j = plain.curv(plain.conn_perp(), wb[a], wb[b], j * w);
          Vec rs = tilde.curv(tilde.conn_perp(), wb[a], wb[b], j * w);
          Vec rsw = tilde.curv(tilde.conn_perp(), wb[a], wb[b], w);
          if (j * r2 != r2j || r2j != rs || rs != j * rsw) {
            detail = tuple_tag({a, b, al});
            return false;
          }
        }
    return true;
  });

  check_all(ledger, "curvature: Kaehler tensor", [&](std::string& detail) {
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b)
        for (std::size_t c = 0; c < m; ++c)
          for (std::size_t u = 0; u < m; ++u) {
            Vec rjz = amb_r(MetricKind::g, wb[a], wb[b], j * wb[c]);
            Vec r = amb_r(MetricKind::g, wb[a], wb[b], wb[c]);
            if (g.eval(rjz, j * wb[u]) != -g.eval(r, wb[u])) {
              detail = tuple_tag({a, b, c, u});
              return false;
            }
          }
    return true;
  });

  check_all(ledger, "curvature: associated tensor shift", [&](std::string& detail) {
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b)
        for (std::size_t c = 0; c < m; ++c)
          for (std::size_t u = 0; u < m; ++u) {
            Vec rt = amb_r(MetricKind::g_assoc, wb[a], wb[b], wb[c]);
            Vec r = amb_r(MetricKind::g, wb[a], wb[b], wb[c]);
            if (gt.eval(rt, wb[u]) != g.eval(r, j * wb[u])) {
              detail = tuple_tag({a, b, c, u});
              return false;
            }
          }
    return true;
  });

  check_all(ledger, "Gauss equation", [&](std::string& detail) {
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b)
        for (std::size_t c = 0; c < m; ++c)
          for (std::size_t u = 0; u < m; ++u) {
            Scalar lhs = g.eval(amb_r(MetricKind::g, wb[a], wb[b], wb[c]), wb[u]);
            Scalar rhs = g.eval(plain.curv(plain.conn_tangent(), wb[a], wb[b], wb[c]), wb[u]) -
                         g.eval(shape2(plain, data.h2[b][c], wb[a]), wb[u]) +
                         g.eval(shape2(plain, data.h2[a][c], wb[b]), wb[u]);
            if (lhs != rhs) {
              detail = tuple_tag({a, b, c, u});
              return false;
            }
          }
    return true;
  });

  check_all(ledger, "Codazzi equation", [&](std::string& detail) {
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b)
        for (std::size_t c = 0; c < m; ++c) {
          auto parts = st.decompose(amb_r(MetricKind::g, wb[a], wb[b], wb[c]));
          Vec lhs = parts.jtm + parts.perp;
          Vec rhs = plain.cov_h2(wb[a], wb[b], wb[c]) - plain.cov_h2(wb[b], wb[a], wb[c]) +
                    j * (shape2(plain, j * data.h2[b][c], wb[a]) -
                         shape2(plain, j * data.h2[a][c], wb[b]));
          if (lhs != rhs) {
            detail = tuple_tag({a, b, c});
            return false;
          }
        }
    return true;
  });

  check_all(ledger, "Ricci equation (tangential)", [&](std::string& detail) {
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b)
        for (std::size_t c = 0; c < m; ++c)
          for (std::size_t u = 0; u < m; ++u) {
            Scalar lhs = g.eval(amb_r(MetricKind::g, wb[a], wb[b], j * wb[c]), j * wb[u]);
            Scalar rhs = -g.eval(amb_r(MetricKind::g, wb[a], wb[b], wb[c]), wb[u]);
            if (lhs != rhs) {
              detail = tuple_tag({a, b, c, u});
              return false;
            }
          }
    return true;
  });

  check_all(ledger, "Ricci equation (mixed)", [&](std::string& detail) {
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b)
        for (std::size_t c = 0; c < m; ++c)
          for (std::size_t al = 0; al < p; ++al) {
            Scalar lhs = g.eval(amb_r(MetricKind::g, wb[a], wb[b], j * wb[c]), pb[al]);
            Scalar rhs = g.eval(plain.cov_h2(wb[a], wb[b], wb[c]) - plain.cov_h2(wb[b], wb[a], wb[c]),
                                j * pb[al]);
            if (lhs != rhs) {
              detail = tuple_tag({a, b, c, al});
              return false;
            }
          }
    return true;
  });

  check_all(ledger, "Ricci equation (screen)", [&](std::string& detail) {
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b)
        for (std::size_t al = 0; al < p; ++al)
          for (std::size_t be = 0; be < p; ++be) {
            Vec w = pb[al], wp = pb[be];
            Scalar lhs = g.eval(amb_r(MetricKind::g, wb[a], wb[b], w), wp);
            Scalar rhs = g.eval(plain.curv(plain.conn_perp(), wb[a], wb[b], w), wp) -
                         g.eval(shape2(plain, j * wp, wb[b]), shape2(plain, j * w, wb[a])) +
                         g.eval(shape2(plain, j * wp, wb[a]), shape2(plain, j * w, wb[b])) +
                         g.eval(shape2(plain, w, wb[a]), shape2(plain, wp, wb[b])) -
                         g.eval(shape2(plain, wp, wb[a]), shape2(plain, w, wb[b]));
            if (lhs != rhs) {
              detail = tuple_tag({a, b, al, be});
              return false;
            }
          }
    return true;
  });

  // Structure equations of the isotropic side, stated against the
  // associated metric with its own ambient curvature.
  auto r04t = [&](const Vec& x, const Vec& y, const Vec& z, const Vec& u) {
    return gt.eval(amb_r(MetricKind::g_assoc, x, y, z), u);
  };
  auto cov_hs = [&](const Vec& x, const Vec& y, const Vec& z) {
    return tilde.nabla2(x, tilde.h2(y, z)) - tilde.h2(tilde.nabla(x, y), z) -
           tilde.h2(y, tilde.nabla(x, z));
  };
  auto cov_shape_t = [&](const Vec& x, const Vec& v, const Vec& y) {
    return tilde.nabla(x, tilde.shape(v, y)) - tilde.shape(tilde.nabla2(x, v), y) -
           tilde.shape(v, tilde.nabla(x, y));
  };

  check_all(ledger, "isotropic structure equation (tangential value)", [&](std::string& detail) {
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b)
        for (std::size_t c = 0; c < m; ++c)
          for (std::size_t i = 0; i < m; ++i) {
            Scalar lhs = r04t(wb[a], wb[b], wb[c], nb[i]);
            Scalar rhs = gt.eval(tilde.curv(tilde.conn_tangent(), wb[a], wb[b], wb[c]), nb[i]) -
                         gt.eval(tilde.shape(data.h_s[b][c], wb[a]), nb[i]) +
                         gt.eval(tilde.shape(data.h_s[a][c], wb[b]), nb[i]);
            if (lhs != rhs) {
              detail = tuple_tag({a, b, c, i});
              return false;
            }
          }
    return true;
  });

  check_all(ledger, "isotropic structure equation (transversal pair)", [&](std::string& detail) {
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b)
        for (std::size_t i2 = 0; i2 < m; ++i2)
          for (std::size_t i = 0; i < m; ++i) {
            Vec jn = j * nb[i];  // back in the tangent bundle
            Scalar lhs = r04t(wb[a], wb[b], nb[i2], nb[i]);
            Scalar rhs = gt.eval(tilde.shape(j * tilde.h2(wb[b], jn), wb[a]), nb[i2]) -
                         gt.eval(tilde.shape(j * tilde.h2(wb[a], jn), wb[b]), nb[i2]);
            if (lhs != rhs) {
              detail = tuple_tag({a, b, i2, i});
              return false;
            }
          }
    return true;
  });

  check_all(ledger, "isotropic structure equation (mixed shape)", [&](std::string& detail) {
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b)
        for (std::size_t al = 0; al < p; ++al)
          for (std::size_t i = 0; i < m; ++i) {
            Scalar lhs = r04t(wb[a], wb[b], pb[al], nb[i]);
            Scalar rhs = gt.eval(cov_shape_t(wb[b], pb[al], wb[a]), nb[i]) -
                         gt.eval(cov_shape_t(wb[a], pb[al], wb[b]), nb[i]);
            if (lhs != rhs) {
              detail = tuple_tag({a, b, al, i});
              return false;
            }
          }
    return true;
  });

  check_all(ledger, "isotropic structure equation (Gauss type)", [&](std::string& detail) {
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b)
        for (std::size_t c = 0; c < m; ++c)
          for (std::size_t u = 0; u < m; ++u) {
            Scalar lhs = r04t(wb[a], wb[b], wb[c], wb[u]);
            Scalar rhs = gt.eval(data.h_s[b][u], data.h_s[a][c]) -
                         gt.eval(data.h_s[a][u], data.h_s[b][c]);
            if (lhs != rhs) {
              detail = tuple_tag({a, b, c, u});
              return false;
            }
          }
    return true;
  });

  check_all(ledger, "isotropic structure equation (screen mixed)", [&](std::string& detail) {
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b)
        for (std::size_t al = 0; al < p; ++al)
          for (std::size_t u = 0; u < m; ++u) {
            Scalar lhs = r04t(wb[a], wb[b], pb[al], wb[u]);
            Scalar rhs = gt.eval(cov_hs(wb[b], wb[a], wb[u]), pb[al]) -
                         gt.eval(cov_hs(wb[a], wb[b], wb[u]), pb[al]);
            if (lhs != rhs) {
              detail = tuple_tag({a, b, al, u});
              return false;
            }
          }
    return true;
  });

  check_all(ledger, "isotropic structure equation (screen pair)", [&](std::string& detail) {
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b)
        for (std::size_t be = 0; be < p; ++be)
          for (std::size_t al = 0; al < p; ++al) {
            Vec w = pb[al], wp = pb[be];
            Scalar lhs = r04t(wb[a], wb[b], wp, w);
            Scalar rhs = gt.eval(tilde.curv(tilde.conn_perp(), wb[a], wb[b], wp), w) -
                         gt.eval(tilde.shape(w, wb[b]), j * tilde.shape(j * wp, wb[a])) +
                         gt.eval(tilde.shape(w, wb[a]), j * tilde.shape(j * wp, wb[b])) -
                         gt.eval(tilde.shape(wp, wb[a]), j * tilde.shape(j * w, wb[b])) +
                         gt.eval(tilde.shape(wp, wb[b]), j * tilde.shape(j * w, wb[a]));
            if (lhs != rhs) {
              detail = tuple_tag({a, b, be, al});
              return false;
            }
          }
    return true;
  });

  check_all(ledger, "isotropic structure equation (duality)", [&](std::string& detail) {
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b)
        for (std::size_t c = 0; c < m; ++c)
          for (std::size_t i = 0; i < m; ++i) {
            Scalar lhs = gt.eval(tilde.curv(tilde.conn_tangent(), wb[a], wb[b], wb[c]), nb[i]);
            Scalar rhs = gt.eval(tilde.curv(tilde.conn_jtm(), wb[a], wb[b], nb[i]), wb[c]);
            if (lhs + rhs != 0) {
              detail = tuple_tag({a, b, c, i});
              return false;
            }
          }
    return true;
  });

  auto flat = [&](const detail::Calculus& c, const std::function<Vec(const Vec&, const Vec&)>& conn,
                  const std::vector<Vec>& sections) {
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b)
        for (const auto& s : sections)
          if (!c.curv(conn, wb[a], wb[b], s).is_zero()) return false;
    return true;
  };
  rep.flat_tangent = flat(plain, plain.conn_tangent(), wb);
  rep.flat_tangent_assoc = flat(tilde, tilde.conn_tangent(), wb);
  rep.flat_jtm = flat(plain, plain.conn_jtm(), nb);
  rep.flat_jtm_assoc = flat(tilde, tilde.conn_jtm(), nb);
  rep.flatness_agree = rep.flat_tangent == rep.flat_tangent_assoc &&
                       rep.flat_tangent == rep.flat_jtm && rep.flat_tangent == rep.flat_jtm_assoc;
  if (!rep.flatness_agree) throw theorem_violation("shared flatness failed");
  return rep;
}

}  // namespace norden

#endif
