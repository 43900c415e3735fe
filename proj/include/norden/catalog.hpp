#ifndef NORDEN_CATALOG_HPP
#define NORDEN_CATALOG_HPP

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "norden/lie_ambient.hpp"
#include "norden/prng.hpp"
#include "norden/subspace.hpp"

namespace norden {

struct CatalogEntry {
  std::string name;
  LieAlgebraAmbient ambient;
  std::map<std::string, Subspace> subspaces;
};

namespace detail {

/// 2x2 matrices over Q(i), just enough to commute basis elements.
struct C2x2 {
  std::array<Scalar, 4> re{Scalar(0), Scalar(0), Scalar(0), Scalar(0)};
  std::array<Scalar, 4> im{Scalar(0), Scalar(0), Scalar(0), Scalar(0)};
};

inline C2x2 cmul(const C2x2& a, const C2x2& b) {
  C2x2 c;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) {
        int ij = 2 * i + j, ik = 2 * i + k, kj = 2 * k + j;
        c.re[ij] += a.re[ik] * b.re[kj] - a.im[ik] * b.im[kj];
        c.im[ij] += a.re[ik] * b.im[kj] + a.im[ik] * b.re[kj];
      }
  return c;
}

inline C2x2 csub(const C2x2& a, const C2x2& b) {
  C2x2 c;
  for (int t = 0; t < 4; ++t) {
    c.re[t] = a.re[t] - b.re[t];
    c.im[t] = a.im[t] - b.im[t];
  }
  return c;
}

inline std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

/// Canonical fingerprint of a structure constant table: "i,j,k=v;" for i < j
/// over the non-zero entries, hashed with FNV-1a.
inline std::uint64_t structure_fingerprint(const std::vector<std::vector<Vec>>& c) {
  std::string s;
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = i + 1; j < c.size(); ++j)
      for (std::size_t k = 0; k < c.size(); ++k)
        if (c[i][j][k] != 0)
          s += std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + "=" +
               to_string(c[i][j][k]) + ";";
  return fnv1a(s);
}

/// Structure constants of a matrix Lie algebra from commutators: `basis`
/// gives the matrices, `coords` maps a matrix back to basis coordinates.
template <typename Basis, typename Coords>
std::vector<std::vector<Vec>> commutator_table(const Basis& basis, Coords coords) {
  std::size_t n = basis.size();
  std::vector<std::vector<Vec>> c(n, std::vector<Vec>(n, Vec(n)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      c[i][j] = coords(csub(cmul(basis[i], basis[j]), cmul(basis[j], basis[i])));
  return c;
}

inline C2x2 unit_matrix(int pos, bool imaginary) {
  C2x2 m;
  if (imaginary)
    m.im[pos] = 1;
  else
    m.re[pos] = 1;
  return m;
}

}  // namespace detail

/// dim 4: the real 2x2 matrix algebra with basis the matrix units, the
/// complex structure X1 -> X4, X2 -> X3, X3 -> -X2, X4 -> -X1 and the
/// diagonal metric (-1, +1, -1, +1). Named subspace: sl2r (traceless part).
/// dim 8: the realified complex 2x2 algebra, basis E11, iE11, E12, iE12,
/// E21, iE21, E22, iE22 with J = multiplication by i and the diagonal
/// metric (-1, +1, +1, -1, +1, -1, -1, +1). Named subspaces: u2, su2 (skew
/// Hermitian and traceless skew Hermitian parts) and the holomorphic plane
/// xi4_plane normal to su2.
inline CatalogEntry load_builtin(const std::string& name) {
  using detail::unit_matrix;
  if (name == "gl2r") {
    std::vector<detail::C2x2> basis;
    for (int pos = 0; pos < 4; ++pos) basis.push_back(unit_matrix(pos, false));
    auto coords = [](const detail::C2x2& m) {
      Vec v(4);
      for (int t = 0; t < 4; ++t) {
        if (m.im[t] != 0) throw internal_error("non-real commutator in a real algebra");
        v[t] = m.re[t];
      }
      return v;
    };
    auto c = detail::commutator_table(basis, coords);
    if (detail::structure_fingerprint(c) != 0x5f57c55842ca8239ULL)
      throw internal_error("gl2r structure constants changed");
    Mat j(4, 4);
    j(3, 0) = 1;   // X1 -> X4
    j(2, 1) = 1;   // X2 -> X3
    j(1, 2) = -1;  // X3 -> -X2
    j(0, 3) = -1;  // X4 -> -X1
    Mat g(4, 4);
    g(0, 0) = -1;
    g(1, 1) = 1;
    g(2, 2) = -1;
    g(3, 3) = 1;
    NordenPair pair = NordenPair::validate(ComplexStructure(j), BilinearForm(g));
    CatalogEntry entry{name, LieAlgebraAmbient(std::move(c), std::move(pair)), {}};
    entry.subspaces.emplace(
        "sl2r", Subspace::span(4, {Vec{Scalar(1), Scalar(0), Scalar(0), Scalar(-1)},
                                   Vec::unit(4, 1), Vec::unit(4, 2)}));
    return entry;
  }
  if (name == "gl2c") {
    std::vector<detail::C2x2> basis;
    for (int pos = 0; pos < 4; ++pos) {
      basis.push_back(unit_matrix(pos, false));
      basis.push_back(unit_matrix(pos, true));
    }
    auto coords = [](const detail::C2x2& m) {
      Vec v(8);
      for (int t = 0; t < 4; ++t) {
        v[2 * t] = m.re[t];
        v[2 * t + 1] = m.im[t];
      }
      return v;
    };
    auto c = detail::commutator_table(basis, coords);
    if (detail::structure_fingerprint(c) != 0xc2e7814e8ef625f7ULL)
      throw internal_error("gl2c structure constants changed");
    Mat j(8, 8);
    for (int k = 0; k < 4; ++k) {
      j(2 * k + 1, 2 * k) = 1;
      j(2 * k, 2 * k + 1) = -1;
    }
    Mat g(8, 8);
    const int plus[4] = {1, 2, 4, 7};  // positions of +1 (X2, X3, X5, X8)
    for (int t = 0; t < 8; ++t) g(t, t) = -1;
    for (int p : plus) g(p, p) = 1;
    NordenPair pair = NordenPair::validate(ComplexStructure(j), BilinearForm(g));
    CatalogEntry entry{name, LieAlgebraAmbient(std::move(c), std::move(pair)), {}};
    auto unit = [](int i) { return Vec::unit(8, static_cast<std::size_t>(i)); };
    Vec f1 = unit(1);               // X2
    Vec f2 = unit(2) - unit(4);     // X3 - X5
    Vec f3 = unit(3) + unit(5);     // X4 + X6
    Vec f4 = unit(7);               // X8
    Vec xi1 = unit(1) - unit(7);    // X2 - X8
    Vec xi4 = unit(0) + unit(6);    // X1 + X7
    Vec jxi4 = unit(1) + unit(7);   // X2 + X8
    entry.subspaces.emplace("u2", Subspace::span(8, {f1, f2, f3, f4}));
    entry.subspaces.emplace("su2", Subspace::span(8, {xi1, f2, f3}));
    entry.subspaces.emplace("xi4_plane", Subspace::span(8, {xi4, jxi4}));
    return entry;
  }
  throw input_error("unknown catalog entry: '" + name + "'");
}

/// One pseudo-random coefficient in [-bound, bound]. Every fourth vector is
/// drawn sparse with entries in {-1, 0, 1}, which keeps degenerate spans
/// reachable inside small seeded families.
inline std::pair<Vec, SeededGenerator> random_vector(SeededGenerator gen, std::size_t n, bool sparse) {
  Vec v(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (sparse) {
      auto [raw, succ] = gen.below(4);
      gen = succ;
      v[i] = rat(raw == 0 ? -1 : (raw == 3 ? 1 : 0));
    } else {
      auto [raw, succ] = gen.below(2 * static_cast<std::uint64_t>(gen.bound) + 1);
      gen = succ;
      v[i] = rat(static_cast<long>(raw) - gen.bound);
    }
  }
  return {v, gen};
}

/// Deterministic random subspace of the requested dimension; resamples until
/// the generators are independent (bounded, then internal_error).
inline std::pair<Subspace, SeededGenerator> random_subspace(SeededGenerator gen,
                                                            const LieAlgebraAmbient& ambient,
                                                            std::size_t dim) {
  std::size_t n = ambient.dim();
  if (dim == 0 || dim >= n) throw input_error("random subspace dimension out of range");
  for (int attempt = 0; attempt < 64; ++attempt) {
    auto [style, g1] = gen.below(4);
    gen = g1;
    bool sparse = style == 0;
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < dim; ++i) {
      auto [v, g2] = random_vector(gen, n, sparse);
      gen = g2;
      rows.push_back(v);
    }
    Subspace s = Subspace::span(n, rows);
    if (s.dim() == dim) return {s, gen};
  }
  throw internal_error("random subspace: too many dependent samples");
}

/// span{v_1, J v_1, ..., v_k, J v_k}: J-invariant by construction.
inline std::pair<Subspace, SeededGenerator> random_holomorphic_subspace(SeededGenerator gen,
                                                                        const LieAlgebraAmbient& ambient,
                                                                        std::size_t half_dim) {
  std::size_t n = ambient.dim();
  if (half_dim == 0 || 2 * half_dim >= n) throw input_error("holomorphic half-dimension out of range");
  const Mat& j = ambient.pair().j().matrix();
  for (int attempt = 0; attempt < 64; ++attempt) {
    auto [style, g1] = gen.below(4);
    gen = g1;
    bool sparse = style == 0;
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < half_dim; ++i) {
      auto [v, g2] = random_vector(gen, n, sparse);
      gen = g2;
      rows.push_back(v);
      rows.push_back(j * v);
    }
    Subspace s = Subspace::span(n, rows);
    if (s.dim() == 2 * half_dim) return {s, gen};
  }
  throw internal_error("random holomorphic subspace: too many dependent samples");
}

}  // namespace norden

#endif
