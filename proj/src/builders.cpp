#include "whpp/builders.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <istream>
#include <map>
#include <numeric>
#include <sstream>

namespace whpp {

namespace {

bool is_prime(long long q) {
  if (q < 2) return false;
  for (long long d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

long long mod_pow(long long b, long long e, long long p) {
  long long out = 1;
  b %= p;
  while (e) {
    if (e & 1) out = out * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return out;
}

void for_each_combination(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
  if (k < 0 || k > n) return;
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    fn(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

Matroid uniform(int r, int n) {
  if (r < 0 || r > n) throw Error(ErrorCode::InvalidRank, "uniform matroid needs 0 <= r <= n");
  std::vector<Subset> bases;
  for_each_combination(n, r, [&](const std::vector<int>& idx) { bases.push_back(subset_of(idx)); });
  return Matroid::trusted(n, r, std::move(bases));
}

Matroid graphic(const std::vector<std::pair<int, int>>& edges, int num_vertices) {
  if (edges.empty()) throw Error(ErrorCode::EmptyBases, "graphic matroid needs at least one edge");
  int nv = num_vertices;
  for (auto [u, v] : edges) nv = std::max(nv, std::max(u, v) + 1);
  const int m = static_cast<int>(edges.size());

  struct UF {
    std::vector<int> p;
    explicit UF(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) {
      while (p[x] != x) x = p[x] = p[p[x]];
      return x;
    }
    bool unite(int a, int b) {
      a = find(a);
      b = find(b);
      if (a == b) return false;
      p[a] = b;
      return true;
    }
  };

  UF comp(nv);
  int rank = 0;
  for (auto [u, v] : edges)
    if (u != v && comp.unite(u, v)) ++rank;

  std::vector<Subset> bases;
  for_each_combination(m, rank, [&](const std::vector<int>& idx) {
    UF uf(nv);
    for (int e : idx) {
      auto [u, v] = edges[e];
      if (u == v || !uf.unite(u, v)) return;  // cycle
    }
    bases.push_back(subset_of(idx));
  });
  return Matroid::trusted(m, rank, std::move(bases));
}

int gf_rank(const GFMatrix& m) {
  std::vector<std::vector<long long>> a(m.rows, std::vector<long long>(m.cols));
  for (int r = 0; r < m.rows; ++r)
    for (int c = 0; c < m.cols; ++c) a[r][c] = ((m.at(r, c) % m.p) + m.p) % m.p;
  int rank = 0;
  for (int col = 0; col < m.cols && rank < m.rows; ++col) {
    int pivot = -1;
    for (int i = rank; i < m.rows; ++i)
      if (a[i][col]) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    std::swap(a[rank], a[pivot]);
    long long inv = mod_pow(a[rank][col], m.p - 2, m.p);
    for (int j = col; j < m.cols; ++j) a[rank][j] = a[rank][j] * inv % m.p;
    for (int i = 0; i < m.rows; ++i) {
      if (i == rank || a[i][col] == 0) continue;
      long long f = a[i][col];
      for (int j = col; j < m.cols; ++j)
        a[i][j] = (a[i][j] - f * a[rank][j] % m.p + m.p * m.p) % m.p;
    }
    ++rank;
  }
  return rank;
}

namespace {

GFMatrix gf_select_columns(const GFMatrix& m, const std::vector<int>& cols) {
  GFMatrix out;
  out.p = m.p;
  out.rows = m.rows;
  out.cols = static_cast<int>(cols.size());
  out.entries.resize(static_cast<size_t>(out.rows) * out.cols);
  for (int r = 0; r < out.rows; ++r)
    for (int c = 0; c < out.cols; ++c) out.at(r, c) = m.at(r, cols[c]);
  return out;
}

RationalMatrix rational_select_columns(const RationalMatrix& m, const std::vector<int>& cols) {
  RationalMatrix out;
  out.rows = m.rows;
  out.cols = static_cast<int>(cols.size());
  out.entries.resize(static_cast<size_t>(out.rows) * out.cols);
  for (int r = 0; r < out.rows; ++r)
    for (int c = 0; c < out.cols; ++c) out.at(r, c) = m.at(r, cols[c]);
  return out;
}

}  // namespace

int rational_rank(const RationalMatrix& m) {
  std::vector<std::vector<Rational>> a(m.rows, std::vector<Rational>(m.cols));
  for (int r = 0; r < m.rows; ++r)
    for (int c = 0; c < m.cols; ++c) a[r][c] = m.at(r, c);
  int rank = 0;
  for (int col = 0; col < m.cols && rank < m.rows; ++col) {
    int pivot = -1;
    for (int i = rank; i < m.rows; ++i)
      if (!a[i][col].is_zero()) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    std::swap(a[rank], a[pivot]);
    for (int i = rank + 1; i < m.rows; ++i) {
      if (a[i][col].is_zero()) continue;
      Rational f = a[i][col] / a[rank][col];
      for (int j = col; j < m.cols; ++j) a[i][j] -= f * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

Rational rational_det(const RationalMatrix& m) {
  if (m.rows != m.cols) throw Error(ErrorCode::InvalidRank, "determinant needs a square matrix");
  std::vector<std::vector<Rational>> a(m.rows, std::vector<Rational>(m.cols));
  for (int r = 0; r < m.rows; ++r)
    for (int c = 0; c < m.cols; ++c) a[r][c] = m.at(r, c);
  Rational det(1);
  for (int col = 0; col < m.cols; ++col) {
    int pivot = -1;
    for (int i = col; i < m.rows; ++i)
      if (!a[i][col].is_zero()) {
        pivot = i;
        break;
      }
    if (pivot < 0) return Rational(0);
    if (pivot != col) {
      std::swap(a[col], a[pivot]);
      det = -det;
    }
    det *= a[col][col];
    for (int i = col + 1; i < m.rows; ++i) {
      if (a[i][col].is_zero()) continue;
      Rational f = a[i][col] / a[col][col];
      for (int j = col; j < m.cols; ++j) a[i][j] -= f * a[col][j];
    }
  }
  return det;
}

Matroid from_matrix(const GFMatrix& m) {
  if (m.cols < 1) throw Error(ErrorCode::InvalidRank, "column matroid needs at least one column");
  if (!is_prime(m.p)) throw Error(ErrorCode::UnsupportedFieldOrder, "modulus must be prime");
  int rank = gf_rank(m);
  std::vector<Subset> bases;
  for_each_combination(m.cols, rank, [&](const std::vector<int>& idx) {
    if (gf_rank(gf_select_columns(m, idx)) == rank) bases.push_back(subset_of(idx));
  });
  return Matroid::trusted(m.cols, rank, std::move(bases));
}

Matroid from_matrix(const RationalMatrix& m) {
  if (m.cols < 1) throw Error(ErrorCode::InvalidRank, "column matroid needs at least one column");
  int rank = rational_rank(m);
  std::vector<Subset> bases;
  for_each_combination(m.cols, rank, [&](const std::vector<int>& idx) {
    if (rational_rank(rational_select_columns(m, idx)) == rank) bases.push_back(subset_of(idx));
  });
  return Matroid::trusted(m.cols, rank, std::move(bases));
}

GFMatrix projective_geometry_matrix(int m, long long q) {
  if (m < 1) throw Error(ErrorCode::InvalidRank, "projective geometry needs m >= 1");
  if (!is_prime(q)) throw Error(ErrorCode::UnsupportedFieldOrder, "field order must be prime");
  const int dim = m + 1;
  // canonical representatives: first nonzero coordinate 1, lexicographic order
  std::vector<std::vector<long long>> points;
  std::vector<long long> vec(dim, 0);
  std::function<void(int)> gen = [&](int pos) {
    if (pos == dim) {
      auto first = std::find_if(vec.begin(), vec.end(), [](long long v) { return v != 0; });
      if (first != vec.end() && *first == 1) points.push_back(vec);
      return;
    }
    for (long long v = 0; v < q; ++v) {
      vec[pos] = v;
      gen(pos + 1);
    }
    vec[pos] = 0;
  };
  gen(0);
  GFMatrix out;
  out.p = q;
  out.rows = dim;
  out.cols = static_cast<int>(points.size());
  out.entries.resize(static_cast<size_t>(out.rows) * out.cols);
  for (int c = 0; c < out.cols; ++c)
    for (int r = 0; r < dim; ++r) out.at(r, c) = points[c][r];
  return out;
}

GFMatrix affine_geometry_matrix(int m, long long q) {
  if (m < 1) throw Error(ErrorCode::InvalidRank, "affine geometry needs m >= 1");
  if (!is_prime(q)) throw Error(ErrorCode::UnsupportedFieldOrder, "field order must be prime");
  const int dim = m + 1;
  std::vector<std::vector<long long>> points;
  std::vector<long long> vec(m, 0);
  std::function<void(int)> gen = [&](int pos) {
    if (pos == m) {
      points.push_back(vec);
      return;
    }
    for (long long v = 0; v < q; ++v) {
      vec[pos] = v;
      gen(pos + 1);
    }
    vec[pos] = 0;
  };
  gen(0);
  GFMatrix out;
  out.p = q;
  out.rows = dim;
  out.cols = static_cast<int>(points.size());
  out.entries.resize(static_cast<size_t>(out.rows) * out.cols);
  for (int c = 0; c < out.cols; ++c) {
    out.at(0, c) = 1;
    for (int r = 0; r < m; ++r) out.at(r + 1, c) = points[c][r];
  }
  return out;
}

Matroid projective_geometry(int m, long long q) { return from_matrix(projective_geometry_matrix(m, q)); }

Matroid affine_geometry(int m, long long q) { return from_matrix(affine_geometry_matrix(m, q)); }

namespace {

/// All r-subsets except the listed non-bases; the non-basis family must leave
/// a valid matroid (checked through from_bases).
Matroid paving_from_nonbases(int n, int r, std::vector<Subset> nonbases) {
  std::sort(nonbases.begin(), nonbases.end());
  std::vector<Subset> bases;
  for_each_combination(n, r, [&](const std::vector<int>& idx) {
    Subset s = subset_of(idx);
    if (!std::binary_search(nonbases.begin(), nonbases.end(), s)) bases.push_back(s);
  });
  return Matroid::from_bases(n, std::move(bases));
}

/// Add a freely placed element: every independent (r-1)-set extends by it.
Matroid free_extension(const Matroid& m) {
  const int n = m.ground_size();
  std::vector<Subset> bases = m.bases();
  std::vector<Subset> hyps;
  for (Subset b : m.bases())
    for (int e : subset_elements(b)) hyps.push_back(b & ~(Subset(1) << e));
  std::sort(hyps.begin(), hyps.end());
  hyps.erase(std::unique(hyps.begin(), hyps.end()), hyps.end());
  for (Subset h : hyps) bases.push_back(h | (Subset(1) << n));
  return Matroid::from_bases(n + 1, std::move(bases));
}

/// Relax k circuit-hyperplanes, always the lexicographically first remaining.
Matroid relax_lex(Matroid m, int k) {
  for (int i = 0; i < k; ++i) {
    auto chs = circuit_hyperplanes(m);
    if (chs.empty())
      throw Error(ErrorCode::NotACircuitHyperplane, "no circuit-hyperplane left to relax");
    m = relax(m, chs.front());
  }
  return m;
}

GFMatrix gf_identity_block(long long p, const std::vector<std::vector<long long>>& right) {
  const int r = static_cast<int>(right.size());
  const int extra = static_cast<int>(right[0].size());
  GFMatrix out;
  out.p = p;
  out.rows = r;
  out.cols = r + extra;
  out.entries.assign(static_cast<size_t>(out.rows) * out.cols, 0);
  for (int i = 0; i < r; ++i) out.at(i, i) = 1;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < extra; ++j) out.at(i, r + j) = ((right[i][j] % p) + p) % p;
  return out;
}

RationalMatrix rational_identity_block(const std::vector<std::vector<long long>>& right) {
  const int r = static_cast<int>(right.size());
  const int extra = static_cast<int>(right[0].size());
  RationalMatrix out;
  out.rows = r;
  out.cols = r + extra;
  out.entries.assign(static_cast<size_t>(out.rows) * out.cols, Rational(0));
  for (int i = 0; i < r; ++i) out.at(i, i) = Rational(1);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < extra; ++j) out.at(i, r + j) = Rational(right[i][j]);
  return out;
}

const std::vector<std::pair<int, int>> kK4Edges = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};

Matroid build_m_k4() { return graphic(kK4Edges); }

Matroid build_whirl3() { return relax_lex(build_m_k4(), 1); }

Matroid build_fano() { return projective_geometry(2, 2); }

Matroid build_s8() {
  // binary 4-spike with tip, one leg element removed
  return from_matrix(gf_identity_block(2, {{1, 0, 1, 1},
                                           {1, 1, 0, 1},
                                           {1, 1, 1, 0},
                                           {1, 1, 1, 1}}));
}

Matroid build_t8() {
  return from_matrix(gf_identity_block(3, {{0, 1, 1, 1},
                                           {1, 0, 1, 1},
                                           {1, 1, 0, 1},
                                           {1, 1, 1, 0}}));
}

Matroid build_r8() {
  return from_matrix(rational_identity_block({{-1, 1, 1, 1},
                                              {1, -1, 1, 1},
                                              {1, 1, -1, 1},
                                              {1, 1, 1, -1}}));
}

/// Two relaxations of AG(3,2) at a pair of intersecting planes.
Matroid build_f8() {
  Matroid ag = affine_geometry(3, 2);
  auto chs = circuit_hyperplanes(ag);
  Matroid once = relax(ag, chs.front());
  for (Subset h : circuit_hyperplanes(once)) {
    if (std::popcount(h & chs.front()) == 2) return relax(once, h);
  }
  throw Error(ErrorCode::NotACircuitHyperplane, "no intersecting plane available");
}

/// Three relaxations of AG(3,2): an intersecting pair plus the complement of
/// the first.
Matroid build_q8() {
  Matroid ag = affine_geometry(3, 2);
  auto chs = circuit_hyperplanes(ag);
  Subset first = chs.front();
  Matroid m = relax(ag, first);
  for (Subset h : circuit_hyperplanes(m)) {
    if (std::popcount(h & first) == 2) {
      m = relax(m, h);
      break;
    }
  }
  Subset comp = m.full_set() & ~first;
  return relax(m, comp);
}

/// Vertices of the cube; non-bases are the six faces and the two inscribed
/// tetrahedra. Vertex v has coordinates (bit0, bit1, bit2).
Matroid build_l8() {
  std::vector<Subset> nonbases;
  for (int axis = 0; axis < 3; ++axis)
    for (int side = 0; side < 2; ++side) {
      std::vector<int> face;
      for (int v = 0; v < 8; ++v)
        if (((v >> axis) & 1) == side) face.push_back(v);
      nonbases.push_back(subset_of(face));
    }
  std::vector<int> even, odd;
  for (int v = 0; v < 8; ++v)
    (std::popcount(static_cast<unsigned>(v)) % 2 == 0 ? even : odd).push_back(v);
  nonbases.push_back(subset_of(even));
  nonbases.push_back(subset_of(odd));
  return paving_from_nonbases(8, 4, std::move(nonbases));
}

/// Rank-4 paving matroid on the four legs {0,1},{2,3},{4,5},{6,7}: the five
/// leg-plane unions other than {4,5,6,7} plus two disjoint transversals.
Matroid build_v8() {
  std::vector<Subset> nonbases = {
      subset_of({0, 1, 2, 3}), subset_of({0, 1, 4, 5}), subset_of({0, 1, 6, 7}),
      subset_of({2, 3, 4, 5}), subset_of({2, 3, 6, 7}), subset_of({0, 2, 4, 6}),
      subset_of({1, 3, 5, 7})};
  return paving_from_nonbases(8, 4, std::move(nonbases));
}

/// Rank-3 matroid with four 3-point lines arranged in a cycle on 8 points.
Matroid build_w4() {
  std::vector<Subset> nonbases = {subset_of({0, 1, 2}), subset_of({2, 3, 4}),
                                  subset_of({4, 5, 6}), subset_of({6, 7, 0})};
  return paving_from_nonbases(8, 3, std::move(nonbases));
}

/// PG(2,3) restricted to nine points: a full line minus one point is removed
/// together with one additional point off that line.
Matroid build_r9() {
  GFMatrix pg = projective_geometry_matrix(2, 3);
  // remove (0,0,1), (0,1,0), (1,0,0), (1,1,0): three of them lie on {z = 0}
  std::vector<std::vector<long long>> removed = {{0, 0, 1}, {0, 1, 0}, {1, 0, 0}, {1, 1, 0}};
  std::vector<int> keep;
  for (int c = 0; c < pg.cols; ++c) {
    std::vector<long long> col = {pg.at(0, c), pg.at(1, c), pg.at(2, c)};
    if (std::find(removed.begin(), removed.end(), col) == removed.end()) keep.push_back(c);
  }
  return from_matrix(gf_select_columns(pg, keep));
}

Matroid build_pappus(bool with_conclusion_line) {
  std::vector<Subset> lines = {
      subset_of({0, 1, 2}), subset_of({3, 4, 5}), subset_of({0, 4, 6}),
      subset_of({1, 3, 6}), subset_of({0, 5, 7}), subset_of({2, 3, 7}),
      subset_of({1, 5, 8}), subset_of({2, 4, 8})};
  if (with_conclusion_line) lines.push_back(subset_of({6, 7, 8}));
  return paving_from_nonbases(9, 3, std::move(lines));
}

Matroid build_non_desargues() {
  std::vector<Subset> lines = {
      subset_of({0, 1, 4}), subset_of({0, 2, 5}), subset_of({0, 3, 6}),
      subset_of({1, 2, 7}), subset_of({4, 5, 7}), subset_of({1, 3, 8}),
      subset_of({4, 6, 8}), subset_of({2, 3, 9}), subset_of({5, 6, 9})};
  return paving_from_nonbases(10, 3, std::move(lines));
}

struct CatalogDef {
  CatalogEntry meta;
  std::function<Matroid()> build;
};

const std::vector<CatalogDef>& catalog_defs() {
  static const std::vector<CatalogDef> defs = [] {
    std::vector<CatalogDef> d;
    auto add = [&](const std::string& name, int n, long long b, int dimv,
                   const std::string& how, std::function<Matroid()> fn) {
      d.push_back({CatalogEntry{name, n, b, dimv, how}, std::move(fn)});
    };
    add("M(K4)", 6, 16, 6, "cycle matroid of K4", build_m_k4);
    add("W^3", 6, 17, 8, "rank-3 whirl: M(K4) with one triangle relaxed",
        [] { return build_whirl3(); });
    add("F7", 7, 28, 7, "Fano plane PG(2,2)", build_fano);
    add("F7^-", 7, 29, 8, "Fano with 1 line relaxed", [] { return relax_lex(build_fano(), 1); });
    add("F7^{--}", 7, 30, 10, "Fano with 2 lines relaxed", [] { return relax_lex(build_fano(), 2); });
    add("F7^{-3}", 7, 31, 13, "Fano with 3 lines relaxed", [] { return relax_lex(build_fano(), 3); });
    add("F7^{-4}", 7, 32, 17, "Fano with 4 lines relaxed", [] { return relax_lex(build_fano(), 4); });
    add("F7^{-5}", 7, 33, 22, "Fano with 5 lines relaxed", [] { return relax_lex(build_fano(), 5); });
    add("F7^{-6}", 7, 34, 28, "Fano with 6 lines relaxed", [] { return relax_lex(build_fano(), 6); });
    add("U_{3,7}", 7, 35, 35, "uniform U(3,7)", [] { return uniform(3, 7); });
    add("M(K4)+e", 7, 31, 13, "free extension of M(K4)",
        [] { return free_extension(build_m_k4()); });
    add("W^3+e", 7, 32, 17, "free extension of the rank-3 whirl",
        [] { return free_extension(build_whirl3()); });
    add("V8", 8, 63, 18, "rank-4 paving matroid: five leg planes plus two transversals",
        build_v8);
    add("W^4", 8, 52, 24, "rank-3 matroid with four 3-point lines in a cycle", build_w4);
    add("S8", 8, 48, 8, "binary 4-spike with tip, one leg element deleted", build_s8);
    add("T8", 8, 59, 8, "GF(3) representation [I4 | J-I]", build_t8);
    add("AG(3,2)", 8, 56, 8, "binary affine space AG(3,2)", [] { return affine_geometry(3, 2); });
    add("AG(3,2)'", 8, 57, 9, "AG(3,2) with one plane relaxed",
        [] { return relax_lex(affine_geometry(3, 2), 1); });
    add("R8", 8, 58, 10, "real affine cube, [I4 | J-2I] over the rationals", build_r8);
    add("F8", 8, 58, 10, "AG(3,2) with two intersecting planes relaxed", build_f8);
    add("Q8", 8, 59, 11, "AG(3,2) with three planes relaxed", build_q8);
    add("L8", 8, 62, 17, "cube with both inscribed tetrahedra as non-bases", build_l8);
    add("AG(2,3)", 9, 72, 9, "ternary affine plane AG(2,3)", [] { return affine_geometry(2, 3); });
    add("R9", 9, 69, 9, "PG(2,3) minus four points, three of them collinear", build_r9);
    add("Pappus", 9, 75, 16, "Pappus configuration (nine 3-point lines)",
        [] { return build_pappus(true); });
    add("non-Pappus", 9, 76, 17, "Pappus configuration without the conclusion line",
        [] { return build_pappus(false); });
    add("non-Desargues", 10, 111, 27, "Desargues configuration without the axis line",
        build_non_desargues);
    add("PG(2,3)", 13, 234, 13, "ternary projective plane PG(2,3)",
        [] { return projective_geometry(2, 3); });
    return d;
  }();
  return defs;
}

std::string canonical_name(const std::string& name) {
  static const std::map<std::string, std::string> aliases = {
      {"F7-", "F7^-"},     {"F7--", "F7^{--}"}, {"F7-2", "F7^{--}"}, {"F7-3", "F7^{-3}"},
      {"F7-4", "F7^{-4}"}, {"F7-5", "F7^{-5}"}, {"F7-6", "F7^{-6}"}, {"U37", "U_{3,7}"},
      {"W3", "W^3"},       {"W4", "W^4"},       {"W3+e", "W^3+e"},   {"nP", "non-Pappus"},
  };
  auto it = aliases.find(name);
  return it == aliases.end() ? name : it->second;
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> out;
    for (const auto& def : catalog_defs()) out.push_back(def.meta);
    return out;
  }();
  return entries;
}

bool catalog_has(const std::string& name) {
  std::string key = canonical_name(name);
  for (const auto& def : catalog_defs())
    if (def.meta.name == key) return true;
  return false;
}

Matroid catalog(const std::string& name) {
  std::string key = canonical_name(name);
  for (const auto& def : catalog_defs()) {
    if (def.meta.name != key) continue;
    Matroid m = def.build();
    // construction must reproduce the catalog checksums exactly
    Matroid validated = Matroid::from_bases(m.ground_size(), m.bases());
    if (validated.ground_size() != def.meta.n ||
        static_cast<long long>(validated.num_bases()) != def.meta.expected_bases)
      throw Error(ErrorCode::ChecksumMismatch,
                  key + ": built (n=" + std::to_string(validated.ground_size()) +
                      ", |B|=" + std::to_string(validated.num_bases()) + "), expected (n=" +
                      std::to_string(def.meta.n) + ", |B|=" +
                      std::to_string(def.meta.expected_bases) + ")");
    return validated;
  }
  throw Error(ErrorCode::UnknownName, "unknown catalog name: " + name);
}

GFMatrix read_gf_matrix(std::istream& in) {
  GFMatrix out;
  if (!(in >> out.p >> out.rows >> out.cols))
    throw Error(ErrorCode::Parse, "expected \"p rows cols\" header");
  if (!is_prime(out.p)) throw Error(ErrorCode::UnsupportedFieldOrder, "modulus must be prime");
  out.entries.resize(static_cast<size_t>(out.rows) * out.cols);
  for (auto& e : out.entries) {
    if (!(in >> e)) throw Error(ErrorCode::Parse, "matrix entries truncated");
    e = ((e % out.p) + out.p) % out.p;
  }
  return out;
}

RationalMatrix read_rational_matrix(std::istream& in) {
  std::string tag;
  RationalMatrix out;
  if (!(in >> tag >> out.rows >> out.cols) || tag != "Q")
    throw Error(ErrorCode::Parse, "expected \"Q rows cols\" header");
  out.entries.resize(static_cast<size_t>(out.rows) * out.cols);
  for (auto& e : out.entries) {
    std::string token;
    if (!(in >> token)) throw Error(ErrorCode::Parse, "matrix entries truncated");
    try {
      e = Rational::from_string(token);
    } catch (const std::exception&) {
      throw Error(ErrorCode::Parse, "bad rational entry: " + token);
    }
  }
  return out;
}

std::pair<std::vector<std::pair<int, int>>, int> read_graph(std::istream& in) {
  std::string tag;
  int nv = 0, ne = 0;
  if (!(in >> tag >> nv >> ne) || tag != "G")
    throw Error(ErrorCode::Parse, "expected \"G num_vertices num_edges\" header");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < ne; ++i) {
    int u, v;
    if (!(in >> u >> v)) throw Error(ErrorCode::Parse, "edge list truncated");
    if (u < 0 || v < 0 || u >= nv || v >= nv)
      throw Error(ErrorCode::Parse, "edge endpoint outside 0.." + std::to_string(nv - 1));
    edges.emplace_back(u, v);
  }
  return {edges, nv};
}

}  // namespace whpp
