#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "whpp/matroid.hpp"
#include "whpp/rational.hpp"

namespace whpp {

/// Matrix over a prime field GF(p), entries reduced mod p.
struct GFMatrix {
  long long p = 2;
  int rows = 0, cols = 0;
  std::vector<long long> entries;  // row-major

  long long at(int r, int c) const { return entries[static_cast<size_t>(r) * cols + c]; }
  long long& at(int r, int c) { return entries[static_cast<size_t>(r) * cols + c]; }
};

/// Dense matrix with exact rational entries.
struct RationalMatrix {
  int rows = 0, cols = 0;
  std::vector<Rational> entries;  // row-major

  const Rational& at(int r, int c) const { return entries[static_cast<size_t>(r) * cols + c]; }
  Rational& at(int r, int c) { return entries[static_cast<size_t>(r) * cols + c]; }
};

Matroid uniform(int r, int n);

/// Cycle matroid of a multigraph: elements are edge indices, bases are the
/// edge sets of maximum spanning forests. Loops and parallel edges allowed.
Matroid graphic(const std::vector<std::pair<int, int>>& edges, int num_vertices = -1);

/// Column matroid: bases are the maximal independent column subsets.
Matroid from_matrix(const GFMatrix& m);
Matroid from_matrix(const RationalMatrix& m);

int gf_rank(const GFMatrix& m);
int rational_rank(const RationalMatrix& m);
Rational rational_det(const RationalMatrix& m);  // square matrices

/// PG(m,q): points of m-dimensional projective space over GF(q), realized as
/// canonical representatives (first nonzero coordinate 1) in lex order.
Matroid projective_geometry(int m, long long q);
/// AG(m,q): the q^m affine points, embedded as columns (1, x).
Matroid affine_geometry(int m, long long q);

/// The representation backing projective_geometry / affine_geometry.
GFMatrix projective_geometry_matrix(int m, long long q);
GFMatrix affine_geometry_matrix(int m, long long q);

/// One named reference matroid with its expected invariants.
struct CatalogEntry {
  std::string name;
  int n = 0;
  long long expected_bases = 0;
  int expected_dim_v = 0;
  std::string construction;  // how the entry is built, for the listing
};

const std::vector<CatalogEntry>& catalog_entries();
bool catalog_has(const std::string& name);
/// Build a named entry. Verifies the (n, |bases|) checksums and throws
/// ChecksumMismatch if construction and expectation ever disagree.
Matroid catalog(const std::string& name);

/// "p rows cols" then row-major entries.
GFMatrix read_gf_matrix(std::istream& in);
/// "Q rows cols" then entries "a" or "a/b".
RationalMatrix read_rational_matrix(std::istream& in);
/// "G num_vertices num_edges" then one "u v" line per edge.
std::pair<std::vector<std::pair<int, int>>, int> read_graph(std::istream& in);

}  // namespace whpp
