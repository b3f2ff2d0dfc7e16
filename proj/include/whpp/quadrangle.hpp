#pragma once

#include <string>
#include <vector>

#include "whpp/linalg.hpp"
#include "whpp/matroid.hpp"

namespace whpp {

/// A degenerate quadrangle: four bases
///   B1 = S∪{i,k}, B2 = S∪{i,l}, B3 = S∪{j,l}, B4 = S∪{j,k}
/// whose two diagonals S∪{i,j} and S∪{k,l} include at most one basis.
/// Canonical form: i < j, k < l, (i,j) < (k,l) lexicographically.
struct DegenerateQuadrangle {
  Subset prefix = 0;   // S, |S| = r-2
  int i = 0, j = 0, k = 0, l = 0;
  int b1 = 0, b2 = 0, b3 = 0, b4 = 0;  // indices into the lexicographic basis order
  int eps = 0;  // sign-tracking parity of the four sorted-tuple reductions

  bool operator==(const DegenerateQuadrangle& o) const {
    return prefix == o.prefix && i == o.i && j == o.j && k == o.k && l == o.l;
  }
  bool operator<(const DegenerateQuadrangle& o) const;
};

/// All degenerate quadrangles, canonical and deduplicated, in a deterministic
/// order (prefix, then diagonals lexicographically). Prefix candidates are
/// obtained as B∖{x,y} over bases B; within each prefix the exchange graph on
/// the remaining elements is scanned for 4-cycles.
std::vector<DegenerateQuadrangle> enumerate_degenerate_quadrangles(const Matroid& m);

enum class RelationRowKind { Quadrangle, EpsilonOrder };

/// Sparse relation system over the basis generators (plus one epsilon column
/// in the signed variant). Rows carry their generating quadrangle.
struct RelationMatrix {
  int num_cols = 0;   // |B|, plus one trailing epsilon column when signed
  bool with_epsilon = false;
  struct Row {
    RelationRowKind kind = RelationRowKind::Quadrangle;
    DegenerateQuadrangle source;                 // valid when kind == Quadrangle
    std::vector<std::pair<int, int>> entries;    // (column, coefficient)
  };
  std::vector<Row> rows;

  IntegerMatrix to_integer_matrix() const;
};

/// One row per degenerate quadrangle: +1 at B1,B3 and -1 at B2,B4.
/// Columns follow the canonical (lexicographic) basis ordering.
RelationMatrix relation_matrix(const Matroid& m);

/// Presentation of the Tutte group on one generator per basis plus epsilon:
/// quadrangle rows gain an epsilon coefficient in {0,1} from tuple-sorting
/// parities, and a final row encodes epsilon^2 = 1.
RelationMatrix signed_tutte_relations(const Matroid& m);

/// Audit dump, one line per quadrangle:
///   "S={...} diag={i,j}/{k,l} bases=b1,b2,b3,b4 eps=0|1"
std::string dump_quadrangles(const Matroid& m);

}  // namespace whpp
