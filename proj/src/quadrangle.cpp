#include "whpp/quadrangle.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <unordered_set>

namespace whpp {

bool DegenerateQuadrangle::operator<(const DegenerateQuadrangle& o) const {
  if (prefix != o.prefix) return subset_lex_less(prefix, o.prefix);
  if (i != o.i) return i < o.i;
  if (j != o.j) return j < o.j;
  if (k != o.k) return k < o.k;
  return l < o.l;
}

namespace {

/// Parity of the permutation sorting the tuple (sorted(S), a, b).
int tuple_sort_parity(Subset s, int a, int b) {
  int inv = 0;
  for (int e : subset_elements(s)) {
    if (e > a) ++inv;
    if (e > b) ++inv;
  }
  if (a > b) ++inv;
  return inv & 1;
}

}  // namespace

std::vector<DegenerateQuadrangle> enumerate_degenerate_quadrangles(const Matroid& m) {
  std::vector<DegenerateQuadrangle> out;
  if (m.rank() < 2) return out;

  // candidate prefixes: B∖{x,y} over all bases B and pairs {x,y} ⊆ B
  std::unordered_set<Subset> seen;
  std::vector<Subset> prefixes;
  for (Subset b : m.bases()) {
    auto elems = subset_elements(b);
    for (size_t x = 0; x < elems.size(); ++x)
      for (size_t y = x + 1; y < elems.size(); ++y) {
        Subset s = b & ~(Subset(1) << elems[x]) & ~(Subset(1) << elems[y]);
        if (seen.insert(s).second) prefixes.push_back(s);
      }
  }
  std::sort(prefixes.begin(), prefixes.end(), subset_lex_less);

  for (Subset s : prefixes) {
    std::vector<int> rest = subset_elements(m.full_set() & ~s);
    const int t = static_cast<int>(rest.size());
    // exchange graph: adj[a][b] iff S∪{rest[a],rest[b]} is a basis
    std::vector<std::vector<bool>> adj(t, std::vector<bool>(t, false));
    for (int a = 0; a < t; ++a)
      for (int b = a + 1; b < t; ++b) {
        Subset cand = s | (Subset(1) << rest[a]) | (Subset(1) << rest[b]);
        if (m.is_basis(cand)) adj[a][b] = adj[b][a] = true;
      }
    // for each diagonal pair {i,j}: 4-cycles i-k-j-l over common neighbours
    for (int ia = 0; ia < t; ++ia) {
      for (int ja = ia + 1; ja < t; ++ja) {
        std::vector<int> common;
        for (int c = 0; c < t; ++c)
          if (c != ia && c != ja && adj[ia][c] && adj[ja][c]) common.push_back(c);
        for (size_t ka = 0; ka < common.size(); ++ka) {
          for (size_t la = ka + 1; la < common.size(); ++la) {
            int i = rest[ia], j = rest[ja];
            int k = rest[common[ka]], l = rest[common[la]];
            // canonical split: (i,j) lexicographically before (k,l)
            if (std::make_pair(i, j) >= std::make_pair(k, l)) continue;
            // degenerate: at most one of S∪{i,j}, S∪{k,l} is a basis
            if (adj[ia][ja] && adj[common[ka]][common[la]]) continue;
            DegenerateQuadrangle q;
            q.prefix = s;
            q.i = i;
            q.j = j;
            q.k = k;
            q.l = l;
            Subset bit_i = Subset(1) << i, bit_j = Subset(1) << j;
            Subset bit_k = Subset(1) << k, bit_l = Subset(1) << l;
            q.b1 = m.basis_index(s | bit_i | bit_k);
            q.b2 = m.basis_index(s | bit_i | bit_l);
            q.b3 = m.basis_index(s | bit_j | bit_l);
            q.b4 = m.basis_index(s | bit_j | bit_k);
            q.eps = (tuple_sort_parity(s, i, k) + tuple_sort_parity(s, i, l) +
                     tuple_sort_parity(s, j, l) + tuple_sort_parity(s, j, k)) & 1;
            out.push_back(q);
          }
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

IntegerMatrix RelationMatrix::to_integer_matrix() const {
  IntegerMatrix out(static_cast<int>(rows.size()), num_cols);
  for (size_t r = 0; r < rows.size(); ++r)
    for (auto [c, v] : rows[r].entries) out.set(static_cast<int>(r), c, v);
  return out;
}

RelationMatrix relation_matrix(const Matroid& m) {
  RelationMatrix out;
  out.num_cols = static_cast<int>(m.num_bases());
  out.with_epsilon = false;
  for (const DegenerateQuadrangle& q : enumerate_degenerate_quadrangles(m)) {
    RelationMatrix::Row row;
    row.kind = RelationRowKind::Quadrangle;
    row.source = q;
    row.entries = {{q.b1, 1}, {q.b2, -1}, {q.b3, 1}, {q.b4, -1}};
    out.rows.push_back(std::move(row));
  }
  return out;
}

RelationMatrix signed_tutte_relations(const Matroid& m) {
  RelationMatrix out;
  const int eps_col = static_cast<int>(m.num_bases());
  out.num_cols = eps_col + 1;
  out.with_epsilon = true;
  for (const DegenerateQuadrangle& q : enumerate_degenerate_quadrangles(m)) {
    RelationMatrix::Row row;
    row.kind = RelationRowKind::Quadrangle;
    row.source = q;
    row.entries = {{q.b1, 1}, {q.b2, -1}, {q.b3, 1}, {q.b4, -1}};
    if (q.eps) row.entries.emplace_back(eps_col, 1);
    out.rows.push_back(std::move(row));
  }
  RelationMatrix::Row eps_row;
  eps_row.kind = RelationRowKind::EpsilonOrder;
  eps_row.entries = {{eps_col, 2}};
  out.rows.push_back(std::move(eps_row));
  return out;
}

std::string dump_quadrangles(const Matroid& m) {
  std::ostringstream out;
  for (const DegenerateQuadrangle& q : enumerate_degenerate_quadrangles(m)) {
    out << "S=" << format_subset(q.prefix) << " diag={" << q.i << "," << q.j << "}/{" << q.k
        << "," << q.l << "} bases=" << q.b1 << "," << q.b2 << "," << q.b3 << "," << q.b4
        << " eps=" << q.eps << "\n";
  }
  return out.str();
}

}  // namespace whpp
