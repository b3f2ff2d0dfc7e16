#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "whpp/error.hpp"

namespace whpp {

/// Ground-set subsets are bit masks over elements 0..n-1.
using Subset = std::uint64_t;

/// Lexicographic order on equal-size subsets viewed as sorted element
/// sequences: the set owning the smallest differing element comes first.
inline bool subset_lex_less(Subset a, Subset b) {
  if (a == b) return false;
  Subset diff = a ^ b;
  Subset low = diff & (~diff + 1);
  return (a & low) != 0;
}

std::vector<int> subset_elements(Subset s);
Subset subset_of(const std::vector<int>& elems);
std::string format_subset(Subset s);

/// A matroid given by its ground-set size, rank and full list of bases.
/// Bases are stored as bit masks, sorted lexicographically, deduplicated.
/// Instances are immutable; every operation returns a fresh value.
class Matroid {
 public:
  /// Validating constructor: checks cardinalities, range and the basis
  /// exchange axiom. Throws Error with a witnessing triple on violation.
  static Matroid from_bases(int n, std::vector<Subset> candidate_bases);

  /// Unchecked constructor for trusted data (catalog recipes, outputs of
  /// operations whose validity is guaranteed by construction).
  static Matroid trusted(int n, int r, std::vector<Subset> bases);

  int ground_size() const { return n_; }
  int rank() const { return r_; }
  const std::vector<Subset>& bases() const { return bases_; }
  std::size_t num_bases() const { return bases_.size(); }
  Subset full_set() const { return n_ == 64 ? ~Subset(0) : ((Subset(1) << n_) - 1); }

  bool is_basis(Subset s) const;
  /// Index of s in the canonical (lexicographic) basis ordering, or -1.
  int basis_index(Subset s) const;

  /// rank of an arbitrary subset: max |B ∩ s| over all bases.
  int subset_rank(Subset s) const;

  Subset loops() const;    // elements in no basis
  Subset coloops() const;  // elements in every basis

  bool operator==(const Matroid& o) const {
    return n_ == o.n_ && r_ == o.r_ && bases_ == o.bases_;
  }
  bool operator!=(const Matroid& o) const { return !(*this == o); }

 private:
  Matroid(int n, int r, std::vector<Subset> bases)
      : n_(n), r_(r), bases_(std::move(bases)) {}

  int n_ = 0;
  int r_ = 0;
  std::vector<Subset> bases_;
};

/// Partition of the ground set into connected components.
struct ComponentPartition {
  std::vector<std::vector<int>> blocks;  // sorted by smallest element
  int z = 0;                             // number of blocks
};

struct MinorResult {
  Matroid matroid;
  /// old_labels[new_element] = element of the original ground set.
  std::vector<int> old_labels;
};

Matroid dual(const Matroid& m);

/// Deletion/contraction. `contract` must be independent; sets must be disjoint.
MinorResult minor(const Matroid& m, Subset del, Subset contract);

Matroid direct_sum(const Matroid& a, const Matroid& b);

/// Circuit-hyperplane relaxation: H becomes a new basis.
Matroid relax(const Matroid& m, Subset h);

bool is_circuit_hyperplane(const Matroid& m, Subset h);
/// All circuit-hyperplanes in lexicographic order.
std::vector<Subset> circuit_hyperplanes(const Matroid& m);

/// Components via the symmetric-difference criterion: e,f lie together iff
/// some pair of bases differs exactly in {e,f}. Loops and coloops are
/// singleton blocks.
ComponentPartition connected_components(const Matroid& m);

/// n - z + 1, the dimension of the weight space induced by per-element values.
int dim_W(const Matroid& m);

/// Ground-set bijection carrying bases onto bases, if one exists.
/// Backtracking search pruned by per-element invariants (basis degree,
/// co-occurrence profile) and incremental basis-subset consistency.
std::optional<std::vector<int>> is_isomorphic(const Matroid& m, const Matroid& n);

/// Relabel the ground set: element e becomes perm[e].
Matroid permuted(const Matroid& m, const std::vector<int>& perm);

/// True iff some deletion/contraction sequence on m yields a matroid
/// isomorphic to target. Enumerates independent contraction sets and
/// deletion sets in lexicographic order.
bool has_minor(const Matroid& m, const Matroid& target);

bool is_binary(const Matroid& m);   // no U_{2,4} minor
bool is_regular(const Matroid& m);  // binary with neither F_7 nor F_7* minor

/// Text format: line 1 "n r", one basis per line as space-separated
/// elements, '#' starts a comment. Writers emit bases in lexicographic order.
Matroid read_bases(std::istream& in);
void write_bases(std::ostream& out, const Matroid& m);

}  // namespace whpp
