#include "whpp/matroid.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <functional>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>
#include <unordered_set>

namespace whpp {

std::vector<int> subset_elements(Subset s) {
  std::vector<int> out;
  while (s) {
    int e = std::countr_zero(s);
    out.push_back(e);
    s &= s - 1;
  }
  return out;
}

Subset subset_of(const std::vector<int>& elems) {
  Subset s = 0;
  for (int e : elems) s |= Subset(1) << e;
  return s;
}

std::string format_subset(Subset s) {
  std::string out = "{";
  bool first = true;
  for (int e : subset_elements(s)) {
    if (!first) out += ",";
    out += std::to_string(e);
    first = false;
  }
  return out + "}";
}

namespace {

void sort_dedup(std::vector<Subset>& v) {
  std::sort(v.begin(), v.end(), subset_lex_less);
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

Matroid Matroid::trusted(int n, int r, std::vector<Subset> bases) {
  sort_dedup(bases);
  return Matroid(n, r, std::move(bases));
}

Matroid Matroid::from_bases(int n, std::vector<Subset> candidate) {
  if (n < 0 || n > 62) throw Error(ErrorCode::InvalidRank, "ground-set size out of range");
  if (candidate.empty()) throw Error(ErrorCode::EmptyBases, "basis family must be non-empty");
  sort_dedup(candidate);
  Subset full = n == 0 ? 0 : (Subset(1) << n) - 1;
  int r = std::popcount(candidate.front());
  for (Subset b : candidate) {
    if ((b & ~full) != 0)
      throw Error(ErrorCode::UnequalCardinality,
                  "basis " + format_subset(b) + " uses elements outside 0.." + std::to_string(n - 1));
    if (std::popcount(b) != r)
      throw Error(ErrorCode::UnequalCardinality,
                  "bases " + format_subset(candidate.front()) + " and " + format_subset(b) +
                      " have different cardinalities");
  }
  std::unordered_set<Subset> set(candidate.begin(), candidate.end());
  for (Subset b1 : candidate) {
    for (Subset b2 : candidate) {
      if (b1 == b2) continue;
      Subset only1 = b1 & ~b2;
      Subset only2 = b2 & ~b1;
      for (Subset rest = only1; rest;) {
        int e = std::countr_zero(rest);
        rest &= rest - 1;
        bool found = false;
        for (Subset cand = only2; cand;) {
          int f = std::countr_zero(cand);
          cand &= cand - 1;
          Subset swapped = (b1 & ~(Subset(1) << e)) | (Subset(1) << f);
          if (set.count(swapped)) {
            found = true;
            break;
          }
        }
        if (!found)
          throw Error(ErrorCode::ExchangeAxiomViolation,
                      "exchange axiom fails for B1=" + format_subset(b1) +
                          ", B2=" + format_subset(b2) + ", e=" + std::to_string(e));
      }
    }
  }
  return Matroid(n, r, std::move(candidate));
}

bool Matroid::is_basis(Subset s) const {
  return std::binary_search(bases_.begin(), bases_.end(), s, subset_lex_less);
}

int Matroid::basis_index(Subset s) const {
  auto it = std::lower_bound(bases_.begin(), bases_.end(), s, subset_lex_less);
  if (it == bases_.end() || *it != s) return -1;
  return static_cast<int>(it - bases_.begin());
}

int Matroid::subset_rank(Subset s) const {
  int best = 0;
  for (Subset b : bases_) best = std::max(best, std::popcount(b & s));
  return best;
}

Subset Matroid::loops() const {
  Subset used = 0;
  for (Subset b : bases_) used |= b;
  return full_set() & ~used;
}

Subset Matroid::coloops() const {
  Subset common = full_set();
  for (Subset b : bases_) common &= b;
  return common;
}

Matroid dual(const Matroid& m) {
  Subset full = m.full_set();
  std::vector<Subset> out;
  out.reserve(m.num_bases());
  for (Subset b : m.bases()) out.push_back(full & ~b);
  return Matroid::trusted(m.ground_size(), m.ground_size() - m.rank(), std::move(out));
}

MinorResult minor(const Matroid& m, Subset del, Subset contract) {
  if ((del & contract) != 0)
    throw Error(ErrorCode::OverlappingSets, "delete and contract sets overlap");
  bool extendable = false;
  for (Subset b : m.bases())
    if ((b & contract) == contract) {
      extendable = true;
      break;
    }
  if (!extendable && contract != 0)
    throw Error(ErrorCode::DependentContraction,
                "contraction set " + format_subset(contract) + " is dependent");

  Subset kept = m.full_set() & ~(del | contract);
  // contract, then restrict to the kept elements at maximum size
  int best = -1;
  std::vector<Subset> out;
  for (Subset b : m.bases()) {
    if ((b & contract) != contract) continue;
    Subset cut = b & kept;
    int sz = std::popcount(cut);
    if (sz > best) {
      best = sz;
      out.clear();
    }
    if (sz == best) out.push_back(cut);
  }

  std::vector<int> old_labels = subset_elements(kept);
  std::vector<int> new_of_old(m.ground_size(), -1);
  for (size_t i = 0; i < old_labels.size(); ++i) new_of_old[old_labels[i]] = static_cast<int>(i);
  for (Subset& b : out) {
    Subset relabeled = 0;
    for (int e : subset_elements(b)) relabeled |= Subset(1) << new_of_old[e];
    b = relabeled;
  }
  Matroid result = Matroid::trusted(static_cast<int>(old_labels.size()), best, std::move(out));
  return MinorResult{std::move(result), std::move(old_labels)};
}

Matroid direct_sum(const Matroid& a, const Matroid& b) {
  std::vector<Subset> out;
  out.reserve(a.num_bases() * b.num_bases());
  for (Subset ba : a.bases())
    for (Subset bb : b.bases()) out.push_back(ba | (bb << a.ground_size()));
  return Matroid::trusted(a.ground_size() + b.ground_size(), a.rank() + b.rank(),
                          std::move(out));
}

bool is_circuit_hyperplane(const Matroid& m, Subset h) {
  if (std::popcount(h) != m.rank()) return false;
  if (m.is_basis(h)) return false;
  if (m.subset_rank(h) != m.rank() - 1) return false;
  Subset outside = m.full_set() & ~h;
  for (int e : subset_elements(outside))
    if (m.subset_rank(h | (Subset(1) << e)) != m.rank()) return false;
  return true;
}

std::vector<Subset> circuit_hyperplanes(const Matroid& m) {
  int n = m.ground_size(), r = m.rank();
  std::vector<Subset> out;
  if (r == 0 || r > n) return out;
  std::vector<int> idx(r);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    Subset h = subset_of(idx);
    if (is_circuit_hyperplane(m, h)) out.push_back(h);
    int i = r - 1;
    while (i >= 0 && idx[i] == n - r + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
  sort_dedup(out);
  return out;
}

Matroid relax(const Matroid& m, Subset h) {
  if (!is_circuit_hyperplane(m, h))
    throw Error(ErrorCode::NotACircuitHyperplane,
                format_subset(h) + " is not a circuit-hyperplane");
  std::vector<Subset> out = m.bases();
  out.push_back(h);
  return Matroid::from_bases(m.ground_size(), std::move(out));
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

ComponentPartition connected_components(const Matroid& m) {
  int n = m.ground_size();
  UnionFind uf(std::max(n, 1));
  const auto& bases = m.bases();
  for (size_t i = 0; i < bases.size(); ++i) {
    for (size_t j = i + 1; j < bases.size(); ++j) {
      Subset diff = bases[i] ^ bases[j];
      if (std::popcount(diff) == 2) {
        auto elems = subset_elements(diff);
        uf.unite(elems[0], elems[1]);
      }
    }
  }
  std::map<int, std::vector<int>> groups;
  for (int e = 0; e < n; ++e) groups[uf.find(e)].push_back(e);
  ComponentPartition part;
  for (auto& [root, elems] : groups) part.blocks.push_back(std::move(elems));
  std::sort(part.blocks.begin(), part.blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  part.z = static_cast<int>(part.blocks.size());
  return part;
}

int dim_W(const Matroid& m) {
  return m.ground_size() - connected_components(m).z + 1;
}

namespace {

/// Per-element invariants for isomorphism pruning: the number of bases
/// through each element and the co-occurrence counts with all others.
struct IsoProfile {
  std::vector<int> degree;
  std::vector<std::vector<int>> cooc;
  std::vector<std::vector<int>> signature;  // degree + sorted co-occurrence multiset

  explicit IsoProfile(const Matroid& m) {
    int n = m.ground_size();
    degree.assign(n, 0);
    cooc.assign(n, std::vector<int>(n, 0));
    for (Subset b : m.bases()) {
      auto elems = subset_elements(b);
      for (size_t i = 0; i < elems.size(); ++i) {
        ++degree[elems[i]];
        for (size_t j = i + 1; j < elems.size(); ++j) {
          ++cooc[elems[i]][elems[j]];
          ++cooc[elems[j]][elems[i]];
        }
      }
    }
    signature.assign(n, {});
    for (int e = 0; e < n; ++e) {
      std::vector<int> sig = cooc[e];
      sig.erase(sig.begin() + e);
      std::sort(sig.begin(), sig.end());
      sig.push_back(degree[e]);
      signature[e] = std::move(sig);
    }
  }
};

struct IsoSearch {
  const Matroid& m;
  const Matroid& n;
  IsoProfile pm;
  IsoProfile pn;
  std::vector<int> order;    // m-elements, most constrained first
  std::vector<int> mapping;  // m-element -> n-element or -1
  std::vector<bool> used;

  IsoSearch(const Matroid& m_, const Matroid& n_) : m(m_), n(n_), pm(m_), pn(n_) {
    int sz = m.ground_size();
    mapping.assign(sz, -1);
    used.assign(sz, false);
    order.resize(sz);
    std::iota(order.begin(), order.end(), 0);
    // rarer signatures first, ties by element index for determinism
    std::map<std::vector<int>, int> freq;
    for (int e = 0; e < sz; ++e) ++freq[pm.signature[e]];
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      int fa = freq[pm.signature[a]], fb = freq[pm.signature[b]];
      if (fa != fb) return fa < fb;
      return a < b;
    });
  }

  /// All r-subsets of the mapped elements containing `last` must keep their
  /// basis/non-basis status under the partial map.
  bool consistent(int depth) {
    int r = m.rank();
    if (depth + 1 < r) return true;
    std::vector<int> mapped(order.begin(), order.begin() + depth + 1);
    int last = order[depth];
    std::vector<int> others;
    for (int e : mapped)
      if (e != last) others.push_back(e);
    int k = r - 1;
    if (k > static_cast<int>(others.size())) return true;
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      Subset sm = Subset(1) << last;
      Subset sn = Subset(1) << mapping[last];
      for (int t = 0; t < k; ++t) {
        sm |= Subset(1) << others[idx[t]];
        sn |= Subset(1) << mapping[others[idx[t]]];
      }
      if (m.is_basis(sm) != n.is_basis(sn)) return false;
      int i = k - 1;
      while (i >= 0 && idx[i] == static_cast<int>(others.size()) - k + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return true;
  }

  bool search(int depth) {
    if (depth == m.ground_size()) return true;
    int e = order[depth];
    for (int f = 0; f < n.ground_size(); ++f) {
      if (used[f]) continue;
      if (pm.signature[e] != pn.signature[f]) continue;
      bool ok = true;
      for (int d = 0; d < depth && ok; ++d) {
        int e2 = order[d];
        if (pm.cooc[e][e2] != pn.cooc[f][mapping[e2]]) ok = false;
      }
      if (!ok) continue;
      mapping[e] = f;
      used[f] = true;
      if (consistent(depth) && search(depth + 1)) return true;
      mapping[e] = -1;
      used[f] = false;
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<int>> is_isomorphic(const Matroid& m, const Matroid& n) {
  if (m.ground_size() != n.ground_size() || m.rank() != n.rank() ||
      m.num_bases() != n.num_bases())
    return std::nullopt;
  if (m.ground_size() == 0) return std::vector<int>{};
  {
    // global invariant screen: multisets of element signatures must agree
    IsoProfile pm(m), pn(n);
    auto sm = pm.signature, sn = pn.signature;
    std::sort(sm.begin(), sm.end());
    std::sort(sn.begin(), sn.end());
    if (sm != sn) return std::nullopt;
  }
  IsoSearch search(m, n);
  if (!search.search(0)) return std::nullopt;
  // full verification: every basis must map onto a basis
  for (Subset b : m.bases()) {
    Subset image = 0;
    for (int e : subset_elements(b)) image |= Subset(1) << search.mapping[e];
    if (!n.is_basis(image)) return std::nullopt;
  }
  return search.mapping;
}

Matroid permuted(const Matroid& m, const std::vector<int>& perm) {
  std::vector<Subset> out;
  out.reserve(m.num_bases());
  for (Subset b : m.bases()) {
    Subset image = 0;
    for (int e : subset_elements(b)) image |= Subset(1) << perm[e];
    out.push_back(image);
  }
  return Matroid::trusted(m.ground_size(), m.rank(), std::move(out));
}

namespace {

/// Enumerate k-subsets of pool (ascending masks in lexicographic element order).
void for_each_subset(const std::vector<int>& pool, int k,
                     const std::function<bool(Subset)>& fn, bool& stop) {
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  int n = static_cast<int>(pool.size());
  if (k > n) return;
  while (!stop) {
    Subset s = 0;
    for (int t : idx) s |= Subset(1) << pool[t];
    if (fn(s)) {
      stop = true;
      return;
    }
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

bool has_minor(const Matroid& m, const Matroid& target) {
  int nm = m.ground_size(), nt = target.ground_size();
  int rm = m.rank(), rt = target.rank();
  if (nt > nm || rt > rm || nm - nt < rm - rt) return false;
  int c = rm - rt;           // contraction size
  int d = nm - nt - c;       // deletion size
  std::vector<int> all(nm);
  std::iota(all.begin(), all.end(), 0);
  bool stop = false;
  bool found = false;
  for_each_subset(all, c, [&](Subset contract) {
    // contraction set must be independent
    bool ok = false;
    for (Subset b : m.bases())
      if ((b & contract) == contract) {
        ok = true;
        break;
      }
    if (!ok) return false;
    std::vector<int> rest = subset_elements(m.full_set() & ~contract);
    bool inner_stop = false;
    for_each_subset(rest, d, [&](Subset del) {
      MinorResult mr = minor(m, del, contract);
      if (mr.matroid.rank() != rt) return false;
      if (mr.matroid.num_bases() != target.num_bases()) return false;
      if (is_isomorphic(mr.matroid, target).has_value()) {
        found = true;
        return true;
      }
      return false;
    }, inner_stop);
    return found;
  }, stop);
  return found;
}

namespace {

const Matroid& reference_u24() {
  static const Matroid u24 = Matroid::trusted(
      4, 2, {0b0011, 0b0101, 0b1001, 0b0110, 0b1010, 0b1100});
  return u24;
}

const Matroid& reference_fano() {
  // points 0..6, lines {0,1,2},{0,3,4},{0,5,6},{1,3,5},{1,4,6},{2,3,6},{2,4,5}
  static const Matroid fano = [] {
    std::vector<Subset> lines = {
        subset_of({0, 1, 2}), subset_of({0, 3, 4}), subset_of({0, 5, 6}),
        subset_of({1, 3, 5}), subset_of({1, 4, 6}), subset_of({2, 3, 6}),
        subset_of({2, 4, 5})};
    std::vector<Subset> bases;
    for (int a = 0; a < 7; ++a)
      for (int b = a + 1; b < 7; ++b)
        for (int c = b + 1; c < 7; ++c) {
          Subset s = subset_of({a, b, c});
          if (std::find(lines.begin(), lines.end(), s) == lines.end()) bases.push_back(s);
        }
    return Matroid::from_bases(7, std::move(bases));
  }();
  return fano;
}

const Matroid& reference_fano_dual() {
  static const Matroid fd = dual(reference_fano());
  return fd;
}

}  // namespace

bool is_binary(const Matroid& m) { return !has_minor(m, reference_u24()); }

bool is_regular(const Matroid& m) {
  if (!is_binary(m)) return false;
  return !has_minor(m, reference_fano()) && !has_minor(m, reference_fano_dual());
}

Matroid read_bases(std::istream& in) {
  std::string line;
  int n = -1, r = -1;
  std::vector<Subset> bases;
  bool header = false;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ss(line);
    if (!header) {
      if (!(ss >> n >> r)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        throw Error(ErrorCode::Parse, "line " + std::to_string(lineno) + ": expected \"n r\" header");
      }
      header = true;
      continue;
    }
    std::vector<int> elems;
    int e;
    while (ss >> e) {
      if (e < 0 || e >= n)
        throw Error(ErrorCode::Parse,
                    "line " + std::to_string(lineno) + ": element " + std::to_string(e) +
                        " outside 0.." + std::to_string(n - 1));
      elems.push_back(e);
    }
    if (elems.empty()) continue;
    if (static_cast<int>(elems.size()) != r)
      throw Error(ErrorCode::Parse, "line " + std::to_string(lineno) + ": basis size differs from header rank");
    bases.push_back(subset_of(elems));
  }
  if (!header) throw Error(ErrorCode::Parse, "missing header line");
  if (r == 0 && bases.empty()) bases.push_back(0);
  return Matroid::from_bases(n, std::move(bases));
}

void write_bases(std::ostream& out, const Matroid& m) {
  out << m.ground_size() << " " << m.rank() << "\n";
  for (Subset b : m.bases()) {
    bool first = true;
    for (int e : subset_elements(b)) {
      if (!first) out << " ";
      out << e;
      first = false;
    }
    out << "\n";
  }
}

}  // namespace whpp
