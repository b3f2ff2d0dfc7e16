#include "whpp/analysis.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

namespace whpp {

int dim_V(const Matroid& m) {
  return nullity_rational(relation_matrix(m).to_integer_matrix());
}

AbelianInvariants tutte_invariants(const Matroid& m) {
  return smith_normal_form(signed_tutte_relations(m).to_integer_matrix());
}

int inner_free_rank(const Matroid& m) { return dim_V(m) - dim_W(m); }

std::pair<Matroid, WeightFunction> cauchy_binet_weights(const RationalMatrix& a) {
  if (a.rows == 0 || rational_rank(a) != a.rows)
    throw Error(ErrorCode::RankDeficient, "matrix must have full row rank");
  const int r = a.rows;
  std::vector<Subset> bases;
  std::vector<std::pair<Subset, Rational>> weights;
  std::vector<int> idx(r);
  for (int i = 0; i < r; ++i) idx[i] = i;
  if (r > a.cols) throw Error(ErrorCode::RankDeficient, "more rows than columns");
  while (true) {
    RationalMatrix sq;
    sq.rows = sq.cols = r;
    sq.entries.resize(static_cast<size_t>(r) * r);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) sq.at(i, j) = a.at(i, idx[j]);
    Rational det = rational_det(sq);
    if (!det.is_zero()) {
      Subset b = subset_of(idx);
      bases.push_back(b);
      weights.emplace_back(b, det * det);
    }
    int i = r - 1;
    while (i >= 0 && idx[i] == a.cols - r + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
  Matroid m = Matroid::from_bases(a.cols, bases);
  WeightFunction w;
  w.by_basis.resize(m.num_bases());
  for (auto& [b, val] : weights) w.by_basis[m.basis_index(b)] = std::move(val);
  return {std::move(m), std::move(w)};
}

QuadrangleCheck verify_quadrangle_relations(const Matroid& m, const WeightFunction& w) {
  if (w.by_basis.size() != m.num_bases())
    throw Error(ErrorCode::SupportMismatch, "weight support differs from the basis set");
  for (const Rational& x : w.by_basis)
    if (x.is_zero())
      throw Error(ErrorCode::SupportMismatch, "weight support differs from the basis set");
  QuadrangleCheck out;
  for (const DegenerateQuadrangle& q : enumerate_degenerate_quadrangles(m)) {
    if (w.by_basis[q.b1] * w.by_basis[q.b3] != w.by_basis[q.b2] * w.by_basis[q.b4]) {
      out.ok = false;
      out.witness = q;
      return out;
    }
  }
  return out;
}

WeightFunction read_weights(std::istream& in, const Matroid& m) {
  WeightFunction w;
  w.by_basis.assign(m.num_bases(), Rational(0));
  std::vector<bool> seen(m.num_bases(), false);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto colon = line.find(':');
    if (colon == std::string::npos)
      throw Error(ErrorCode::Parse, "line " + std::to_string(lineno) + ": expected \"e1 ... er : a/b\"");
    std::istringstream left(line.substr(0, colon));
    std::vector<int> elems;
    int e;
    while (left >> e) elems.push_back(e);
    std::string val = line.substr(colon + 1);
    auto first = val.find_first_not_of(" \t\r");
    auto last = val.find_last_not_of(" \t\r");
    if (first == std::string::npos)
      throw Error(ErrorCode::Parse, "line " + std::to_string(lineno) + ": missing weight");
    val = val.substr(first, last - first + 1);
    Rational weight;
    try {
      weight = Rational::from_string(val);
    } catch (const std::exception&) {
      throw Error(ErrorCode::Parse, "line " + std::to_string(lineno) + ": bad rational " + val);
    }
    if (weight.sign() <= 0)
      throw Error(ErrorCode::Parse, "line " + std::to_string(lineno) + ": weights must be positive");
    int idx = m.basis_index(subset_of(elems));
    if (idx < 0)
      throw Error(ErrorCode::SupportMismatch,
                  "line " + std::to_string(lineno) + ": " + format_subset(subset_of(elems)) +
                      " is not a basis");
    if (seen[idx])
      throw Error(ErrorCode::Parse, "line " + std::to_string(lineno) + ": duplicate basis");
    seen[idx] = true;
    w.by_basis[idx] = weight;
  }
  for (size_t i = 0; i < seen.size(); ++i)
    if (!seen[i])
      throw Error(ErrorCode::SupportMismatch,
                  "basis " + format_subset(m.bases()[i]) + " has no weight");
  return w;
}

std::string to_string(WhppStatus s) {
  switch (s) {
    case WhppStatus::NOT_WHPP: return "NOT_WHPP";
    case WhppStatus::WHPP: return "WHPP";
    case WhppStatus::WHPP_IFF_HPP: return "WHPP_IFF_HPP";
    case WhppStatus::UNDETERMINED: return "UNDETERMINED";
  }
  return "UNDETERMINED";
}

namespace {

/// The catalog matroids whose half-plane property status is settled
/// negatively; recognition is by isomorphism so relabeled inputs match.
const std::vector<std::pair<std::string, Matroid>>& settled_non_hpp() {
  static const std::vector<std::pair<std::string, Matroid>> list = [] {
    std::vector<std::pair<std::string, Matroid>> out;
    for (const char* name : {"F7", "AG(3,2)", "S8", "T8", "PG(2,3)", "R9"})
      out.emplace_back(name, catalog(name));
    return out;
  }();
  return list;
}

/// Projective-geometry recognition for rank >= 3: PG(m,q) with m >= 2,
/// q prime, matching point count and rank, up to isomorphism.
bool recognize_projective_geometry(const Matroid& m) {
  const int n = m.ground_size();
  if (m.rank() < 3) return false;
  for (long long q = 2; q <= n; ++q) {
    bool prime = q >= 2;
    for (long long d = 2; d * d <= q; ++d)
      if (q % d == 0) prime = false;
    if (!prime) continue;
    long long points = q + 1;  // PG(1,q)
    int mm = 1;
    while (points < n) {
      points = points * q + 1;
      ++mm;
    }
    if (points != n || mm < 2) continue;
    if (m.rank() != mm + 1) continue;
    if (is_isomorphic(m, projective_geometry(mm, q)).has_value()) return true;
  }
  return false;
}

}  // namespace

Verdict whpp_verdict(const Matroid& m) {
  Verdict v;
  v.n = m.ground_size();
  v.r = m.rank();
  v.basis_count = static_cast<long long>(m.num_bases());
  v.z = connected_components(m).z;
  v.dim_W = dim_W(m);
  v.dim_V = dim_V(m);
  v.inner_free_rank = v.dim_V - v.dim_W;
  AbelianInvariants tutte = tutte_invariants(m);
  v.tutte_free_rank = tutte.free_rank;
  v.tutte_torsion = tutte.torsion;
  v.reduction_applies = (v.dim_V == v.dim_W);
  v.is_binary = is_binary(m);
  v.is_regular = v.is_binary && is_regular(m);
  v.is_projective_geometry = recognize_projective_geometry(m);

  if (v.is_binary) {
    if (v.is_regular) {
      v.whpp_status = WhppStatus::WHPP;
      v.justification =
          "binary and regular: regular matroids have the half-plane property, hence the WHPP";
    } else {
      v.whpp_status = WhppStatus::NOT_WHPP;
      v.justification =
          "binary but not regular: a binary matroid has the WHPP only if it is regular";
    }
    return v;
  }
  if (v.is_projective_geometry) {
    v.whpp_status = WhppStatus::NOT_WHPP;
    v.justification = "projective geometry: no projective geometry has the WHPP";
    return v;
  }
  if (v.reduction_applies) {
    for (const auto& [name, settled] : settled_non_hpp()) {
      if (settled.ground_size() != v.n || settled.rank() != v.r ||
          static_cast<long long>(settled.num_bases()) != v.basis_count)
        continue;
      if (is_isomorphic(m, settled).has_value()) {
        v.whpp_status = WhppStatus::NOT_WHPP;
        v.justification = "dim V = dim W reduces WHPP to HPP, and this matroid (isomorphic to " +
                          name + ") is known to lack the half-plane property";
        return v;
      }
    }
    v.whpp_status = WhppStatus::WHPP_IFF_HPP;
    v.justification = "dim V = dim W: the WHPP holds if and only if the HPP holds";
    return v;
  }
  v.whpp_status = WhppStatus::UNDETERMINED;
  v.justification = "no applicable criterion: dim V exceeds dim W by " +
                    std::to_string(v.inner_free_rank);
  return v;
}

}  // namespace whpp
