#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "whpp/builders.hpp"
#include "whpp/linalg.hpp"
#include "whpp/matroid.hpp"
#include "whpp/quadrangle.hpp"
#include "whpp/rational.hpp"

namespace whpp {

/// dim of the solution space of the quadrangle relation system: the rational
/// nullity of the plain relation matrix.
int dim_V(const Matroid& m);

/// Invariants of the Tutte group based on bases (one generator per basis plus
/// epsilon), from the Smith normal form of the signed relation matrix.
AbelianInvariants tutte_invariants(const Matroid& m);

/// dim_V - dim_W: the free rank of the inner Tutte group.
int inner_free_rank(const Matroid& m);

/// A nonzero exact weight per basis of a fixed matroid, indexed by the
/// canonical basis order. Weights are positive rationals.
struct WeightFunction {
  std::vector<Rational> by_basis;
};

/// Column matroid of a full-row-rank rational matrix, weighted by squared
/// subdeterminants: weight(B) = det(A_B)^2.
std::pair<Matroid, WeightFunction> cauchy_binet_weights(const RationalMatrix& a);

struct QuadrangleCheck {
  bool ok = true;
  std::optional<DegenerateQuadrangle> witness;  // first violation, canonical order
};

/// Exact multiplicative check w(B1)w(B3) = w(B2)w(B4) over every degenerate
/// quadrangle.
QuadrangleCheck verify_quadrangle_relations(const Matroid& m, const WeightFunction& w);

/// Parse "e1 e2 ... er : a/b" lines into a weight function for m.
/// The support must equal the basis set and all weights must be positive.
WeightFunction read_weights(std::istream& in, const Matroid& m);

enum class WhppStatus { NOT_WHPP, WHPP, WHPP_IFF_HPP, UNDETERMINED };

std::string to_string(WhppStatus s);

/// Full analysis record for one matroid, with the decided weak half-plane
/// property status and the fact justifying it.
struct Verdict {
  int n = 0;
  int r = 0;
  long long basis_count = 0;
  int z = 0;
  int dim_V = 0;
  int dim_W = 0;
  int inner_free_rank = 0;
  long long tutte_free_rank = 0;
  std::vector<BigInt> tutte_torsion;
  bool reduction_applies = false;
  bool is_binary = false;
  bool is_regular = false;
  bool is_projective_geometry = false;
  WhppStatus whpp_status = WhppStatus::UNDETERMINED;
  std::string justification;
};

/// Decision order: binary matroids are settled by regularity; projective
/// geometries (rank >= 3) never have the property; when dim_V = dim_W the
/// question reduces to the half-plane property, which is settled for six
/// catalog matroids; anything else is honestly undetermined.
Verdict whpp_verdict(const Matroid& m);

}  // namespace whpp
