#pragma once

// Builders for concrete algebras: group rings, fundamental ideals, quaternion
// algebras over Z_n, the 4x4 matrix model of the Q8 augmentation component,
// small matrix rings and the named ring corpus.

#include <string>
#include <vector>

#include "finring/group.hpp"
#include "finring/ring.hpp"
#include "finring/subgroup.hpp"

namespace finring {

/// Structure ring of rank |G| * rank(R); basis index g * rank(R) + i.
Ring group_ring(const Ring& coeff, const GroupPtr& g, std::string name = {});

/// Element sum_g lambda_g g of a group ring with coefficients in the unital coefficient ring.
Element group_element(const Ring& rg, GroupTable::Elem g);

/// Span over the (commutative) coefficient ring of the conjugacy-class sums of RG.
AdditiveSubgroup class_sum_center(const Ring& rg);

/// Two-sided ideal generated by {r h - r : h in H, r in coefficient generators}.
AdditiveSubgroup delta_ideal(const Ring& rg, const std::vector<GroupTable::Elem>& h);

struct DeltaDecomposition {
  Ring quotient;                   // R(Q8/Q8') as a group ring
  Ring delta;                      // Delta(Q8, Q8') on the basis below
  std::vector<Element> delta_basis;  // f, af, bf, abf inside RQ8
  Element f;                       // (1 - a^2) / 2
};

/// Splits RQ8 (coefficients Z_n, 2 invertible) along the central idempotent
/// f; verifies that x -> (x mod Q8', xf) is a ring isomorphism.
DeltaDecomposition delta_decomposition(const Ring& rq8);

struct QuaternionParams {
  Residue n = 2;  // base ring Z_n
  Residue a = 1;
  Residue b = 1;
};

/// (a, b, Z_n) on the basis 1, i, j, k.
Ring quaternion_algebra(const QuaternionParams& p);
/// Z_n 1 + I i + I j + I k with I = Ann(2), inside `q` = quaternion_algebra(p).
AdditiveSubgroup quaternion_center_formula(const Ring& q, const QuaternionParams& p);

/// Pattern matrix with first row q (4x4, entries mod n).
Matrix delta_pattern_matrix(Residue n, std::span<const Residue> q);
/// Rank-4 ring of pattern matrices over Z_n; element coefficients are the first row.
Ring matrix_delta(Residue n);
/// Basis map into delta_decomposition's second component: q -> (f, af, bf, -abf).
std::vector<Element> matrix_delta_basis_image(const DeltaDecomposition& d);

/// M_2(Z_n) on E11, E12, E21, E22.
Ring matrix_ring_2(Residue n);
/// Upper triangular 2x2 over Z_n on E11, E12, E22.
Ring upper_triangular_2(Residue n);

struct NamedRing {
  std::string name;
  Ring ring;
};

/// Named presets (z2q8, matrix_delta_z9, m2_z2, ...). Throws on unknown names.
Ring preset_ring(const std::string& name);
std::vector<std::string> preset_names();

/// Built-in corpus used by the property suites.
std::vector<NamedRing> ring_corpus();

}  // namespace finring
