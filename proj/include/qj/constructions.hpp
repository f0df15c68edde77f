#pragma once

#include <utility>

#include "qj/groupcore.hpp"
#include "qj/projgroup.hpp"

namespace qj {

/// Witness data for the explicit A5 inside PGL2(K(sqrt(r))): a designated
/// element with square 5 and base-level elements a,b,c,d satisfying
/// (a + b*sqrt(r))^2 + (c + d*sqrt(r))^2 = -1 exactly.
struct A5Witness {
  TowerPtr tower;
  int r_level = 0;       // which adjoined radical plays sqrt(r)
  FieldElem sqrt5;       // verified: sqrt5^2 = 5
  FieldElem a, b, c, d;  // verified to lie in the subfield without sqrt(r)

  static A5Witness make(TowerPtr tower, int r_level, FieldElem sqrt5, FieldElem a, FieldElem b,
                        FieldElem c, FieldElem d);
};

/// Splits x = a + b*sqrt(r), y = c + d*sqrt(r) out of a two-squares witness
/// x^2 + y^2 = -1 and packages it as an A5Witness.
A5Witness witness_from_two_squares(TowerPtr tower, int r_level, const FieldElem& sqrt5,
                                   const FieldElem& x, const FieldElem& y);

/// The displayed generator lifts: A = [[0,1],[-1,0]] and the order-5 matrix C.
std::pair<Mat2, Mat2> a5_raw_matrices(const A5Witness& w);
/// Canonical projective generators; verifies A^2 = C^5 = (CA)^3 = identity.
std::pair<ProjMatrix, ProjMatrix> a5_matrices(const A5Witness& w);
/// The twist matrix R = [[a+c, a-c],[a-c, -a-c]].
Mat2 s5_r_matrix(const A5Witness& w);

/// <A, C> inside PGL2; verifies order 60 and recognition as A5.
GroupPtr a5_matrix_group(const A5Witness& w);

/// <(A,0), (C,0), (R,1)> in the twisted context conjugating sqrt(5).
/// Verifies order 120, trivial center and the symmetric-group extension.
GroupPtr s5_twisted_group(const A5Witness& w);

/// All triples (g1, g2, flag) with the coordinate-swapping multiplication;
/// order 2|G|^2. Requires |G| <= 64.
GroupPtr square_wreath(const GroupPtr& g);

/// Componentwise direct product, enumerated pairwise.
GroupPtr direct_product(const GroupPtr& g, const GroupPtr& h);

/// Residues mod n under addition.
GroupPtr cyclic_group(int n);
/// Dihedral group of order `order` (order = 2n, n >= 2); order 4 is the
/// Klein four group.
GroupPtr dihedral_group(int order);

/// True iff x^5 = y^2 = (xy)^3 = identity and <x,y> has order 60.
bool verify_presentation_a5(const ElemKey& x, const ElemKey& y, const CtxPtr& ctx,
                            std::size_t cap = 200);

}  // namespace qj
