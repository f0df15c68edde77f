#pragma once

#include <array>
#include <string>

#include "qj/exactfield.hpp"
#include "qj/groupcore.hpp"

namespace qj {

/// Plain 2x2 matrix over a tower field, row-major [[a,b],[c,d]].
struct Mat2 {
  std::array<FieldElem, 4> e;

  static Mat2 make(FieldElem a, FieldElem b, FieldElem c, FieldElem d);
  static Mat2 identity(const TowerPtr& tower);

  const TowerPtr& tower() const { return e[0].tower(); }
  Mat2 mul(const Mat2& rhs) const;
  Mat2 scaled(const FieldElem& s) const;
  FieldElem det() const { return e[0] * e[3] - e[1] * e[2]; }
  FieldElem trace() const { return e[0] + e[3]; }
  bool is_scalar() const;
  bool operator==(const Mat2&) const = default;
};

/// Element of PGL2 over a tower field, stored as the canonical lift whose
/// first nonzero entry in row-major order is 1. Equality of canonical lifts
/// decides projective equality.
class ProjMatrix {
 public:
  static ProjMatrix from(const Mat2& m);  // throws SingularMatrix

  const Mat2& lift() const { return m_; }
  const TowerPtr& tower() const { return m_.tower(); }
  bool is_identity() const;
  bool operator==(const ProjMatrix&) const = default;

  ElemKey key() const;
  std::string str() const;

 private:
  explicit ProjMatrix(Mat2 m) : m_(std::move(m)) {}
  Mat2 m_;
};

ProjMatrix pmul(const ProjMatrix& x, const ProjMatrix& y);
ProjMatrix pinv(const ProjMatrix& x);
/// Least k >= 1 with x^k = identity; throws OrderExceedsCap past `cap`.
int porder(const ProjMatrix& x, int cap = 120);

/// tr(x)^2 / det(x), independent of the choice of lift.
FieldElem trace_sq_over_det(const ProjMatrix& x);

/// Entrywise Galois conjugation followed by re-canonicalization.
ProjMatrix galois_conj_matrix(const ProjMatrix& x, int level);

/// Element of PGL2(L) x| Z/2: the nontrivial flag conjugates the right-hand
/// matrix entrywise before multiplying.
struct TwistedElement {
  ProjMatrix mat;
  int flag = 0;
  bool operator==(const TwistedElement&) const = default;
};

TwistedElement twisted_mul(const TwistedElement& x, const TwistedElement& y, int level);
TwistedElement twisted_inv(const TwistedElement& x, int level);

/// groupcore context over PGL2 of the tower.
CtxPtr pgl2_context(TowerPtr tower);
/// groupcore context over the twisted product, conjugating at `level`.
CtxPtr twisted_context(TowerPtr tower, int level);

ElemKey twisted_key(const TwistedElement& x);
TwistedElement twisted_from_key(const ElemKey& k, const TowerPtr& tower);

/// Parses `[[e,e],[e,e]]` matrix literals with element syntax inside.
Mat2 parse_mat2(const std::string& text, const TowerPtr& tower);

}  // namespace qj
