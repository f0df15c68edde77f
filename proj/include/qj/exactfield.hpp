#pragma once

#include <memory>
#include <string>
#include <vector>

#include "qj/rational.hpp"

namespace qj {

class TowerSpec;
class FieldElem;
using TowerPtr = std::shared_ptr<const TowerSpec>;

/// A tower Q = K0 c K1 c K2 of at most two quadratic extensions.
/// Level k adjoins the square root of a radicand living in K_k; every radicand
/// is verified to be a non-square at its level when the tower is built.
class TowerSpec {
 public:
  static TowerPtr rationals();
  static TowerPtr make(const std::vector<Rational>& radicands);
  static TowerPtr make(const std::vector<FieldElem>& radicands);

  int levels() const { return static_cast<int>(radicands_.size()); }
  int dim() const { return 1 << levels(); }
  /// Coordinates of the level-k radicand over the basis of K_k (size 2^k).
  const std::vector<Rational>& radicand_coords(int level) const;

  bool equals(const TowerSpec& other) const;
  std::string str() const;

 private:
  TowerSpec() = default;
  std::vector<std::vector<Rational>> radicands_;
};

/// Element of a tower field, stored as exact rational coordinates over the
/// basis 1, sqrt(r1), sqrt(r2), sqrt(r1)*sqrt(r2) (truncated to the tower dim).
class FieldElem {
 public:
  FieldElem() : tower_(TowerSpec::rationals()), coords_(1) {}

  static FieldElem of(TowerPtr tower, Rational r);
  static FieldElem zero(TowerPtr tower) { return of(std::move(tower), Rational(0)); }
  static FieldElem one(TowerPtr tower) { return of(std::move(tower), Rational(1)); }
  /// The adjoined radical sqrt(r_level) as an element.
  static FieldElem radical(TowerPtr tower, int level);
  static FieldElem from_coords(TowerPtr tower, std::vector<Rational> coords);

  const TowerPtr& tower() const { return tower_; }
  const std::vector<Rational>& coords() const { return coords_; }
  const Rational& coord(int i) const { return coords_[static_cast<size_t>(i)]; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;  // all non-constant coordinates vanish

  friend FieldElem operator+(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator-(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator/(const FieldElem& a, const FieldElem& b);
  FieldElem operator-() const;
  FieldElem inverse() const;

  friend bool operator==(const FieldElem& a, const FieldElem& b);
  friend bool operator!=(const FieldElem& a, const FieldElem& b) { return !(a == b); }

  /// Ring automorphism negating sqrt(r_level) and fixing the complementary
  /// subfield. Requires every later radicand to be fixed by the involution.
  FieldElem galois_conj(int level) const;

  std::string str() const;  // human-readable, sqrt(..) syntax
  std::string key() const;  // canonical serialization, usable as a hash key

 private:
  FieldElem(TowerPtr tower, std::vector<Rational> coords)
      : tower_(std::move(tower)), coords_(std::move(coords)) {}

  TowerPtr tower_;
  std::vector<Rational> coords_;
};

/// True iff x^2 + y^2 = -1 exactly (both over the same tower).
bool verify_two_squares_witness(const FieldElem& x, const FieldElem& y);

/// Exact squareness test used to validate radicands. `level` is the level the
/// coordinates live at (0: rational, 1: over K1); deeper levels are not needed
/// because towers are capped at two extensions.
bool is_square_at_level(const std::vector<Rational>& coords, const TowerSpec& tower, int level);

/// Parses the textual element syntax: integers, fractions via '/', sqrt(n)
/// atoms resolved against the active tower, parentheses and + - * /.
FieldElem parse_element(const std::string& text, const TowerPtr& tower);

}  // namespace qj
