#pragma once

#include <map>
#include <string>
#include <vector>

#include "qj/groupcore.hpp"

namespace qj {

/// Bijection of {1..n}, n <= 12.
class Permutation {
 public:
  static constexpr int kMaxDegree = 12;

  static Permutation identity(int degree);
  /// One-line images: images[i] is the image of point i+1.
  static Permutation from_images(std::vector<int> images);
  /// Cycle notation, e.g. "(12)(34)" or "(1 2 3)(4 5)". Multi-digit points
  /// require whitespace separation. Degree is the largest moved point unless
  /// given explicitly.
  static Permutation parse(const std::string& cycles, int degree = 0);

  int degree() const { return static_cast<int>(img_.size()); }
  int apply(int point) const { return img_[static_cast<size_t>(point - 1)]; }

  Permutation compose(const Permutation& then) const;  // apply *this first, `then` second
  Permutation inverse() const;
  bool is_even() const;
  /// Cycle lengths including fixed points, sorted descending.
  std::vector<int> cycle_type() const;

  bool operator==(const Permutation&) const = default;

  std::string cycle_str() const;
  ElemKey key() const;
  static Permutation from_key(const ElemKey& k);

 private:
  explicit Permutation(std::vector<int> img) : img_(std::move(img)) {}
  std::vector<int> img_;
};

/// GroupContext over permutations of a fixed degree.
CtxPtr permutation_context(int degree);

GroupPtr symmetric_group(int n);    // enumerated for n <= 8
GroupPtr alternating_group(int n);  // enumerated for n <= 8

/// Parity of a cycle type (true = even permutation).
bool cycle_type_is_even(const std::vector<int>& type);

/// Splitting criterion for the conjugacy class of an even permutation: the
/// class splits in the alternating group iff all cycle lengths are odd and
/// pairwise distinct (fixed points count as length-1 cycles).
bool class_splits_in_alternating(const std::vector<int>& cycle_type);

/// For each feasible k >= 1 with 3k <= n, whether
/// 2*C(n,3) == n!/(k! * 3^k * (n-3k)!). Exact integer arithmetic; holds only
/// at k = 1 for n >= 7.
std::map<int, bool> verify_three_cycle_counting(int n);

}  // namespace qj
