#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "qj/errors.hpp"

namespace qj {

/// Canonical serialization of a group element. Equal elements have equal
/// keys; byte-wise lexicographic order is the canonical element order.
using ElemKey = std::string;

/// Multiplication oracle over opaque canonical keys.
class GroupContext {
 public:
  virtual ~GroupContext() = default;
  virtual ElemKey identity() const = 0;
  virtual ElemKey mul(const ElemKey& a, const ElemKey& b) const = 0;
  virtual ElemKey inv(const ElemKey& a) const = 0;
  virtual std::string describe(const ElemKey& a) const = 0;
  virtual std::string name() const = 0;
};

using CtxPtr = std::shared_ptr<const GroupContext>;

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Immutable enumerated finite group. Elements carry stable indices; the
/// identity always has index 0. A full multiplication table is only built for
/// orders up to kCayleyCap, larger groups multiply through the context.
class FiniteGroup {
 public:
  static constexpr int kCayleyCap = 2048;

  /// Closure of `gens` under multiplication, BFS by word length with ties
  /// broken by canonical key order. Throws CapExceeded if the closure grows
  /// past `cap`.
  static GroupPtr generate(CtxPtr ctx, const std::vector<ElemKey>& gens, std::size_t cap);

  /// Wraps an already-enumerated, multiplication-closed element list.
  /// The identity must be the first element; the order of `elems` defines
  /// the element indices.
  static GroupPtr from_enumeration(CtxPtr ctx, std::vector<ElemKey> elems,
                                   const std::vector<ElemKey>& gens);

  int order() const { return static_cast<int>(elems_.size()); }
  int identity_index() const { return 0; }
  int mul(int i, int j) const {
    if (!cayley_.empty()) return cayley_[static_cast<size_t>(i) * elems_.size() + j];
    return index_of(ctx_->mul(elems_[i], elems_[j]));
  }
  int inv(int i) const { return inv_[static_cast<size_t>(i)]; }
  int conj(int g, int x) const { return mul(mul(g, x), inv(g)); }
  int index_of(const ElemKey& k) const {
    auto it = index_.find(k);
    return it == index_.end() ? -1 : it->second;
  }
  const ElemKey& key(int i) const { return elems_[static_cast<size_t>(i)]; }
  const std::vector<int>& generators() const { return gens_; }
  const GroupContext& ctx() const { return *ctx_; }
  const CtxPtr& ctx_ptr() const { return ctx_; }

  /// Least k >= 1 with g^k = identity.
  int element_order(int g) const;

  std::string describe(int i) const { return ctx_->describe(elems_[i]); }

 private:
  FiniteGroup() = default;
  void finish();  // builds index, inverses and (for small orders) the table

  CtxPtr ctx_;
  std::vector<ElemKey> elems_;
  std::unordered_map<ElemKey, int> index_;
  std::vector<int> inv_;
  std::vector<int> gens_;
  std::vector<int> cayley_;
};

struct LatticeOptions {
  /// Element insertions performed across all lattice subgroup generations.
  std::uint64_t max_steps = 1'000'000;
};

/// Conjugation orbits, sorted by (size, minimal element index).
std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& g);

/// The complete list of normal subgroups as sorted index sets, computed by
/// closing the lattice generated from {identity} under adjoining one
/// conjugacy class at a time. Sorted by (size, lexicographic index set).
std::vector<std::vector<int>> normal_subgroups(const FiniteGroup& g, LatticeOptions opt = {});

struct JordanCertificate {
  std::uint64_t constant = 0;
  std::vector<int> witness;   // element indices of the attaining subgroup
  std::uint64_t audit = 0;    // normal subgroups examined
};

/// Smallest index of a normal abelian subgroup, with the attaining witness
/// (largest, then lexicographically least) and the audit count.
JordanCertificate jordan_constant(const FiniteGroup& g, LatticeOptions opt = {});

std::vector<int> center(const FiniteGroup& g);
bool is_abelian(const FiniteGroup& g);
std::vector<int> derived_subgroup(const FiniteGroup& g);

/// Subgroup generated by `seed` (element indices); sorted ascending.
std::vector<int> subgroup_closure(const FiniteGroup& g, const std::vector<int>& seed);
/// Smallest normal subgroup containing `seed`; sorted ascending.
std::vector<int> normal_closure(const FiniteGroup& g, const std::vector<int>& seed);
bool is_subgroup(const FiniteGroup& g, const std::vector<int>& sorted_elems);
bool is_normal(const FiniteGroup& g, const std::vector<int>& sorted_elems);

/// The subgroup as a group of its own, sharing the parent's context.
GroupPtr subgroup_group(const FiniteGroup& g, const std::vector<int>& sorted_elems);

enum class ExtensionTag { DirectProduct, SymmetricGroup, NormalHalfProduct };
std::string to_string(ExtensionTag t);

/// Classifies an extension 1 -> N -> G -> Z/m -> 0 with N an alternating
/// group: DirectProduct, SymmetricGroup (m = 2, trivial center) or
/// NormalHalfProduct (even m > 2 with a normal index-2 direct product).
ExtensionTag classify_extension(const FiniteGroup& g, const std::vector<int>& normal_subset);

struct Recognition {
  enum class Kind { Cyclic, Dihedral, A4, S4, A5, S5, A5xC2, Other };
  Kind kind = Kind::Other;
  int parameter = 0;  // n for cyclic, group order for dihedral
  std::string str() const;
  bool operator==(const Recognition&) const = default;
};

/// Census-based identification within the catalog {cyclic, dihedral, A4, S4,
/// A5, S5, A5 x Z/2}; returns Other when no census row matches.
Recognition recognize(const FiniteGroup& g);

}  // namespace qj
