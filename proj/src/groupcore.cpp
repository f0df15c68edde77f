#include "qj/groupcore.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "qj/kernels.hpp"

namespace qj {

GroupPtr FiniteGroup::generate(CtxPtr ctx, const std::vector<ElemKey>& gens, std::size_t cap) {
  if (gens.empty()) throw PreconditionFailed("generate requires at least one generator");
  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->ctx_ = std::move(ctx);

  const ElemKey id = g->ctx_->identity();
  g->elems_.push_back(id);
  g->index_.emplace(id, 0);

  std::vector<ElemKey> gen_keys;
  for (const ElemKey& k : gens)
    if (std::find(gen_keys.begin(), gen_keys.end(), k) == gen_keys.end()) gen_keys.push_back(k);

  std::vector<ElemKey> layer = {id};
  while (!layer.empty()) {
    std::vector<ElemKey> next;
    std::unordered_map<ElemKey, char> next_seen;
    for (const ElemKey& x : layer) {
      for (const ElemKey& s : gen_keys) {
        ElemKey y = g->ctx_->mul(x, s);
        if (g->index_.count(y) || !next_seen.emplace(y, 1).second) continue;
        next.push_back(std::move(y));
      }
    }
    std::sort(next.begin(), next.end());
    for (ElemKey& y : next) {
      if (g->elems_.size() >= cap)
        throw CapExceeded("closure exceeded cap " + std::to_string(cap));
      g->index_.emplace(y, static_cast<int>(g->elems_.size()));
      g->elems_.push_back(std::move(y));
    }
    layer = std::vector<ElemKey>(g->elems_.end() - static_cast<long>(next.size()),
                                 g->elems_.end());
  }

  for (const ElemKey& k : gen_keys) g->gens_.push_back(g->index_.at(k));
  g->finish();
  return g;
}

GroupPtr FiniteGroup::from_enumeration(CtxPtr ctx, std::vector<ElemKey> elems,
                                        const std::vector<ElemKey>& gens) {
  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->ctx_ = std::move(ctx);
  g->elems_ = std::move(elems);
  for (size_t i = 0; i < g->elems_.size(); ++i)
    g->index_.emplace(g->elems_[i], static_cast<int>(i));
  if (g->index_.size() != g->elems_.size())
    throw PreconditionFailed("enumeration contains duplicate elements");
  if (g->elems_.empty() || g->elems_[0] != g->ctx_->identity())
    throw PreconditionFailed("enumeration must start with the identity");
  for (const ElemKey& k : gens) {
    auto it = g->index_.find(k);
    if (it == g->index_.end()) throw PreconditionFailed("generator not in enumeration");
    g->gens_.push_back(it->second);
  }
  g->finish();
  return g;
}

void FiniteGroup::finish() {
  const int n = order();
  inv_.assign(static_cast<size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    ElemKey k = ctx_->inv(elems_[static_cast<size_t>(i)]);
    auto it = index_.find(k);
    if (it == index_.end()) throw PreconditionFailed("element set not closed under inversion");
    inv_[static_cast<size_t>(i)] = it->second;
  }
  if (n <= kCayleyCap) {
    cayley_.resize(static_cast<size_t>(n) * static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        int k = index_of(ctx_->mul(elems_[static_cast<size_t>(i)], elems_[static_cast<size_t>(j)]));
        if (k < 0) throw PreconditionFailed("element set not closed under multiplication");
        cayley_[static_cast<size_t>(i) * static_cast<size_t>(n) + static_cast<size_t>(j)] = k;
      }
    }
  }
}

int FiniteGroup::element_order(int g) const {
  int k = 1;
  int x = g;
  while (x != 0) {
    x = mul(x, g);
    ++k;
    if (k > order()) throw PreconditionFailed("element order exceeds group order");
  }
  return k;
}

std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& g) {
  const int n = g.order();
  std::vector<char> assigned(static_cast<size_t>(n), 0);
  std::vector<std::vector<int>> classes;
  for (int rep = 0; rep < n; ++rep) {
    if (assigned[static_cast<size_t>(rep)]) continue;
    std::vector<int> orbit = kernels::conjugacy_orbit(g, rep, kernels::default_exec());
    for (int x : orbit) assigned[static_cast<size_t>(x)] = 1;
    classes.push_back(std::move(orbit));
  }
  std::stable_sort(classes.begin(), classes.end(),
                   [](const std::vector<int>& a, const std::vector<int>& b) {
                     if (a.size() != b.size()) return a.size() < b.size();
                     return a.front() < b.front();
                   });
  return classes;
}

namespace {

// Subgroup closure with an insertion budget shared across a lattice run.
std::vector<int> closure_budgeted(const FiniteGroup& g, const std::vector<int>& gen_idx,
                                  std::uint64_t* steps, std::uint64_t max_steps) {
  std::vector<char> member(static_cast<size_t>(g.order()), 0);
  std::vector<int> elems;
  auto push = [&](int x) {
    if (member[static_cast<size_t>(x)]) return false;
    if (steps != nullptr && ++*steps > max_steps)
      throw BudgetExceeded("lattice step budget exceeded (" + std::to_string(max_steps) + ")");
    member[static_cast<size_t>(x)] = 1;
    elems.push_back(x);
    return true;
  };
  push(g.identity_index());
  std::deque<int> queue(elems.begin(), elems.end());
  std::vector<int> gens;
  for (int s : gen_idx)
    if (!member[static_cast<size_t>(s)]) {
      push(s);
      queue.push_back(s);
      gens.push_back(s);
    }
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    for (int s : gens) {
      int y = g.mul(x, s);
      if (push(y)) queue.push_back(y);
    }
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

std::vector<int> normal_closure_budgeted(const FiniteGroup& g, std::vector<int> gens,
                                         std::uint64_t* steps, std::uint64_t max_steps) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  for (;;) {
    std::vector<int> h = closure_budgeted(g, gens, steps, max_steps);
    std::vector<char> member(static_cast<size_t>(g.order()), 0);
    for (int x : h) member[static_cast<size_t>(x)] = 1;
    std::vector<int> fresh;
    for (int x : gens)
      for (int t : g.generators()) {
        int y = g.conj(t, x);
        if (!member[static_cast<size_t>(y)]) fresh.push_back(y);
      }
    if (fresh.empty()) return h;
    gens.insert(gens.end(), fresh.begin(), fresh.end());
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  }
}

}  // namespace

std::vector<int> subgroup_closure(const FiniteGroup& g, const std::vector<int>& seed) {
  return closure_budgeted(g, seed, nullptr, 0);
}

std::vector<int> normal_closure(const FiniteGroup& g, const std::vector<int>& seed) {
  return normal_closure_budgeted(g, seed, nullptr, 0);
}

std::vector<std::vector<int>> normal_subgroups(const FiniteGroup& g, LatticeOptions opt) {
  const auto classes = conjugacy_classes(g);
  const int nc = static_cast<int>(classes.size());
  std::vector<int> class_rep(classes.size());
  for (int c = 0; c < nc; ++c) class_rep[static_cast<size_t>(c)] = classes[static_cast<size_t>(c)].front();

  std::uint64_t steps = 0;
  // A normal subgroup is the union of the classes it contains, so the set of
  // contained classes is a faithful fingerprint.
  auto class_fingerprint = [&](const std::vector<int>& sorted_elems) {
    std::vector<char> member(static_cast<size_t>(g.order()), 0);
    for (int x : sorted_elems) member[static_cast<size_t>(x)] = 1;
    std::vector<int> fp;
    for (int c = 0; c < nc; ++c)
      if (member[static_cast<size_t>(class_rep[static_cast<size_t>(c)])]) fp.push_back(c);
    return fp;
  };

  std::map<std::vector<int>, std::vector<int>> found;  // fingerprint -> elements
  std::deque<std::vector<int>> work;

  std::vector<int> trivial = {g.identity_index()};
  found.emplace(class_fingerprint(trivial), trivial);
  work.push_back(class_fingerprint(trivial));

  while (!work.empty()) {
    std::vector<int> fp = std::move(work.front());
    work.pop_front();
    std::vector<char> in_fp(static_cast<size_t>(nc), 0);
    for (int c : fp) in_fp[static_cast<size_t>(c)] = 1;
    for (int c = 0; c < nc; ++c) {
      if (in_fp[static_cast<size_t>(c)]) continue;
      std::vector<int> gens;
      for (int cc : fp) gens.push_back(class_rep[static_cast<size_t>(cc)]);
      gens.push_back(class_rep[static_cast<size_t>(c)]);
      std::vector<int> sub = normal_closure_budgeted(g, std::move(gens), &steps, opt.max_steps);
      std::vector<int> sub_fp = class_fingerprint(sub);
      if (found.emplace(sub_fp, std::move(sub)).second) work.push_back(std::move(sub_fp));
    }
  }

  std::vector<std::vector<int>> out;
  out.reserve(found.size());
  for (auto& [fp, elems] : found) out.push_back(std::move(elems));
  std::sort(out.begin(), out.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

JordanCertificate jordan_constant(const FiniteGroup& g, LatticeOptions opt) {
  const auto subgroups = normal_subgroups(g, opt);
  JordanCertificate cert;
  cert.audit = subgroups.size();
  const std::vector<int>* best = nullptr;
  for (const auto& n : subgroups) {
    if (!kernels::commutes_on(g, n, kernels::default_exec())) continue;
    if (best == nullptr || n.size() > best->size() ||
        (n.size() == best->size() && n < *best)) {
      best = &n;
    }
  }
  // The trivial subgroup is always abelian and normal.
  cert.witness = *best;
  cert.constant = static_cast<std::uint64_t>(g.order()) / cert.witness.size();
  return cert;
}

std::vector<int> center(const FiniteGroup& g) {
  std::vector<int> all(static_cast<size_t>(g.order()));
  for (int i = 0; i < g.order(); ++i) all[static_cast<size_t>(i)] = i;
  // Commuting with every generator suffices.
  std::vector<int> testers = g.generators();
  return kernels::centralizing(g, all, testers, kernels::default_exec());
}

bool is_abelian(const FiniteGroup& g) {
  for (int a : g.generators())
    for (int b : g.generators())
      if (g.mul(a, b) != g.mul(b, a)) return false;
  return true;
}

std::vector<int> derived_subgroup(const FiniteGroup& g) {
  std::vector<int> comms;
  for (int a : g.generators())
    for (int b : g.generators())
      comms.push_back(g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b))));
  return normal_closure(g, comms);
}

bool is_subgroup(const FiniteGroup& g, const std::vector<int>& sorted_elems) {
  std::vector<char> member(static_cast<size_t>(g.order()), 0);
  for (int x : sorted_elems) member[static_cast<size_t>(x)] = 1;
  if (!member[static_cast<size_t>(g.identity_index())]) return false;
  for (int a : sorted_elems)
    for (int b : sorted_elems)
      if (!member[static_cast<size_t>(g.mul(a, b))]) return false;
  return true;
}

bool is_normal(const FiniteGroup& g, const std::vector<int>& sorted_elems) {
  std::vector<char> member(static_cast<size_t>(g.order()), 0);
  for (int x : sorted_elems) member[static_cast<size_t>(x)] = 1;
  return kernels::is_normal_subset(g, member, sorted_elems, kernels::default_exec());
}

GroupPtr subgroup_group(const FiniteGroup& g, const std::vector<int>& sorted_elems) {
  std::vector<ElemKey> keys;
  keys.reserve(sorted_elems.size());
  for (int x : sorted_elems) keys.push_back(g.key(x));
  // Identity (index 0 in the parent) comes first in any sorted subgroup.
  std::vector<ElemKey> gens = keys;
  return FiniteGroup::from_enumeration(g.ctx_ptr(), std::move(keys), gens);
}

std::string to_string(ExtensionTag t) {
  switch (t) {
    case ExtensionTag::DirectProduct: return "DirectProduct";
    case ExtensionTag::SymmetricGroup: return "SymmetricGroup";
    case ExtensionTag::NormalHalfProduct: return "NormalHalfProduct";
  }
  return "?";
}

namespace {

// N must look like an alternating group A_n, n in {4,5,7,8}: right order and
// either the A4 census or simplicity. Degree 6 is excluded by contract.
bool looks_alternating(const FiniteGroup& parent, const GroupPtr& n_group) {
  const int n = n_group->order();
  if (n == 12) return recognize(*n_group).kind == Recognition::Kind::A4;
  if (n == 60 || n == 2520 || n == 20160) {
    (void)parent;
    return normal_subgroups(*n_group).size() == 2;  // simple
  }
  return false;
}

// Order of gN in G/N: least k with g^k in N.
int coset_order(const FiniteGroup& g, const std::vector<char>& member, int x) {
  int k = 1;
  int y = x;
  while (!member[static_cast<size_t>(y)]) {
    y = g.mul(y, x);
    ++k;
  }
  return k;
}

}  // namespace

ExtensionTag classify_extension(const FiniteGroup& g, const std::vector<int>& normal_subset) {
  std::vector<int> n_sorted = normal_subset;
  std::sort(n_sorted.begin(), n_sorted.end());
  if (!is_subgroup(g, n_sorted) || !is_normal(g, n_sorted))
    throw PreconditionFailed("subset is not a normal subgroup");
  if (g.order() % static_cast<int>(n_sorted.size()) != 0)
    throw PreconditionFailed("index is not integral");
  const int m = g.order() / static_cast<int>(n_sorted.size());
  if (m <= 1) throw PreconditionFailed("quotient is trivial");

  GroupPtr n_group = subgroup_group(g, n_sorted);
  if (!looks_alternating(g, n_group))
    throw PreconditionFailed("normal subgroup is not an alternating group of the catalog");

  std::vector<char> member(static_cast<size_t>(g.order()), 0);
  for (int x : n_sorted) member[static_cast<size_t>(x)] = 1;
  int quotient_gen = -1;
  for (int x = 0; x < g.order(); ++x) {
    if (coset_order(g, member, x) == m) {
      quotient_gen = x;
      break;
    }
  }
  if (quotient_gen < 0) throw PreconditionFailed("quotient is not cyclic");

  const size_t zsize = center(g).size();
  if (m == 2) {
    if (zsize == 2) return ExtensionTag::DirectProduct;
    if (zsize == 1) return ExtensionTag::SymmetricGroup;
    throw UnexpectedStructure("index-2 extension with center of order " + std::to_string(zsize));
  }
  if (m % 2 == 1) {
    if (zsize != static_cast<size_t>(m))
      throw UnexpectedStructure("odd extension without central quotient copy");
    return ExtensionTag::DirectProduct;
  }
  if (zsize == static_cast<size_t>(m)) return ExtensionTag::DirectProduct;
  // Even m, not direct: the square of a quotient generator spans a normal
  // index-2 subgroup containing N.
  std::vector<int> half_seed = n_sorted;
  half_seed.push_back(g.mul(quotient_gen, quotient_gen));
  std::vector<int> half = subgroup_closure(g, half_seed);
  if (half.size() * 2 != static_cast<size_t>(g.order()) || !is_normal(g, half))
    throw UnexpectedStructure("even extension without the expected half subgroup");
  return ExtensionTag::NormalHalfProduct;
}

std::string Recognition::str() const {
  switch (kind) {
    case Kind::Cyclic: return "Z/" + std::to_string(parameter);
    case Kind::Dihedral: return "D" + std::to_string(parameter);
    case Kind::A4: return "A4";
    case Kind::S4: return "S4";
    case Kind::A5: return "A5";
    case Kind::S5: return "S5";
    case Kind::A5xC2: return "A5xZ2";
    case Kind::Other: return "other";
  }
  return "?";
}

namespace {

std::vector<size_t> class_size_multiset(const FiniteGroup& g) {
  std::vector<size_t> sizes;
  for (const auto& c : conjugacy_classes(g)) sizes.push_back(c.size());
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

bool is_dihedral(const FiniteGroup& g) {
  const int n2 = g.order();
  if (n2 % 2 != 0 || n2 < 4) return false;
  const int n = n2 / 2;
  if (n == 2) {
    // Klein four group: abelian of exponent 2.
    if (!is_abelian(g)) return false;
    for (int i = 1; i < g.order(); ++i)
      if (g.element_order(i) != 2) return false;
    return true;
  }
  // Look for a cyclic subgroup of order n and an inverting reflection.
  for (int r = 0; r < n2; ++r) {
    if (g.element_order(r) != n) continue;
    std::vector<int> cyc = subgroup_closure(g, {r});
    std::vector<char> member(static_cast<size_t>(n2), 0);
    for (int x : cyc) member[static_cast<size_t>(x)] = 1;
    for (int t = 0; t < n2; ++t) {
      if (member[static_cast<size_t>(t)] || g.element_order(t) != 2) continue;
      if (g.conj(t, r) == g.inv(r)) return true;
    }
    return false;  // all order-n elements generate the same cyclic subgroup up to conjugacy here
  }
  return false;
}

}  // namespace

Recognition recognize(const FiniteGroup& g) {
  const int n = g.order();
  if (is_abelian(g)) {
    for (int i = 0; i < n; ++i)
      if (g.element_order(i) == n) return {Recognition::Kind::Cyclic, n};
    if (n == 4) return {Recognition::Kind::Dihedral, 4};
    return {Recognition::Kind::Other, 0};
  }
  if (n == 12 && class_size_multiset(g) == std::vector<size_t>{1, 3, 4, 4})
    return {Recognition::Kind::A4, 0};
  if (n == 24 && class_size_multiset(g) == std::vector<size_t>{1, 3, 6, 6, 8})
    return {Recognition::Kind::S4, 0};
  if (n == 60 && class_size_multiset(g) == std::vector<size_t>{1, 12, 12, 15, 20} &&
      normal_subgroups(g).size() == 2)
    return {Recognition::Kind::A5, 0};
  if (n == 120) {
    const size_t zsize = center(g).size();
    const size_t derived = derived_subgroup(g).size();
    if (zsize == 1 && derived == 60) return {Recognition::Kind::S5, 0};
    if (zsize == 2 && derived == 60) return {Recognition::Kind::A5xC2, 0};
  }
  if (is_dihedral(g)) return {Recognition::Kind::Dihedral, n};
  return {Recognition::Kind::Other, 0};
}

}  // namespace qj
