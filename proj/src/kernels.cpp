#include "qj/kernels.hpp"

#include <algorithm>
#include <atomic>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qj {
namespace kernels {

namespace {
Exec g_default =
#ifdef _OPENMP
    Exec::Parallel;
#else
    Exec::Serial;
#endif
}  // namespace

Exec default_exec() { return g_default; }
void set_default_exec(Exec e) { g_default = e; }

std::vector<int> conjugacy_orbit(const FiniteGroup& g, int rep, Exec e) {
  const int n = g.order();
  std::vector<char> seen(static_cast<size_t>(n), 0);
  if (e == Exec::Parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
    for (int t = 0; t < n; ++t) seen[static_cast<size_t>(g.conj(t, rep))] = 1;
#else
    for (int t = 0; t < n; ++t) seen[static_cast<size_t>(g.conj(t, rep))] = 1;
#endif
  } else {
    for (int t = 0; t < n; ++t) seen[static_cast<size_t>(g.conj(t, rep))] = 1;
  }
  std::vector<int> orbit;
  for (int i = 0; i < n; ++i)
    if (seen[static_cast<size_t>(i)]) orbit.push_back(i);
  return orbit;
}

std::vector<int> element_orders(const FiniteGroup& g, Exec e) {
  const int n = g.order();
  std::vector<int> orders(static_cast<size_t>(n));
  if (e == Exec::Parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 64)
    for (int i = 0; i < n; ++i) orders[static_cast<size_t>(i)] = g.element_order(i);
#else
    for (int i = 0; i < n; ++i) orders[static_cast<size_t>(i)] = g.element_order(i);
#endif
  } else {
    for (int i = 0; i < n; ++i) orders[static_cast<size_t>(i)] = g.element_order(i);
  }
  return orders;
}

bool commutes_on(const FiniteGroup& g, const std::vector<int>& subset, Exec e) {
  const int m = static_cast<int>(subset.size());
  if (e == Exec::Parallel) {
    std::atomic<bool> ok{true};
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8)
#endif
    for (int i = 0; i < m; ++i) {
      if (!ok.load(std::memory_order_relaxed)) continue;
      for (int j = i + 1; j < m; ++j) {
        if (g.mul(subset[i], subset[j]) != g.mul(subset[j], subset[i])) {
          ok.store(false, std::memory_order_relaxed);
          break;
        }
      }
    }
    return ok.load();
  }
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (g.mul(subset[i], subset[j]) != g.mul(subset[j], subset[i])) return false;
  return true;
}

std::vector<int> centralizing(const FiniteGroup& g, const std::vector<int>& domain,
                              const std::vector<int>& testers, Exec e) {
  const int m = static_cast<int>(domain.size());
  std::vector<char> keep(static_cast<size_t>(m), 0);
  auto body = [&](int i) {
    int x = domain[static_cast<size_t>(i)];
    for (int t : testers)
      if (g.mul(x, t) != g.mul(t, x)) return;
    keep[static_cast<size_t>(i)] = 1;
  };
  if (e == Exec::Parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (int i = 0; i < m; ++i) body(i);
  } else {
    for (int i = 0; i < m; ++i) body(i);
  }
  std::vector<int> out;
  for (int i = 0; i < m; ++i)
    if (keep[static_cast<size_t>(i)]) out.push_back(domain[static_cast<size_t>(i)]);
  return out;
}

bool is_normal_subset(const FiniteGroup& g, const std::vector<char>& member,
                      const std::vector<int>& subset, Exec e) {
  const int m = static_cast<int>(subset.size());
  const std::vector<int>& gens = g.generators();
  if (e == Exec::Parallel) {
    std::atomic<bool> ok{true};
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (int i = 0; i < m; ++i) {
      if (!ok.load(std::memory_order_relaxed)) continue;
      for (int t : gens) {
        if (!member[static_cast<size_t>(g.conj(t, subset[static_cast<size_t>(i)]))]) {
          ok.store(false, std::memory_order_relaxed);
          break;
        }
      }
    }
    return ok.load();
  }
  for (int i = 0; i < m; ++i)
    for (int t : gens)
      if (!member[static_cast<size_t>(g.conj(t, subset[static_cast<size_t>(i)]))]) return false;
  return true;
}

}  // namespace kernels
}  // namespace qj
