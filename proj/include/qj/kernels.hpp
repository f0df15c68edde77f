#pragma once

#include <vector>

#include "qj/groupcore.hpp"

namespace qj {
namespace kernels {

/// Kernel execution mode. Parallel uses OpenMP when compiled in; both modes
/// return identical results, the serial path is the reference implementation.
enum class Exec { Serial, Parallel };

Exec default_exec();
void set_default_exec(Exec e);

/// Orbit of `rep` under conjugation by every group element, sorted ascending.
std::vector<int> conjugacy_orbit(const FiniteGroup& g, int rep, Exec e);

/// Order of every element.
std::vector<int> element_orders(const FiniteGroup& g, Exec e);

/// Whether every pair inside `subset` (element indices) commutes.
bool commutes_on(const FiniteGroup& g, const std::vector<int>& subset, Exec e);

/// Elements of `domain` commuting with every element of `testers`.
std::vector<int> centralizing(const FiniteGroup& g, const std::vector<int>& domain,
                              const std::vector<int>& testers, Exec e);

/// Whether the subset (with membership mask) is invariant under conjugation
/// by the group generators.
bool is_normal_subset(const FiniteGroup& g, const std::vector<char>& member,
                      const std::vector<int>& subset, Exec e);

}  // namespace kernels
}  // namespace qj
