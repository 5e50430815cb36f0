#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "coxkit/poset.hpp"

namespace coxkit {

// ---- Sperner theory ----

struct HFamily {
  int h = 0;
  /// Largest size of a union of h antichains.
  std::size_t size = 0;
  /// A family of that size whose chains have at most h elements.
  std::vector<int> family;
};

/// Greene-Kleitman: a_h = n + min cost of the node-split chain network,
/// where each chain costs h and each element it covers earns 1. The
/// witness family is read off the residual potentials.
HFamily max_h_family(const Poset& poset, int h);

struct SpernerRow {
  int h = 0;
  std::size_t flow_value = 0;
  std::size_t top_rank_sum = 0;
  bool pass = false;
};

struct SpernerReport {
  bool strongly_sperner = true;
  std::vector<SpernerRow> rows;  // h = 1 .. number of ranks
};

/// Needs a rank function under which the poset is graded (DomainError
/// otherwise).
SpernerReport strong_sperner_check(const Poset& poset);

// ---- Order complexes and shellability ----

struct OrderComplex {
  /// Node ids of the open interval.
  std::vector<int> vertices;
  /// Maximal chains of the open interval, each sorted by node id.
  std::vector<std::vector<int>> facets;
};

/// Order complex of the open interval (bottom, top) of a bounded poset.
/// Throws DomainError without a bottom and top, ResourceError past `cap`
/// maximal chains.
OrderComplex order_complex(const Poset& interval, std::size_t cap = 200'000);

enum class ShellVerdict { kShellable, kNotShellable, kInconclusive };

std::string to_string(ShellVerdict v);

struct ShellabilityResult {
  ShellVerdict verdict = ShellVerdict::kInconclusive;
  /// Facet indices in shelling order (when shellable).
  std::vector<int> order;
  /// Search states visited; with kNotShellable this is the size of the
  /// exhausted search.
  std::size_t states = 0;
};

/// Backtracking search for a (possibly non-pure) shelling. Facets are
/// tried in order of decreasing dimension, which loses nothing, and dead
/// sets of placed facets are memoised. ResourceError past `facet_cap`
/// facets; kInconclusive once `state_budget` states were visited.
ShellabilityResult shellability(const OrderComplex& complex, std::size_t facet_cap = 5000,
                                std::size_t state_budget = 2'000'000);

/// Shelling test of one fixed facet order.
bool is_shelling_order(const OrderComplex& complex, const std::vector<int>& order);

// ---- Isomorphism ----

struct IsomorphismResult {
  bool isomorphic = false;
  /// bijection[u] = image in q of node u of p.
  std::vector<int> bijection;
};

/// Backtracking over a linear extension of p, with candidates filtered by
/// (depth, height above, cover degrees, up/down set sizes).
/// ResourceError if either poset has more than `cap` nodes.
IsomorphismResult poset_isomorphic(const Poset& p, const Poset& q, std::size_t cap = 5000);

// ---- Standard posets ----

Poset chain_poset(int n);
Poset antichain_poset(int n);
/// Subsets of {1..n} under inclusion; node i is the subset with bit mask i.
Poset boolean_lattice(int n);

struct NCLattice {
  int n = 0;
  /// Restricted growth strings: blocks[i][j] is the block of j + 1.
  std::vector<std::vector<int>> blocks;
  /// Refinement order, finest partition at the bottom; rank = n - #blocks.
  Poset poset;
};

/// Noncrossing partitions of [n] for 1 <= n <= 10 (ValidationError otherwise).
NCLattice nc_lattice(int n);

/// Every pair has a meet and a join.
bool is_lattice(const Poset& poset);

}  // namespace coxkit
