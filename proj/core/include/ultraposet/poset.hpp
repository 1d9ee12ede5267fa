#pragma once

#include <span>
#include <utility>
#include <vector>

#include "ultraposet/bitset.hpp"

namespace upo {

/// A finite poset on elements {0..n-1}. The order relation is stored as one
/// bit-row per element (row p holds the up-set of p), and a fixed linear
/// extension is computed at construction and reused by all enumerations.
class Poset {
 public:
  Poset() = default;

  /// Builds a poset from any generating relation: the input pairs are closed
  /// reflexively and transitively, and the closure is rejected if it violates
  /// antisymmetry. Cover pairs therefore suffice as input.
  static Poset from_pairs(int n, const std::vector<std::pair<int, int>>& leq_pairs);

  /// Builds a poset from a full relation matrix; validates reflexivity,
  /// antisymmetry and transitivity exhaustively (rows[p] = up-set of p).
  static Poset from_rows(std::vector<SubsetMask> rows);

  int size() const { return n_; }
  bool leq(int p, int q) const { return rows_[p].test(q); }
  bool lt(int p, int q) const { return p != q && leq(p, q); }
  bool comparable(int p, int q) const { return leq(p, q) || leq(q, p); }

  /// Up-set of p as a mask.
  const SubsetMask& upset_of(int p) const { return rows_[p]; }

  /// Indices in an order-compatible sequence: p <= q implies p appears no
  /// later than q. Deterministic (smallest index first among minimal elements).
  const std::vector<int>& linear_extension() const { return linext_; }

  bool is_antichain() const;

  /// Cover pairs (p, q) with p < q and nothing strictly between.
  std::vector<std::pair<int, int>> covers() const;

  bool operator==(const Poset& other) const = default;

 private:
  void compute_linext();

  int n_ = 0;
  std::vector<SubsetMask> rows_;
  std::vector<int> linext_;
};

/// Alias of Poset::from_pairs.
Poset validate_poset(int n, const std::vector<std::pair<int, int>>& leq_pairs);

Poset make_chain(int n);
Poset make_antichain(int n);

/// All downward (resp. upward) closed subsets, in canonical order
/// (ascending numeric value of the bit-set).
std::vector<SubsetMask> downsets(const Poset& poset);
std::vector<SubsetMask> upsets(const Poset& poset);

SubsetMask principal_downset(const Poset& poset, int p);
SubsetMask principal_upset(const Poset& poset, int p);

/// Greatest lower / least upper bound of {p, q} by exhaustive search,
/// -1 when none exists.
int poset_glb(const Poset& poset, int p, int q);
int poset_lub(const Poset& poset, int p, int q);

bool is_downset(const Poset& poset, const SubsetMask& mask);
bool is_upset(const Poset& poset, const SubsetMask& mask);

/// A monotone map between two posets, stored as the value vector
/// values[p] = image of p. The factory validates monotonicity.
struct MonotoneMap {
  Poset dom;
  Poset cod;
  std::vector<int> values;

  int operator()(int p) const { return values[p]; }
  bool operator==(const MonotoneMap& other) const = default;
};

MonotoneMap make_monotone_map(Poset dom, Poset cod, std::vector<int> values);

bool is_monotone(const Poset& dom, const Poset& cod, std::span<const int> values);

MonotoneMap identity_map(const Poset& p);
MonotoneMap compose(const MonotoneMap& second, const MonotoneMap& first);

/// All monotone maps dom -> cod as value vectors, in lexicographic order.
/// The search is pruned by monotonicity against already-assigned elements;
/// it refuses (BudgetExceeded) once more than max_candidates candidate
/// assignments have been explored.
std::vector<std::vector<int>> monotone_maps(const Poset& dom, const Poset& cod,
                                            long long max_candidates = 10'000'000);

/// Pointwise order on a family of equally-shaped value vectors into cod.
Poset pointwise_order(const std::vector<std::vector<int>>& maps, const Poset& cod);

}  // namespace upo
