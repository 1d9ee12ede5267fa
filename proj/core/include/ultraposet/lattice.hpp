#pragma once

#include <optional>
#include <vector>

#include "ultraposet/poset.hpp"

namespace upo {

/// A bounded distributive lattice over a validated poset. The meet/join
/// tables are found by exhaustive glb/lub search; validation checks
/// distributivity on all triples and the bounds.
struct DistLattice {
  Poset poset;
  std::vector<int> meet_table;  // n*n, row-major
  std::vector<int> join_table;
  int bot = 0;
  int top = 0;

  int size() const { return poset.size(); }
  int meet(int p, int q) const { return meet_table[p * size() + q]; }
  int join(int p, int q) const { return join_table[p * size() + q]; }
  bool leq(int p, int q) const { return poset.leq(p, q); }

  bool operator==(const DistLattice& other) const = default;
};

/// Throws not_a_lattice when some pair lacks a bound, not_distributive with
/// a witness triple in the message otherwise.
DistLattice validate_dist_lattice(const Poset& poset);

/// The two-element lattice 0 < 1.
DistLattice two_lattice();

/// Downset lattice of a poset, ordered by inclusion (Birkhoff dual).
/// Element i of the result is downsets(base)[i].
DistLattice downset_lattice(const Poset& base);

/// Ideals are nonempty join-closed downsets; the improper ideal (all of D)
/// is a valid Ideal and reports is_proper() = false. Filters dually.
struct Ideal {
  SubsetMask elems;
  bool is_proper(const DistLattice& d) const { return !elems.test(d.top); }
};

struct Filter {
  SubsetMask elems;
  bool is_proper(const DistLattice& d) const { return !elems.test(d.bot); }
};

/// A proper prime ideal: p ^ q in I implies p in I or q in I.
struct PrimeIdeal {
  SubsetMask elems;
};

Ideal make_ideal(const DistLattice& d, SubsetMask elems);
Filter make_filter(const DistLattice& d, SubsetMask elems);
PrimeIdeal make_prime_ideal(const DistLattice& d, SubsetMask elems);

Ideal principal_ideal(const DistLattice& d, int p);
Filter principal_filter(const DistLattice& d, int p);

bool is_ideal_mask(const DistLattice& d, const SubsetMask& mask);
bool is_filter_mask(const DistLattice& d, const SubsetMask& mask);
bool is_prime_ideal_mask(const DistLattice& d, const SubsetMask& mask);

/// Exhaustive enumerations in canonical (ascending bit-set) order.
std::vector<Ideal> ideals(const DistLattice& d);
std::vector<Filter> filters(const DistLattice& d);
std::vector<PrimeIdeal> prime_ideals(const DistLattice& d);

/// A bounded-lattice homomorphism (preserves meet, join, bot, top).
struct LatticeHom {
  DistLattice dom;
  DistLattice cod;
  std::vector<int> values;

  int operator()(int p) const { return values[p]; }
};

LatticeHom make_lattice_hom(DistLattice dom, DistLattice cod, std::vector<int> values);

bool is_lattice_hom(const DistLattice& dom, const DistLattice& cod, std::span<const int> values);

/// All bounded-lattice homs dom -> cod in lexicographic order. The search
/// prunes by monotonicity, bound preservation and meet/join closure along
/// the way; it refuses (BudgetExceeded) once more than max_candidates
/// candidate assignments have been explored.
std::vector<LatticeHom> lattice_homs(const DistLattice& dom, const DistLattice& cod,
                                     long long max_candidates = 10'000'000);

/// Extends I to an ideal maximal among those disjoint from F, first in
/// canonical order when several exist; the result is checked prime.
PrimeIdeal max_ideal_disjoint(const DistLattice& d, const Ideal& ideal, const Filter& filter);

/// For p !<= q, the first prime ideal (canonical order) containing q but
/// not p. Throws errc::order when p <= q.
PrimeIdeal prime_separation(const DistLattice& d, int p, int q);

struct MeetOfPrimesResult {
  bool holds = false;
  std::vector<PrimeIdeal> primes_above;  // all primes containing the ideal
};

/// Checks that I equals the intersection of all prime ideals containing it
/// (for the improper ideal the intersection is over an empty family, which
/// by convention is all of D).
MeetOfPrimesResult ideal_is_meet_of_primes(const DistLattice& d, const Ideal& ideal);

struct ModelPrimeTable {
  std::vector<LatticeHom> homs;       // all homs D -> 2, canonical order
  std::vector<PrimeIdeal> primes;     // all prime ideals, canonical order
  std::vector<int> hom_to_prime;      // index map via x -> x^{-1}(0)
  bool bijective = false;
};

/// Verifies {homs D -> 2} <-> {prime ideals} via x -> x^{-1}(0).
ModelPrimeTable model_prime_correspondence(const DistLattice& d);

/// Every element has a complement.
bool is_boolean(const DistLattice& d);

/// Scott continuity on finite complete lattices: checks that the map
/// preserves joins of directed subsets. Finite directed sets contain their
/// maximum, so every monotone map passes; the checker exists to pin that
/// degenerate fact down rather than assume it.
bool preserves_directed_joins(const DistLattice& dom, const DistLattice& cod,
                              std::span<const int> values, int max_subset_bits = 16);

}  // namespace upo
