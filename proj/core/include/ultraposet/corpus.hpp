#pragma once

#include "ultraposet/lattice.hpp"

namespace upo {

/// Canonical form of a small poset: the least row-major relation bit matrix
/// over all permutations of the elements. Isomorphism key for n <= 8.
uint64_t poset_canonical_bits(const Poset& p);

/// All posets with 0..max_n elements, one per isomorphism class, in a
/// deterministic order (ascending size, then ascending canonical matrix).
/// Sizes up to 6 are supported.
std::vector<Poset> corpus_posets(int max_n);

/// Downset lattices of the corpus posets. By the finite Birkhoff
/// representation these are exactly the bounded distributive lattices with
/// at most max_n join-irreducibles, each appearing once: non-isomorphic base
/// posets (deduplicated above via canonical forms computed along the linear
/// extension) have non-isomorphic downset lattices.
std::vector<DistLattice> corpus_lattices(int max_n);

}  // namespace upo
