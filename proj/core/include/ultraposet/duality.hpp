#pragma once

#include <tuple>

#include "ultraposet/ultraposet.hpp"

namespace upo {

/// Mod(D): the spectrum ultraposet together with its prime table. The
/// carrier order is reverse inclusion of prime ideals (x <= y iff x contains
/// y); primes[i] is the ideal behind carrier element i, in canonical
/// enumeration order.
struct SpectrumResult {
  DistLattice lattice;
  Ultraposet spectrum;
  std::vector<SubsetMask> primes;
};

/// Builds Mod(D) and asserts its closure under ultraproducts: every probe
/// family of primes pairs back into the prime table (the finite-scale
/// ultraproduct theorem for propositional models).
SpectrumResult mod_spectrum(const DistLattice& d, const CheckOptions& opts = {});

struct FilterViolation {
  std::vector<SubsetMask> filter;  // the proper non-ultra filter, canonical order
  SubsetMask x, y;                 // first witness pair in canonical order
  std::string law;                 // "join" or "meet"
};

struct LosReport {
  int carrier_size = 0;
  bool ultrafilters_are_homs = true;
  std::string hom_witness;
  int filters_scanned = 0;  // proper non-ultra filters found by brute force
  bool every_filter_violates = true;
  std::vector<FilterViolation> violations;
  long long probes = 0;
};

/// For every ultrafilter mu on S, <-, mu> : 2^S -> 2 must be a bounded
/// lattice hom; for every proper non-ultra filter (found by brute force over
/// all families of subsets), a hom violation witness must exist and is
/// returned. Requires s_size <= 4.
LosReport los_hom_check(int s_size);

/// sigma* : Mod(D) -> Mod(C) by preimage, for sigma : C -> D. Asserts that
/// preimages of primes are prime, that (sigma*)^{-1}(B_p) = B_{sigma p}, and
/// that sigma* is an ultrafunctor.
MonotoneMap mod_on_hom(const LatticeHom& sigma, const CheckOptions& opts = {});

/// Omega_u(U) = clcd(U) as a bounded distributive lattice. Element i is
/// pairs[i]; the order is reverse inclusion of down-components, so meet is
/// union and join is intersection of down-components (asserted).
struct OmegaUResult {
  DistLattice lattice;
  std::vector<ClosedPair> pairs;

  int index_of_down(const SubsetMask& down) const;
};

OmegaUResult omega_u(const Ultraposet& u, const CheckOptions& opts = {}, int max_elements = 512);

/// Omega(U) = clc(U)^op as a finite frame (a bounded distributive lattice).
/// Element i is sets[i]; order is reverse inclusion.
struct OmegaResult {
  DistLattice lattice;
  std::vector<SubsetMask> sets;

  int index_of(const SubsetMask& set) const;
};

OmegaResult omega(const Ultraposet& u, const CheckOptions& opts = {}, int max_elements = 512);

/// The lattice of ideals of D under inclusion (elements[i] = i-th ideal in
/// canonical order; includes the improper ideal as top).
struct IdealLattice {
  DistLattice lattice;
  std::vector<Ideal> elements;

  int index_of(const SubsetMask& elems) const;
};

IdealLattice ideal_lattice(const DistLattice& d);

/// K_I = { x in Mod(D) : x contains I }, a closed downset of the spectrum.
SubsetMask galois(const SpectrumResult& sp, const Ideal& ideal);

/// I_P = { p : P is contained in B_p }; for P = {} this is the improper
/// ideal (all of D), returned tagged via Ideal::is_proper.
Ideal galois_inv(const SpectrumResult& sp, const SubsetMask& subset);

struct ReconstructIdlResult {
  IdealLattice idl;
  OmegaResult clc_op;        // clc(Mod D)^op
  std::vector<int> iso;      // ideal index -> clc index, via I -> K_I
};

/// The lattice isomorphism idl(D) ~ clc(Mod D)^op via I -> K_I, verified
/// elementwise; throws iso_failure on any mismatch.
ReconstructIdlResult reconstruct_idl(const DistLattice& d, const CheckOptions& opts = {});

struct CounitResult {
  SpectrumResult spectrum;
  OmegaUResult omega;
  LatticeHom hom;  // p -> (B_p, O_p), verified bijective
};

/// The counit D ~ Omega_u(Mod D); throws iso_failure unless it is a
/// bijective lattice hom.
CounitResult counit(const DistLattice& d, const CheckOptions& opts = {});

struct ZeroDimResult {
  bool ok = true;
  int bad_p = -1, bad_q = -1;  // unseparated pair when !ok
  std::vector<ClosedPair> pairs;
  // (p, q, index into pairs) for every p !<= q, when ok
  std::vector<std::tuple<int, int, int>> separators;
};

/// p !<= q must be separated by some (K, K-bar) in clcd with p in K-bar and
/// q in K; returns the first separator per pair in canonical order.
ZeroDimResult is_zero_dimensional(const Ultraposet& u, const CheckOptions& opts = {});

/// Re-runs the associativity probes demanding equality. Precondition:
/// is_zero_dimensional(u) holds (throws errc::order otherwise).
bool strict_assoc_check(const Ultraposet& u, const CheckOptions& opts = {});

struct EtaResult {
  OmegaUResult omega;
  SpectrumResult omega_spectrum;  // Mod(Omega_u(U))
  MonotoneMap map;                // eta : U -> Mod(Omega_u(U))
  bool iso = false;
  bool zero_dimensional = false;
};

struct EtaOptions {
  CheckOptions check;
  int omega_cap = 512;
};

/// The evaluation map eta(p) = (phi -> phi(p)). Asserts eta is an
/// ultrafunctor, and that it is an isomorphism exactly when U is
/// zero-dimensional.
EtaResult eta(const Ultraposet& u, const EtaOptions& opts = {});

struct PriestleyResult {
  bool priestley = false;         // clopen-downset separation in the patch topology
  bool zero_dimensional = false;  // must agree (asserted)
};

PriestleyResult priestley_check(const Ultraposet& u, const CheckOptions& opts = {},
                                int max_sets = 65536);

struct StoneResult {
  bool boolean = false;
  bool discrete_spectrum = false;  // must agree (asserted)
};

StoneResult stone_check(const DistLattice& d, const CheckOptions& opts = {});

// --- hom-level duality checks ----------------------------------------------

struct PtPointsResult {
  int frame_homs = 0;
  int primes = 0;
  bool bijective = false;
};

/// Frame homs idl(D) -> 2 biject with prime ideals via x*(I) = join of x
/// over I (i.e. x*(I) = 0 iff I is contained in x).
PtPointsResult pt_points_check(const DistLattice& d, long long max_candidates = 10'000'000);

/// For every lattice hom h : idl(D) -> idl(C), precomposition with the pt
/// isomorphisms induces a monotone map Mod(C) -> Mod(D); asserts it passes
/// is_left_ultrafunctor. Returns the number of homs checked.
int pt_on_maps_check(const DistLattice& c, const DistLattice& d,
                     long long max_candidates = 10'000'000, const CheckOptions& opts = {});

struct HomBijectionResult {
  int monotone_maps = 0;  // maps P -> Mod(D); all are left ultrafunctors here
  int frame_homs = 0;     // lattice homs idl(D) -> Omega(P)
  bool bijective = false;
};

/// The finite instance of the hom adjunction: monotone maps P -> Mod(D)
/// biject with frame homs idl(D) -> clc(P)^op via phi -> (I -> phi^{-1}(K_I)).
HomBijectionResult hom_bijection_check(const Ultraposet& p, const DistLattice& d,
                                       long long max_candidates = 10'000'000,
                                       const CheckOptions& opts = {});

struct FullFaithfulnessResult {
  int lattice_homs = 0;
  int ultrafunctors = 0;
  bool bijective = false;
  bool counit_recovers = false;  // Omega_u(sigma*) matches sigma through the counits
};

/// Mod is fully faithful: sigma -> sigma* bijects DL(C, D) onto
/// UltPos(Mod D, Mod C), and applying Omega_u to sigma* recovers sigma
/// through the counit isomorphisms.
FullFaithfulnessResult mod_full_faithful_check(const DistLattice& c, const DistLattice& d,
                                               long long max_candidates = 10'000'000,
                                               const CheckOptions& opts = {});

struct TriangleResult {
  bool omega_triangle = true;  // counit after Omega_u(eta) is the identity
  bool mod_triangle = true;    // Mod(counit) after eta is the identity
};

/// Triangle identities of the reflection, checked elementwise on one
/// ultraposet (for the Omega_u side) and one lattice (for the Mod side).
TriangleResult triangle_check_ultraposet(const Ultraposet& u, const EtaOptions& opts = {});
TriangleResult triangle_check_lattice(const DistLattice& d, const EtaOptions& opts = {});

}  // namespace upo
