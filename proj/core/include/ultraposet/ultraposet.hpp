#pragma once

#include <atomic>
#include <map>
#include <memory>
#include <string>

#include "ultraposet/lattice.hpp"
#include "ultraposet/ultrafilter.hpp"

namespace upo {

enum class ConstructionKind { discrete, canonical, mod_spectrum, presheaf, product, coproduct, custom };

const char* construction_name(ConstructionKind k);

/// Pairing provider for one ultraposet. The core operation is the
/// single-ultrafilter pairing <f, mu>; pairings against families T -> beta(S)
/// are derived pointwise in the second entry.
class Ultrastructure {
 public:
  virtual ~Ultrastructure() = default;
  virtual ConstructionKind kind() const = 0;
  virtual int carrier_size() const = 0;

  /// <f, mu> where f is a family indexed by the carrier of mu with values in
  /// this structure's carrier.
  virtual int pair(std::span<const int> f, const Ultrafilter& mu) const = 0;
};

/// A poset carrying an ultraproduct pairing.
struct Ultraposet {
  Poset carrier;
  std::shared_ptr<const Ultrastructure> structure;

  int size() const { return carrier.size(); }

  int pair(std::span<const int> f, const Ultrafilter& mu) const;

  /// Pointwise in the second entry: result[t] = <f, mus[t]>.
  std::vector<int> pair_family(std::span<const int> f, const UltraFamily& mus) const;
};

// --- constructions -------------------------------------------------------

/// Discrete ultraset on n points: <f, mu> is the unique convergence point,
/// the x with f^{-1}(x) in mu.
Ultraposet discrete_ultraposet(int n);

/// Canonical ultrastructure on a finite (distributive) lattice:
/// <f, mu> = join over A in mu of (meet over s in A of f(s)), evaluated
/// literally over the stored member family.
Ultraposet canonical_ultraposet(DistLattice lattice);

/// The ultraposet 2 = {0 < 1} with its canonical structure.
Ultraposet canonical_two();

/// Mod(D): prime ideals of D under reverse inclusion, pairing
/// <f, mu> = { p : f^{-1}(C_p) in mu }. The result of every pairing is
/// asserted to be a prime ideal of D.
Ultraposet mod_spectrum_ultraposet(const DistLattice& lattice);

/// Presheaf ultraposet [base, target]: monotone maps with pointwise order
/// and pointwise pairing in the target.
Ultraposet presheaf_ultraposet(const Poset& base, const Ultraposet& target,
                               long long max_candidates = 10'000'000);

/// Product with componentwise pairing; zero factors give the terminal
/// singleton ultraposet.
Ultraposet product_ultraposet(std::vector<Ultraposet> factors, int max_carrier = 4096);

/// Coproduct (disjoint union); the pairing restricts to the summand whose
/// preimage lies in the ultrafilter.
Ultraposet coproduct_ultraposet(Ultraposet left, Ultraposet right);

// --- concrete structures (exposed for serialization and tests) -----------

class DiscreteStructure final : public Ultrastructure {
 public:
  explicit DiscreteStructure(int n) : n_(n) {}
  ConstructionKind kind() const override { return ConstructionKind::discrete; }
  int carrier_size() const override { return n_; }
  int pair(std::span<const int> f, const Ultrafilter& mu) const override;

 private:
  int n_;
};

class CanonicalStructure final : public Ultrastructure {
 public:
  explicit CanonicalStructure(DistLattice lattice) : lattice_(std::move(lattice)) {}
  ConstructionKind kind() const override { return ConstructionKind::canonical; }
  int carrier_size() const override { return lattice_.size(); }
  int pair(std::span<const int> f, const Ultrafilter& mu) const override;
  const DistLattice& lattice() const { return lattice_; }

 private:
  DistLattice lattice_;
};

class ModSpectrumStructure final : public Ultrastructure {
 public:
  ModSpectrumStructure(DistLattice lattice, std::vector<SubsetMask> primes);
  ConstructionKind kind() const override { return ConstructionKind::mod_spectrum; }
  int carrier_size() const override { return static_cast<int>(primes_.size()); }
  int pair(std::span<const int> f, const Ultrafilter& mu) const override;
  const DistLattice& lattice() const { return lattice_; }
  const std::vector<SubsetMask>& primes() const { return primes_; }
  int index_of(const SubsetMask& prime) const;

 private:
  DistLattice lattice_;
  std::vector<SubsetMask> primes_;
  std::map<SubsetMask, int> index_;
};

class PresheafStructure final : public Ultrastructure {
 public:
  PresheafStructure(Poset base, Ultraposet target, std::vector<std::vector<int>> elements);
  ConstructionKind kind() const override { return ConstructionKind::presheaf; }
  int carrier_size() const override { return static_cast<int>(elements_.size()); }
  int pair(std::span<const int> f, const Ultrafilter& mu) const override;
  const Poset& base() const { return base_; }
  const Ultraposet& target() const { return target_; }
  const std::vector<std::vector<int>>& elements() const { return elements_; }
  int index_of(const std::vector<int>& element) const;

 private:
  Poset base_;
  Ultraposet target_;
  std::vector<std::vector<int>> elements_;
  std::map<std::vector<int>, int> index_;
};

class ProductStructure final : public Ultrastructure {
 public:
  explicit ProductStructure(std::vector<Ultraposet> factors);
  ConstructionKind kind() const override { return ConstructionKind::product; }
  int carrier_size() const override { return total_; }
  int pair(std::span<const int> f, const Ultrafilter& mu) const override;
  const std::vector<Ultraposet>& factors() const { return factors_; }
  std::vector<int> decode(int index) const;
  int encode(std::span<const int> tuple) const;

 private:
  std::vector<Ultraposet> factors_;
  int total_ = 1;
};

class CoproductStructure final : public Ultrastructure {
 public:
  CoproductStructure(Ultraposet left, Ultraposet right)
      : left_(std::move(left)), right_(std::move(right)) {}
  ConstructionKind kind() const override { return ConstructionKind::coproduct; }
  int carrier_size() const override { return left_.size() + right_.size(); }
  int pair(std::span<const int> f, const Ultrafilter& mu) const override;
  const Ultraposet& left() const { return left_; }
  const Ultraposet& right() const { return right_; }

 private:
  Ultraposet left_;
  Ultraposet right_;
};

/// Diagnostic mode: the canonical join-of-meets formula evaluated over an
/// arbitrary family of subsets, not necessarily an ultrafilter. Exhibits the
/// failure of the lattice-hom property for non-ultra filters; deliberately
/// separate from the Ultrafilter-typed pairing API.
int canonical_filter_pair(const DistLattice& lattice, std::span<const int> f,
                          std::span<const SubsetMask> family);

// --- axiom checking -------------------------------------------------------

struct ProbeBudget {
  int max_s = 3;
  int max_t = 2;
  int max_w = 3;
};

struct CheckOptions {
  ProbeBudget budget;
  const std::atomic<bool>* cancel = nullptr;
};

struct AxiomReport {
  bool unity = true;
  bool lax_assoc = true;
  bool assoc_equality = true;  // whether lax associativity held with equality
  bool locality = true;
  bool monotone = true;
  long long probes = 0;
  std::string witness;  // first failure, empty when all pass

  bool pass() const { return unity && lax_assoc && locality && monotone; }
};

/// Exhaustively verifies Unity, Lax Associativity, Locality and monotonicity
/// of the pairing within the probe budget, reporting whether associativity
/// held with equality everywhere (it must, on finite carriers).
AxiomReport check_axioms(const Ultraposet& u, const CheckOptions& opts = {});

// --- ultrafunctor predicates ----------------------------------------------

enum class UltraKind { left, right, plain };

const char* ultra_kind_name(UltraKind k);

struct UltraCheck {
  bool ok = true;
  long long probes = 0;
  std::string witness;
};

UltraCheck is_left_ultrafunctor(std::span<const int> values, const Ultraposet& dom,
                                const Ultraposet& cod, const CheckOptions& opts = {});
UltraCheck is_right_ultrafunctor(std::span<const int> values, const Ultraposet& dom,
                                 const Ultraposet& cod, const CheckOptions& opts = {});
UltraCheck is_ultrafunctor(std::span<const int> values, const Ultraposet& dom,
                           const Ultraposet& cod, const CheckOptions& opts = {});

// --- closed sets ------------------------------------------------------------

/// Probe criterion: f^{-1}(K) in mu implies <f, mu> in K, over families with
/// |S| <= budget.max_s. Finite probes are exact here: every implemented
/// pairing factors through the fibers of f (one fiber lies in the principal
/// ultrafilter, and constant families satisfy <const p, mu> = p), so probes
/// up to the carrier size decide closedness; check_axioms asserts that
/// premise per construction.
bool is_closed(const Ultraposet& u, const SubsetMask& k, const CheckOptions& opts = {});

/// All closed subsets (requires 2^|carrier| enumerable within the cap).
std::vector<SubsetMask> closed_sets(const Ultraposet& u, const CheckOptions& opts = {},
                                    int max_carrier_bits = 16);

/// Closed downsets / closed upsets, canonical order.
std::vector<SubsetMask> clc(const Ultraposet& u, const CheckOptions& opts = {});
std::vector<SubsetMask> cld(const Ultraposet& u, const CheckOptions& opts = {});

/// A complemented pair: a closed downset and its closed upset complement.
/// As a poset, (K, K-bar) <= (L, L-bar) iff K contains L.
struct ClosedPair {
  SubsetMask down;
  SubsetMask up;

  bool operator==(const ClosedPair& other) const = default;
};

std::vector<ClosedPair> clcd(const Ultraposet& u, const CheckOptions& opts = {});

ClosedPair make_closed_pair(const Ultraposet& u, SubsetMask down, const CheckOptions& opts = {});

// --- primitive subsets ------------------------------------------------------

struct PrimitivePairs {
  Ultraposet presheaf;            // [D, 2]
  std::vector<ClosedPair> cd;     // (C_p, D_p) over the presheaf carrier, per p
  Ultraposet spectrum;            // Mod(D)
  std::vector<ClosedPair> bo;     // (B_p, O_p) over the spectrum carrier, per p
};

/// C_p = downsets containing p (inside [D,2]), D_p its complement;
/// B_p, O_p their restrictions to Mod(D). Verifies the lattice interaction
/// B_{p v q} = B_p & B_q, B_{p ^ q} = B_p | B_q and the duals for O.
PrimitivePairs primitive_pairs(const DistLattice& d, long long max_candidates = 10'000'000);

// --- hom-posets --------------------------------------------------------------

struct HomPoset {
  UltraKind kind;
  Ultraposet dom;
  Ultraposet cod;
  std::vector<std::vector<int>> elements;  // value vectors, lexicographic
  Poset order;                             // pointwise order on elements
};

/// All monotone maps passing the kind's predicate, with pointwise order.
/// When cod's carrier is a complete lattice and kind is left, verifies that
/// pointwise joins (including the empty join) land back in the hom-poset.
HomPoset hom_poset(UltraKind kind, const Ultraposet& dom, const Ultraposet& cod,
                   long long max_candidates = 10'000'000, const CheckOptions& opts = {});

// --- patch topology -----------------------------------------------------------

/// Closed sets of the topology generated by the subbasis
/// { K, K-bar : (K, K-bar) in clcd(U) }: all intersections of finite unions.
std::vector<SubsetMask> patch_topology(const Ultraposet& u, const CheckOptions& opts = {},
                                       int max_sets = 65536);

}  // namespace upo
