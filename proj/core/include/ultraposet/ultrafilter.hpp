#pragma once

#include <optional>
#include <span>
#include <vector>

#include "ultraposet/bitset.hpp"

namespace upo {

/// An ultrafilter on a finite carrier {0..m-1}. The full member family is
/// stored so that set-membership formulas can be executed as written, and
/// the principal witness is kept alongside for O(1) pairing; the constructor
/// verifies the two agree (on a finite carrier every ultrafilter is
/// principal, so the witness always exists).
class Ultrafilter {
 public:
  /// Builds from an explicit family; validates all four ultrafilter axioms
  /// and the principal form. Throws errc::shape on violation.
  static Ultrafilter from_family(int carrier_size, std::vector<SubsetMask> family);

  /// delta_s = { A : s in A }.
  static Ultrafilter principal(int s, int carrier_size);

  int carrier_size() const { return carrier_size_; }
  int witness() const { return witness_; }

  /// Members in canonical (ascending bit-set) order.
  const std::vector<SubsetMask>& family() const { return family_; }

  bool contains(const SubsetMask& set) const;

  bool operator==(const Ultrafilter& other) const {
    return carrier_size_ == other.carrier_size_ && witness_ == other.witness_;
  }

 private:
  Ultrafilter() = default;

  int carrier_size_ = 0;
  int witness_ = -1;
  std::vector<SubsetMask> family_;
};

/// Free-function spelling of Ultrafilter::principal.
Ultrafilter principal(int s, int carrier_size);

struct UltrafilterViolation {
  int axiom = 0;  // 1 upward closure, 2 contains carrier, 3 intersection, 4 dichotomy
  std::vector<SubsetMask> witness;
};

struct UltrafilterCheck {
  bool ok = true;
  std::optional<UltrafilterViolation> violation;
};

/// Checks the four ultrafilter axioms on an arbitrary family and reports the
/// first violated axiom with a witness set (canonical scan order).
UltrafilterCheck is_ultrafilter(const std::vector<SubsetMask>& family, int carrier_size);

/// The m principal ultrafilters, in element order; on a finite carrier these
/// are all of them. Throws budget_exceeded above the cap.
std::vector<Ultrafilter> enumerate_ultrafilters(int carrier_size, int max_carrier = 16);

/// i_* mu = { V : i^{-1}(V) in mu }, computed literally over subsets of the
/// target. `i` maps the carrier of mu into {0..target_size-1}.
Ultrafilter pushforward(std::span<const int> i, const Ultrafilter& mu, int target_size);

/// A function T -> beta(S): one ultrafilter per index, common carrier.
class UltraFamily {
 public:
  UltraFamily(std::vector<Ultrafilter> members);

  static UltraFamily constant(const Ultrafilter& mu, int index_size);

  /// delta . i as a family: t -> delta_{i(t)}.
  static UltraFamily principal_family(std::span<const int> i, int carrier_size);

  int index_size() const { return static_cast<int>(members_.size()); }
  int carrier_size() const { return carrier_size_; }
  const Ultrafilter& operator[](int t) const { return members_[t]; }
  const std::vector<Ultrafilter>& members() const { return members_; }

 private:
  int carrier_size_ = 0;
  std::vector<Ultrafilter> members_;
};

/// Kleisli pairing <mu, nu>: A is a member iff { t : A in mu_t } in nu.
Ultrafilter kleisli_pair(const UltraFamily& mu, const Ultrafilter& nu);

/// Monad multiplication. `theta` lives on the canonical enumeration of
/// beta(S) (as produced by enumerate_ultrafilters); gamma(theta) =
/// { A : { mu : A in mu } in theta }. Cross-checked against the Kleisli
/// route <id, theta> by the caller's tests.
Ultrafilter gamma(const Ultrafilter& theta, int carrier_size);

/// Appendix lemma: a family with the finite intersection property extends to
/// a (principal) ultrafilter. Throws errc::shape when the family lacks FIP.
Ultrafilter extend_fip(const std::vector<SubsetMask>& family, int carrier_size);

}  // namespace upo
