#include "ultraposet/ultrafilter.hpp"

#include <algorithm>
#include <string>

#include "ultraposet/error.hpp"

namespace upo {

namespace {

// All subsets of {0..m-1} in ascending numeric order. Only called for small
// m (guarded by the ultrafilter carrier caps).
std::vector<SubsetMask> all_subsets(int m) {
  if (m > 20) fail(errc::budget_exceeded, "carrier too large to enumerate subsets");
  std::vector<SubsetMask> out;
  out.reserve(size_t{1} << m);
  for (uint64_t bits = 0; bits < (uint64_t{1} << m); ++bits) {
    SubsetMask mask(m);
    for (int i = 0; i < m; ++i) {
      if ((bits >> i) & 1) mask.set(i);
    }
    out.push_back(std::move(mask));
  }
  return out;
}

}  // namespace

Ultrafilter Ultrafilter::from_family(int carrier_size, std::vector<SubsetMask> family) {
  UltrafilterCheck check = is_ultrafilter(family, carrier_size);
  if (!check.ok) {
    fail(errc::shape, "family violates ultrafilter axiom " +
                          std::to_string(check.violation->axiom));
  }
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
  // Principal witness: the intersection of all members. On a finite carrier
  // it is a singleton, and the family is exactly { A : witness in A }.
  SubsetMask core = SubsetMask::full(carrier_size);
  for (const SubsetMask& a : family) core = core & a;
  if (core.count() != 1) fail(errc::shape, "ultrafilter core is not a singleton");
  int witness = core.first();
  size_t expected = carrier_size >= 1 ? (size_t{1} << (carrier_size - 1)) : 0;
  if (family.size() != expected) fail(errc::shape, "family size does not match principal form");
  for (const SubsetMask& a : family) {
    if (!a.test(witness)) fail(errc::shape, "member missing the principal witness");
  }
  Ultrafilter mu;
  mu.carrier_size_ = carrier_size;
  mu.witness_ = witness;
  mu.family_ = std::move(family);
  return mu;
}

Ultrafilter Ultrafilter::principal(int s, int carrier_size) {
  if (s < 0 || s >= carrier_size) {
    fail(errc::index, "principal witness " + std::to_string(s) + " out of range for carrier " +
                          std::to_string(carrier_size));
  }
  std::vector<SubsetMask> family;
  for (SubsetMask& a : all_subsets(carrier_size)) {
    if (a.test(s)) family.push_back(std::move(a));
  }
  Ultrafilter mu;
  mu.carrier_size_ = carrier_size;
  mu.witness_ = s;
  mu.family_ = std::move(family);
  return mu;
}

bool Ultrafilter::contains(const SubsetMask& set) const {
  if (set.universe() != carrier_size_) fail(errc::shape, "membership test across carriers");
  // Consistency with the stored family is established at construction.
  return set.test(witness_);
}

Ultrafilter principal(int s, int carrier_size) { return Ultrafilter::principal(s, carrier_size); }

UltrafilterCheck is_ultrafilter(const std::vector<SubsetMask>& family, int carrier_size) {
  UltrafilterCheck out;
  for (const SubsetMask& a : family) {
    if (a.universe() != carrier_size) fail(errc::shape, "family mask universe mismatch");
  }
  auto member = [&](const SubsetMask& a) {
    return std::find(family.begin(), family.end(), a) != family.end();
  };
  std::vector<SubsetMask> sorted = family;
  std::sort(sorted.begin(), sorted.end());

  // 1: upward closure
  for (const SubsetMask& a : sorted) {
    for (const SubsetMask& b : all_subsets(carrier_size)) {
      if (a.subset_of(b) && !member(b)) {
        out.ok = false;
        out.violation = UltrafilterViolation{1, {a, b}};
        return out;
      }
    }
  }
  // 2: contains the carrier
  if (!member(SubsetMask::full(carrier_size))) {
    out.ok = false;
    out.violation = UltrafilterViolation{2, {SubsetMask::full(carrier_size)}};
    return out;
  }
  // 3: closed under binary intersection
  for (const SubsetMask& a : sorted) {
    for (const SubsetMask& b : sorted) {
      if (!member(a & b)) {
        out.ok = false;
        out.violation = UltrafilterViolation{3, {a, b}};
        return out;
      }
    }
  }
  // 4: exactly one of each complementary pair
  for (const SubsetMask& a : all_subsets(carrier_size)) {
    bool in_a = member(a);
    bool in_c = member(a.complement());
    if (in_a == in_c) {
      out.ok = false;
      out.violation = UltrafilterViolation{4, {a}};
      return out;
    }
  }
  return out;
}

std::vector<Ultrafilter> enumerate_ultrafilters(int carrier_size, int max_carrier) {
  if (carrier_size < 0) fail(errc::index, "negative carrier");
  if (carrier_size > max_carrier) {
    fail(errc::budget_exceeded, "carrier " + std::to_string(carrier_size) + " exceeds cap " +
                                    std::to_string(max_carrier));
  }
  std::vector<Ultrafilter> out;
  out.reserve(carrier_size);
  for (int s = 0; s < carrier_size; ++s) out.push_back(Ultrafilter::principal(s, carrier_size));
  return out;
}

Ultrafilter pushforward(std::span<const int> i, const Ultrafilter& mu, int target_size) {
  if (static_cast<int>(i.size()) != mu.carrier_size()) {
    fail(errc::shape, "pushforward map does not cover the carrier");
  }
  if (target_size > 20) fail(errc::budget_exceeded, "pushforward target too large");
  for (int v : i) {
    if (v < 0 || v >= target_size) fail(errc::index, "pushforward value out of range");
  }
  std::vector<SubsetMask> family;
  for (uint64_t bits = 0; bits < (uint64_t{1} << target_size); ++bits) {
    SubsetMask v(target_size);
    for (int t = 0; t < target_size; ++t) {
      if ((bits >> t) & 1) v.set(t);
    }
    SubsetMask preimage(mu.carrier_size());
    for (int s = 0; s < mu.carrier_size(); ++s) {
      if (v.test(i[s])) preimage.set(s);
    }
    if (mu.contains(preimage)) family.push_back(std::move(v));
  }
  return Ultrafilter::from_family(target_size, std::move(family));
}

UltraFamily::UltraFamily(std::vector<Ultrafilter> members) : members_(std::move(members)) {
  if (members_.empty()) fail(errc::shape, "empty ultrafilter family");
  carrier_size_ = members_[0].carrier_size();
  for (const Ultrafilter& mu : members_) {
    if (mu.carrier_size() != carrier_size_) fail(errc::shape, "family carriers differ");
  }
}

UltraFamily UltraFamily::constant(const Ultrafilter& mu, int index_size) {
  return UltraFamily(std::vector<Ultrafilter>(index_size, mu));
}

UltraFamily UltraFamily::principal_family(std::span<const int> i, int carrier_size) {
  std::vector<Ultrafilter> members;
  members.reserve(i.size());
  for (int s : i) members.push_back(Ultrafilter::principal(s, carrier_size));
  return UltraFamily(std::move(members));
}

Ultrafilter kleisli_pair(const UltraFamily& mu, const Ultrafilter& nu) {
  if (nu.carrier_size() != mu.index_size()) {
    fail(errc::shape, "pairing index set does not match the outer carrier");
  }
  if (mu.carrier_size() > 20) fail(errc::budget_exceeded, "pairing carrier too large");
  const int s_size = mu.carrier_size();
  const int t_size = mu.index_size();
  std::vector<SubsetMask> family;
  for (uint64_t bits = 0; bits < (uint64_t{1} << s_size); ++bits) {
    SubsetMask a(s_size);
    for (int s = 0; s < s_size; ++s) {
      if ((bits >> s) & 1) a.set(s);
    }
    SubsetMask hits(t_size);
    for (int t = 0; t < t_size; ++t) {
      if (mu[t].contains(a)) hits.set(t);
    }
    if (nu.contains(hits)) family.push_back(std::move(a));
  }
  return Ultrafilter::from_family(s_size, std::move(family));
}

Ultrafilter gamma(const Ultrafilter& theta, int carrier_size) {
  if (theta.carrier_size() != carrier_size) {
    fail(errc::shape, "theta must live on the enumerated beta(S) carrier");
  }
  std::vector<Ultrafilter> beta_s = enumerate_ultrafilters(carrier_size);
  std::vector<SubsetMask> family;
  for (uint64_t bits = 0; bits < (uint64_t{1} << carrier_size); ++bits) {
    SubsetMask a(carrier_size);
    for (int s = 0; s < carrier_size; ++s) {
      if ((bits >> s) & 1) a.set(s);
    }
    SubsetMask holders(static_cast<int>(beta_s.size()));
    for (size_t j = 0; j < beta_s.size(); ++j) {
      if (beta_s[j].contains(a)) holders.set(static_cast<int>(j));
    }
    if (theta.contains(holders)) family.push_back(std::move(a));
  }
  return Ultrafilter::from_family(carrier_size, std::move(family));
}

Ultrafilter extend_fip(const std::vector<SubsetMask>& family, int carrier_size) {
  SubsetMask core = SubsetMask::full(carrier_size);
  for (const SubsetMask& a : family) {
    if (a.universe() != carrier_size) fail(errc::shape, "family mask universe mismatch");
    core = core & a;
  }
  // A finite family has FIP iff its whole intersection is nonempty (the
  // family is a finite subfamily of itself).
  if (core.empty()) fail(errc::shape, "family lacks the finite intersection property");
  Ultrafilter mu = Ultrafilter::principal(core.first(), carrier_size);
  for (const SubsetMask& a : family) {
    if (!mu.contains(a)) fail(errc::theorem_failure, "extension does not contain the family");
  }
  return mu;
}

}  // namespace upo
