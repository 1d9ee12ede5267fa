#include <doctest.h>

#include <algorithm>

#include "ultraposet/ultrafilter.hpp"

using namespace upo;

namespace {

// Independent axiom checker used by the brute-force enumeration oracle.
bool brute_is_ultrafilter(uint32_t family_bits, int m) {
  const int num_subsets = 1 << m;
  auto member = [&](int a) { return (family_bits >> a) & 1; };
  if (!member(num_subsets - 1)) return false;
  for (int a = 0; a < num_subsets; ++a) {
    for (int b = 0; b < num_subsets; ++b) {
      if (member(a) && (a | b) == b && !member(b)) return false;  // upward
      if (member(a) && member(b) && !member(a & b)) return false;
    }
  }
  for (int a = 0; a < num_subsets; ++a) {
    int comp = (num_subsets - 1) & ~a;
    if (member(a) == member(comp)) return false;  // exactly one of the pair
  }
  return true;
}

SubsetMask mask_of(std::initializer_list<int> elems, int m) {
  SubsetMask out(m);
  for (int e : elems) out.set(e);
  return out;
}

}  // namespace

TEST_CASE("principal ultrafilters unfold the definition") {
  Ultrafilter d0 = principal(0, 2);
  REQUIRE(d0.family().size() == 2);
  CHECK(d0.family()[0] == mask_of({0}, 2));
  CHECK(d0.family()[1] == mask_of({0, 1}, 2));
  CHECK(d0.witness() == 0);

  try {
    principal(1, 1);
    FAIL("index must be rejected");
  } catch (const Error& e) {
    CHECK(e.code() == errc::index);
  }

  Ultrafilter d2 = principal(2, 3);
  CHECK(d2.family().size() == 4);
  for (const SubsetMask& a : d2.family()) CHECK(a.test(2));
}

TEST_CASE("is_ultrafilter reports the first violated axiom") {
  CHECK(is_ultrafilter({mask_of({0}, 2), mask_of({0, 1}, 2)}, 2).ok);

  UltrafilterCheck only_full = is_ultrafilter({mask_of({0, 1}, 2)}, 2);
  CHECK(!only_full.ok);
  CHECK(only_full.violation->axiom == 4);  // neither {0} nor {1} present

  UltrafilterCheck both = is_ultrafilter({mask_of({0}, 2), mask_of({1}, 2), mask_of({0, 1}, 2)}, 2);
  CHECK(!both.ok);
  CHECK(both.violation->axiom == 3);  // {0} & {1} = empty set missing
  REQUIRE(both.violation->witness.size() == 2);
}

TEST_CASE("enumeration finds exactly the principal ultrafilters") {
  std::vector<Ultrafilter> three = enumerate_ultrafilters(3);
  REQUIRE(three.size() == 3);
  for (int s = 0; s < 3; ++s) CHECK(three[s].witness() == s);

  CHECK(enumerate_ultrafilters(1).size() == 1);
  CHECK(enumerate_ultrafilters(0).empty());  // no ultrafilters on the empty set

  // brute force over every family of subsets, for carriers up to 3
  for (int m = 0; m <= 3; ++m) {
    int count = 0;
    const uint64_t family_space = uint64_t{1} << (1 << m);
    for (uint64_t bits = 0; bits < family_space; ++bits) {
      if (brute_is_ultrafilter(static_cast<uint32_t>(bits), m)) ++count;
    }
    CHECK(count == m);
  }

  try {
    enumerate_ultrafilters(40);
    FAIL("cap must apply");
  } catch (const Error& e) {
    CHECK(e.code() == errc::budget_exceeded);
  }
}

TEST_CASE("pushforward follows the membership formula") {
  Ultrafilter mu = principal(1, 3);
  std::vector<int> constant{2, 2, 2};
  CHECK(pushforward(constant, mu, 4).witness() == 2);

  std::vector<int> identity{0, 1, 2};
  CHECK(pushforward(identity, mu, 3) == mu);

  std::vector<int> inject{3, 1, 0};
  Ultrafilter pushed = pushforward(inject, mu, 4);
  CHECK(pushed.witness() == 1);
  // membership restricted along the injection recovers mu: V is in the
  // pushforward exactly when its preimage is in mu
  for (uint32_t bits = 0; bits < 16; ++bits) {
    SubsetMask v(4);
    for (int i = 0; i < 4; ++i) {
      if ((bits >> i) & 1) v.set(i);
    }
    SubsetMask preimage(3);
    for (int s = 0; s < 3; ++s) {
      if (v.test(inject[s])) preimage.set(s);
    }
    CHECK(pushed.contains(v) == mu.contains(preimage));
  }
}

TEST_CASE("kleisli pairing: identities and a hand-computed case") {
  // <mu, delta_t> = mu_t
  UltraFamily family({principal(1, 2), principal(0, 2)});
  CHECK(kleisli_pair(family, principal(0, 2)) == principal(1, 2));
  CHECK(kleisli_pair(family, principal(1, 2)) == principal(0, 2));

  // constant family collapses to its value
  UltraFamily constant = UltraFamily::constant(principal(2, 3), 2);
  CHECK(kleisli_pair(constant, principal(0, 2)) == principal(2, 3));
  CHECK(kleisli_pair(constant, principal(1, 2)) == principal(2, 3));

  // S = T = {0,1}, mu = (delta_1, delta_0), nu = delta_0: unfold the
  // definition by hand: A in <mu,nu> iff {t : A in mu_t} in nu iff A in mu_0
  Ultrafilter paired = kleisli_pair(family, principal(0, 2));
  for (uint32_t bits = 0; bits < 4; ++bits) {
    SubsetMask a(2);
    for (int i = 0; i < 2; ++i) {
      if ((bits >> i) & 1) a.set(i);
    }
    bool by_definition = principal(1, 2).contains(a);
    CHECK(paired.contains(a) == by_definition);
  }
}

TEST_CASE("gamma agrees with the kleisli route") {
  // theta = delta_{delta_s} collapses to delta_s
  for (int m = 1; m <= 3; ++m) {
    std::vector<Ultrafilter> beta = enumerate_ultrafilters(m);
    for (int s = 0; s < m; ++s) {
      Ultrafilter theta = principal(s, m);  // beta S enumerated as s-th position
      CHECK(gamma(theta, m) == principal(s, m));
    }
    // cross-check against <identity family, theta> for every theta on beta S
    UltraFamily identity(beta);
    for (int j = 0; j < m; ++j) {
      Ultrafilter theta = principal(j, m);
      CHECK(gamma(theta, m) == kleisli_pair(identity, theta));
    }
  }
}

TEST_CASE("families with the finite intersection property extend") {
  std::vector<SubsetMask> family = {mask_of({0, 1}, 3), mask_of({1, 2}, 3)};
  Ultrafilter mu = extend_fip(family, 3);
  CHECK(mu.witness() == 1);
  for (const SubsetMask& a : family) CHECK(mu.contains(a));

  try {
    extend_fip({mask_of({0}, 2), mask_of({1}, 2)}, 2);
    FAIL("no FIP");
  } catch (const Error& e) {
    CHECK(e.code() == errc::shape);
  }

  // exhaustive for carriers up to 3
  for (int m = 1; m <= 3; ++m) {
    const int num_subsets = 1 << m;
    for (uint32_t family_bits = 0; family_bits < (1u << num_subsets); ++family_bits) {
      std::vector<SubsetMask> candidate;
      SubsetMask core = SubsetMask::full(m);
      for (int a = 0; a < num_subsets; ++a) {
        if (!((family_bits >> a) & 1)) continue;
        SubsetMask mask(m);
        for (int i = 0; i < m; ++i) {
          if ((a >> i) & 1) mask.set(i);
        }
        core = core & mask;
        candidate.push_back(std::move(mask));
      }
      if (core.empty()) continue;
      Ultrafilter mu = extend_fip(candidate, m);
      for (const SubsetMask& a : candidate) CHECK(mu.contains(a));
    }
  }
}

TEST_CASE("ultrafilter constructor rejects inconsistent families") {
  // family of delta_0 on 2 with one member removed is not upward closed /
  // fails dichotomy
  try {
    Ultrafilter::from_family(2, {mask_of({0}, 2)});
    FAIL("must reject");
  } catch (const Error& e) {
    CHECK(e.code() == errc::shape);
  }
}
