#include <doctest.h>

#include <algorithm>

#include "ultraposet/poset.hpp"

using namespace upo;

namespace {

// Independent oracle: every subset of a small carrier, filtered by downward
// closure directly against the order relation.
std::vector<SubsetMask> brute_downsets(const Poset& p) {
  std::vector<SubsetMask> out;
  const int n = p.size();
  REQUIRE(n <= 15);
  for (uint32_t bits = 0; bits < (1u << n); ++bits) {
    SubsetMask mask(n);
    for (int i = 0; i < n; ++i) {
      if ((bits >> i) & 1) mask.set(i);
    }
    bool down = true;
    for (int a = 0; a < n && down; ++a) {
      for (int b = 0; b < n; ++b) {
        if (mask.test(a) && p.leq(b, a) && !mask.test(b)) down = false;
      }
    }
    if (down) out.push_back(std::move(mask));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("validate_poset builds chains and rejects cycles") {
  Poset chain = validate_poset(2, {{0, 1}});
  CHECK(chain.leq(0, 1));
  CHECK(!chain.leq(1, 0));
  CHECK(chain.leq(0, 0));

  Poset single = validate_poset(1, {});
  CHECK(single.size() == 1);

  CHECK_THROWS_AS(validate_poset(2, {{0, 1}, {1, 0}}), Error);
  try {
    validate_poset(2, {{0, 1}, {1, 0}});
  } catch (const Error& e) {
    CHECK(e.code() == errc::cycle);
  }
  try {
    validate_poset(2, {{0, 5}});
  } catch (const Error& e) {
    CHECK(e.code() == errc::index);
  }
}

TEST_CASE("validate_poset closes non-transitive input") {
  // covers of a 3-chain only
  Poset p = validate_poset(3, {{0, 1}, {1, 2}});
  CHECK(p.leq(0, 2));
  CHECK(p.covers() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
}

TEST_CASE("downsets of chains and antichains") {
  std::vector<SubsetMask> two_chain = downsets(make_chain(2));
  REQUIRE(two_chain.size() == 3);
  CHECK(two_chain[0].empty());
  CHECK(two_chain[1].elements() == std::vector<int>{0});
  CHECK(two_chain[2].elements() == std::vector<int>{0, 1});

  CHECK(downsets(make_antichain(2)).size() == 4);
  CHECK(downsets(make_chain(3)).size() == brute_downsets(make_chain(3)).size());
  CHECK(downsets(make_chain(3)).size() == 4);

  // n-chain has n+1 downsets, n-antichain has 2^n
  for (int n = 0; n <= 5; ++n) {
    CHECK(downsets(make_chain(n)).size() == static_cast<size_t>(n + 1));
    CHECK(downsets(make_antichain(n)).size() == (size_t{1} << n));
  }
}

TEST_CASE("downsets agree with the brute-force oracle on assorted posets") {
  std::vector<Poset> posets = {
      make_chain(4),
      make_antichain(3),
      validate_poset(4, {{0, 2}, {1, 2}, {1, 3}}),          // N poset
      validate_poset(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}),  // diamond
      validate_poset(5, {{0, 1}, {0, 2}, {2, 3}, {2, 4}}),
      validate_poset(0, {}),
  };
  for (const Poset& p : posets) {
    CHECK(downsets(p) == brute_downsets(p));
  }
}

TEST_CASE("upsets are complements of downsets") {
  Poset p = validate_poset(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  std::vector<SubsetMask> ups = upsets(p);
  std::vector<SubsetMask> expected;
  for (const SubsetMask& d : downsets(p)) expected.push_back(d.complement());
  std::sort(expected.begin(), expected.end());
  CHECK(ups == expected);
  for (const SubsetMask& u : ups) CHECK(is_upset(p, u));
}

TEST_CASE("linear extension respects the order") {
  Poset p = validate_poset(4, {{2, 0}, {3, 1}, {3, 0}});
  const std::vector<int>& ext = p.linear_extension();
  REQUIRE(ext.size() == 4);
  for (size_t i = 0; i < ext.size(); ++i) {
    for (size_t j = i + 1; j < ext.size(); ++j) {
      CHECK(!p.lt(ext[j], ext[i]));
    }
  }
}

TEST_CASE("monotone map validation and composition") {
  Poset chain3 = make_chain(3);
  Poset chain2 = make_chain(2);
  MonotoneMap collapse = make_monotone_map(chain3, chain2, {0, 0, 1});
  CHECK(collapse(1) == 0);
  CHECK_THROWS_AS(make_monotone_map(chain3, chain2, {1, 0, 1}), Error);

  MonotoneMap id3 = identity_map(chain3);
  MonotoneMap composed = compose(collapse, id3);
  CHECK(composed.values == collapse.values);
}

TEST_CASE("monotone map enumeration is lexicographic and budgeted") {
  std::vector<std::vector<int>> maps = monotone_maps(make_chain(2), make_chain(2));
  std::vector<std::vector<int>> expected = {{0, 0}, {0, 1}, {1, 1}};
  CHECK(maps == expected);

  // monotone self-maps of the 3-chain: C(5, 2) = 10 weakly increasing triples
  CHECK(monotone_maps(make_chain(3), make_chain(3)).size() == 10);
  CHECK_THROWS_AS(monotone_maps(make_antichain(10), make_antichain(10), 1000), Error);
  try {
    monotone_maps(make_antichain(10), make_antichain(10), 1000);
  } catch (const Error& e) {
    CHECK(e.code() == errc::budget_exceeded);
  }

  // empty domain: exactly the empty map
  CHECK(monotone_maps(make_antichain(0), make_chain(2)).size() == 1);
  // empty codomain, nonempty domain: no maps
  CHECK(monotone_maps(make_chain(2), make_antichain(0)).empty());
}

TEST_CASE("glb and lub searches") {
  Poset square = validate_poset(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  CHECK(poset_glb(square, 1, 2) == 0);
  CHECK(poset_lub(square, 1, 2) == 3);
  Poset vee = validate_poset(3, {{0, 1}, {0, 2}});
  CHECK(poset_lub(vee, 1, 2) == -1);
  CHECK(poset_glb(vee, 1, 2) == 0);
}

TEST_CASE("random posets from generated relations round-trip their downsets") {
  // hand-rolled generator: deterministic congruential sequence of pairs,
  // skipping those that would create a cycle
  uint64_t state = 12345;
  auto next = [&state](int bound) {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return static_cast<int>((state >> 33) % bound);
  };
  for (int trial = 0; trial < 25; ++trial) {
    int n = 1 + next(6);
    std::vector<std::pair<int, int>> pairs;
    for (int k = 0; k < n; ++k) {
      int a = next(n), b = next(n);
      if (a == b) continue;
      pairs.emplace_back(std::min(a, b), std::max(a, b));  // acyclic by index order
    }
    Poset p = validate_poset(n, pairs);
    CHECK(downsets(p) == brute_downsets(p));
  }
}
