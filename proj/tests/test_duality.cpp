#include <doctest.h>

#include <algorithm>

#include "ultraposet/corpus.hpp"
#include "ultraposet/duality.hpp"

using namespace upo;

namespace {

DistLattice chain_lattice(int n) { return validate_dist_lattice(make_chain(n)); }

DistLattice square_lattice() { return downset_lattice(make_antichain(2)); }

}  // namespace

TEST_CASE("mod_spectrum of small lattices") {
  SpectrumResult two = mod_spectrum(two_lattice());
  CHECK(two.spectrum.size() == 1);

  SpectrumResult chain3 = mod_spectrum(chain_lattice(3));
  REQUIRE(chain3.spectrum.size() == 2);
  // canonical prime order: {0} first, then {0,a}; spectrum order is reverse
  // inclusion, so {0,a} (index 1) <= {0} (index 0)
  CHECK(chain3.primes[0].elements() == std::vector<int>{0});
  CHECK(chain3.primes[1].elements() == std::vector<int>{0, 1});
  CHECK(chain3.spectrum.carrier.leq(1, 0));
  CHECK(!chain3.spectrum.carrier.leq(0, 1));

  SpectrumResult square = mod_spectrum(square_lattice());
  CHECK(square.spectrum.size() == 2);
  CHECK(square.spectrum.carrier.is_antichain());
}

TEST_CASE("los hom check: ultrafilters are homs, filters are refuted") {
  LosReport r2 = los_hom_check(2);
  CHECK(r2.ultrafilters_are_homs);
  CHECK(r2.every_filter_violates);
  REQUIRE(r2.filters_scanned == 1);  // only {S} is proper and non-ultra on 2 points
  // frozen witness: x = {0}, y = {1} under the join law
  REQUIRE(r2.violations.size() == 1);
  CHECK(r2.violations[0].law == "join");
  CHECK(r2.violations[0].x.elements() == std::vector<int>{0});
  CHECK(r2.violations[0].y.elements() == std::vector<int>{1});

  LosReport r3 = los_hom_check(3);
  CHECK(r3.ultrafilters_are_homs);
  CHECK(r3.every_filter_violates);
  CHECK(r3.filters_scanned > 1);
}

TEST_CASE("precomposition between presheaf ultraposets is an ultrafunctor") {
  // the presheaf assignment is contravariantly functorial: a monotone
  // sigma : P -> Q induces sigma* : [Q,2] -> [P,2] by precomposition
  std::vector<std::pair<Poset, Poset>> instances = {
      {make_chain(2), make_chain(3)},
      {make_antichain(2), make_chain(2)},
      {make_chain(3), validate_poset(3, {{0, 1}, {0, 2}})},
  };
  for (const auto& [p, q] : instances) {
    Ultraposet presheaf_q = presheaf_ultraposet(q, canonical_two());
    Ultraposet presheaf_p = presheaf_ultraposet(p, canonical_two());
    auto* sq = dynamic_cast<const PresheafStructure*>(presheaf_q.structure.get());
    auto* sp = dynamic_cast<const PresheafStructure*>(presheaf_p.structure.get());
    for (const std::vector<int>& sigma : monotone_maps(p, q)) {
      std::vector<int> star(presheaf_q.size());
      for (int x = 0; x < presheaf_q.size(); ++x) {
        std::vector<int> composed(p.size());
        for (int e = 0; e < p.size(); ++e) composed[e] = sq->elements()[x][sigma[e]];
        star[x] = sp->index_of(composed);
        REQUIRE(star[x] != -1);
      }
      CHECK(is_ultrafunctor(star, presheaf_q, presheaf_p).ok);
    }
  }
}

TEST_CASE("mod_on_hom computes preimages of primes") {
  DistLattice two = two_lattice();
  DistLattice chain3 = chain_lattice(3);

  // identity on 2
  LatticeHom id = make_lattice_hom(two, two, {0, 1});
  MonotoneMap star_id = mod_on_hom(id);
  CHECK(star_id.values == std::vector<int>{0});

  // ends-to-ends 2 -> 3-chain: both primes of the 3-chain pull back to {0}
  LatticeHom ends = make_lattice_hom(two, chain3, {0, 2});
  MonotoneMap star_ends = mod_on_hom(ends);
  CHECK(star_ends.values == std::vector<int>{0, 0});

  // 3-chain -> 2 with a -> 1: Mod(2) has one point; its preimage is {0}
  LatticeHom collapse = make_lattice_hom(chain3, two, {0, 1, 1});
  MonotoneMap star_collapse = mod_on_hom(collapse);
  REQUIRE(star_collapse.values.size() == 1);
  CHECK(star_collapse.values[0] == 0);  // the prime {0} of the 3-chain
}

TEST_CASE("omega_u rebuilds lattices from spectra") {
  // singleton ultraposet: clcd has two pairs, giving the lattice 2
  OmegaUResult singleton = omega_u(discrete_ultraposet(1));
  CHECK(singleton.lattice.size() == 2);

  // Mod(3-chain): omega_u is a 3-chain again
  OmegaUResult chain3 = omega_u(mod_spectrum(chain_lattice(3)).spectrum);
  CHECK(chain3.lattice.size() == 3);
  int covers = static_cast<int>(chain3.lattice.poset.covers().size());
  CHECK(covers == 2);

  // two discrete points: the Boolean square
  OmegaUResult square = omega_u(discrete_ultraposet(2));
  CHECK(square.lattice.size() == 4);
  CHECK(is_boolean(square.lattice));
}

TEST_CASE("omega gives the closed-downset frame, opposed") {
  // Omega(Mod(3-chain)) = clc of a 2-chain, opposed: a 3-chain again, and
  // meets/joins are unions/intersections of the underlying sets
  OmegaResult o = omega(mod_spectrum(chain_lattice(3)).spectrum);
  REQUIRE(o.sets.size() == 3);
  CHECK(o.lattice.size() == 3);
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      CHECK(o.sets[o.lattice.meet(a, b)] == (o.sets[a] | o.sets[b]));
      CHECK(o.sets[o.lattice.join(a, b)] == (o.sets[a] & o.sets[b]));
    }
  }
  // bottom of the frame is the whole carrier, top is the empty set
  CHECK(o.sets[o.lattice.bot].is_full());
  CHECK(o.sets[o.lattice.top].empty());
}

TEST_CASE("the pairing against delta_0 is the projection onto coordinate 0") {
  DistLattice two = two_lattice();
  Ultrafilter mu = principal(0, 2);
  for (int bits = 0; bits < 4; ++bits) {
    std::vector<int> x{bits & 1, (bits >> 1) & 1};
    CHECK(canonical_filter_pair(two, x, mu.family()) == x[0]);
  }
}

TEST_CASE("two routes to the pairing on 2 agree: join-of-meets vs membership") {
  // <x, mu> = 1 can be computed by the canonical formula or, independently,
  // by testing whether x (as a subset) is a member of mu
  DistLattice two = two_lattice();
  for (int m = 1; m <= 3; ++m) {
    for (const Ultrafilter& mu : enumerate_ultrafilters(m)) {
      for (uint32_t bits = 0; bits < (1u << m); ++bits) {
        std::vector<int> x(m);
        SubsetMask ones(m);
        for (int i = 0; i < m; ++i) {
          x[i] = (bits >> i) & 1;
          if (x[i]) ones.set(i);
        }
        int via_formula = canonical_filter_pair(two, x, mu.family());
        int via_membership = mu.contains(ones) ? 1 : 0;
        CHECK(via_formula == via_membership);
      }
    }
  }
}

TEST_CASE("galois maps round-trip and match primitive subsets") {
  DistLattice chain3 = chain_lattice(3);
  SpectrumResult sp = mod_spectrum(chain3);

  Ideal bot_ideal = principal_ideal(chain3, 0);
  SubsetMask k = galois(sp, bot_ideal);
  CHECK(k.is_full());  // both primes contain bot
  CHECK(galois_inv(sp, k).elems == bot_ideal.elems);

  // K of a principal ideal is the primitive set B_p
  for (int p = 0; p < chain3.size(); ++p) {
    SubsetMask b_p(static_cast<int>(sp.primes.size()));
    for (size_t i = 0; i < sp.primes.size(); ++i) {
      if (sp.primes[i].test(p)) b_p.set(static_cast<int>(i));
    }
    CHECK(galois(sp, principal_ideal(chain3, p)) == b_p);
  }

  // the empty subset induces the improper ideal
  Ideal improper = galois_inv(sp, SubsetMask(2));
  CHECK(improper.elems.is_full());
  CHECK(!improper.is_proper(chain3));
}

TEST_CASE("reconstruct_idl verifies the lattice isomorphism") {
  for (const DistLattice& d : {two_lattice(), chain_lattice(3), square_lattice()}) {
    ReconstructIdlResult rec = reconstruct_idl(d);
    CHECK(rec.idl.elements.size() == static_cast<size_t>(d.size()));  // finite: all principal
    CHECK(rec.clc_op.sets.size() == rec.idl.elements.size());
  }
}

TEST_CASE("counit sends p to (B_p, O_p) bijectively") {
  DistLattice chain3 = chain_lattice(3);
  CounitResult c = counit(chain3);
  REQUIRE(c.omega.pairs.size() == 3);
  // 0 -> (all models, empty), a -> ({{0,a}}, {{0}}), 1 -> (empty, all)
  CHECK(c.omega.pairs[c.hom.values[0]].down.is_full());
  CHECK(c.omega.pairs[c.hom.values[1]].down == SubsetMask::singleton(1, 2));
  CHECK(c.omega.pairs[c.hom.values[2]].down.empty());

  CounitResult two = counit(two_lattice());
  CHECK(two.omega.pairs.size() == 2);

  CounitResult square = counit(square_lattice());
  CHECK(square.omega.pairs.size() == 4);
  CHECK(square.spectrum.spectrum.size() == 2);
}

TEST_CASE("eta is an isomorphism on spectra and small corpus ultraposets") {
  EtaResult singleton = eta(discrete_ultraposet(1));
  CHECK(singleton.iso);
  CHECK(singleton.omega_spectrum.spectrum.size() == 1);  // Mod(2)

  for (const DistLattice& d : {two_lattice(), chain_lattice(3), square_lattice()}) {
    EtaResult e = eta(mod_spectrum(d).spectrum);
    CHECK(e.iso);
    CHECK(e.zero_dimensional);
  }

  for (const DistLattice& d : corpus_lattices(3)) {
    if (d.size() > 6) continue;
    EtaResult e = eta(canonical_ultraposet(d));
    CHECK(e.iso);
  }
}

TEST_CASE("zero-dimensionality with principal-downset witnesses") {
  ZeroDimResult singleton = is_zero_dimensional(discrete_ultraposet(1));
  CHECK(singleton.ok);
  CHECK(singleton.separators.empty());

  for (const DistLattice& d : corpus_lattices(3)) {
    Ultraposet u = mod_spectrum_ultraposet(d);
    ZeroDimResult z = is_zero_dimensional(u);
    CHECK(z.ok);
    // every p !<= q is separated by the pair built on the downset of q
    for (int p = 0; p < u.size(); ++p) {
      for (int q = 0; q < u.size(); ++q) {
        if (u.carrier.leq(p, q)) continue;
        SubsetMask down_q = principal_downset(u.carrier, q);
        ClosedPair candidate = make_closed_pair(u, down_q);
        CHECK(candidate.down.test(q));
        CHECK(candidate.up.test(p));
      }
    }
  }
}

TEST_CASE("strict associativity holds on zero-dimensional carriers") {
  CHECK(strict_assoc_check(mod_spectrum(chain_lattice(3)).spectrum));
  CHECK(strict_assoc_check(discrete_ultraposet(3)));
  CHECK(strict_assoc_check(canonical_ultraposet(chain_lattice(3))));
}

TEST_CASE("priestley and stone checks") {
  PriestleyResult p = priestley_check(mod_spectrum(chain_lattice(3)).spectrum);
  CHECK(p.priestley);
  CHECK(p.zero_dimensional);

  StoneResult square = stone_check(square_lattice());
  CHECK(square.boolean);
  CHECK(square.discrete_spectrum);

  StoneResult chain3 = stone_check(chain_lattice(3));
  CHECK(!chain3.boolean);
  CHECK(!chain3.discrete_spectrum);

  StoneResult two = stone_check(two_lattice());
  CHECK(two.boolean);
  CHECK(two.discrete_spectrum);
}

TEST_CASE("pt points biject with primes through the ideal frame") {
  for (const DistLattice& d : {two_lattice(), chain_lattice(3), chain_lattice(4),
                               square_lattice()}) {
    PtPointsResult pt = pt_points_check(d);
    CHECK(pt.bijective);
    CHECK(pt.frame_homs == pt.primes);
  }
  // explicit count: 3-chain has two primes, so two frame homs idl -> 2
  CHECK(pt_points_check(chain_lattice(3)).frame_homs == 2);
}

TEST_CASE("pt on localic maps yields left ultrafunctors") {
  CHECK(pt_on_maps_check(chain_lattice(3), two_lattice()) > 0);
  CHECK(pt_on_maps_check(square_lattice(), chain_lattice(3)) > 0);
}

TEST_CASE("hom bijection instances") {
  // P = Mod(3-chain), D = 3-chain
  DistLattice chain3 = chain_lattice(3);
  HomBijectionResult a = hom_bijection_check(mod_spectrum(chain3).spectrum, chain3);
  CHECK(a.bijective);
  CHECK(a.monotone_maps == 3);  // monotone self-maps of the 2-chain

  // P = singleton, D = 2
  HomBijectionResult b = hom_bijection_check(discrete_ultraposet(1), two_lattice());
  CHECK(b.bijective);
  CHECK(b.monotone_maps == 1);

  // P = 2-point discrete, D = Boolean square: 4 maps on both sides
  HomBijectionResult c = hom_bijection_check(discrete_ultraposet(2), square_lattice());
  CHECK(c.bijective);
  CHECK(c.monotone_maps == 4);
}

TEST_CASE("mod is fully faithful on small pairs") {
  FullFaithfulnessResult ff = mod_full_faithful_check(chain_lattice(3), square_lattice());
  CHECK(ff.bijective);
  CHECK(ff.counit_recovers);

  FullFaithfulnessResult ff2 = mod_full_faithful_check(square_lattice(), chain_lattice(4));
  CHECK(ff2.bijective);
  CHECK(ff2.counit_recovers);
}

TEST_CASE("triangle identities hold") {
  for (const DistLattice& d : {two_lattice(), chain_lattice(3), square_lattice()}) {
    CHECK(triangle_check_lattice(d).mod_triangle);
    CHECK(triangle_check_ultraposet(mod_spectrum(d).spectrum).omega_triangle);
  }
  CHECK(triangle_check_ultraposet(discrete_ultraposet(2)).omega_triangle);
  CHECK(triangle_check_ultraposet(canonical_ultraposet(chain_lattice(3))).omega_triangle);
}

TEST_CASE("cardinality invariants over a small corpus") {
  for (const DistLattice& d : corpus_lattices(3)) {
    SpectrumResult sp = mod_spectrum(d);
    CHECK(clcd(sp.spectrum).size() == static_cast<size_t>(d.size()));
    CHECK(clc(sp.spectrum).size() == ideals(d).size());
  }
}
