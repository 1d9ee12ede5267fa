#include <doctest.h>

#include <thread>

#include "ultraposet/corpus.hpp"
#include "ultraposet/verify.hpp"

using namespace upo;

TEST_CASE("corpus poset counts match the known isomorphism-class counts") {
  // 1, 1, 2, 5, 16, 63 posets on 0..5 elements
  std::vector<int> expected_totals = {1, 2, 4, 9, 25, 88};
  for (int max_n = 0; max_n <= 5; ++max_n) {
    if (max_n < 4) {
      CHECK(static_cast<int>(corpus_posets(max_n).size()) == expected_totals[max_n]);
    }
  }
  CHECK(corpus_posets(4).size() == 25);
  CHECK(corpus_posets(5).size() == 88);
}

TEST_CASE("corpus posets are pairwise non-isomorphic") {
  std::vector<Poset> posets = corpus_posets(4);
  for (size_t i = 0; i < posets.size(); ++i) {
    for (size_t j = i + 1; j < posets.size(); ++j) {
      if (posets[i].size() != posets[j].size()) continue;
      CHECK(poset_canonical_bits(posets[i]) != poset_canonical_bits(posets[j]));
    }
  }
}

TEST_CASE("corpus lattices validate and have the right prime counts") {
  std::vector<Poset> posets = corpus_posets(4);
  std::vector<DistLattice> lattices = corpus_lattices(4);
  REQUIRE(posets.size() == lattices.size());
  for (size_t i = 0; i < posets.size(); ++i) {
    // Birkhoff: join-irreducibles (= primes of the downset lattice)
    // correspond to the base poset's elements
    CHECK(prime_ideals(lattices[i]).size() == static_cast<size_t>(posets[i].size()));
  }
}

TEST_CASE("corpus generation is deterministic") {
  std::vector<Poset> a = corpus_posets(4);
  std::vector<Poset> b = corpus_posets(4);
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
}

TEST_CASE("suite names round-trip") {
  for (Suite s : {Suite::axioms, Suite::los, Suite::galois, Suite::duality, Suite::zero_dim,
                  Suite::all}) {
    CHECK(suite_from_name(suite_name(s)) == s);
  }
  CHECK_THROWS_AS(suite_from_name("nope"), Error);
}

TEST_CASE("suites pass on a reduced corpus") {
  VerifyOptions opts;
  opts.max_poset_size = 3;
  opts.duality_lattice_cap = 5;
  for (Suite s : {Suite::axioms, Suite::los, Suite::galois, Suite::duality, Suite::zero_dim}) {
    DualityReport report = run_suite(s, opts);
    CHECK(report.all_pass());
    if (const ReportEntry* f = report.first_failure()) {
      MESSAGE("suite ", suite_name(s), " failed at ", f->name, ": ", f->witness);
    }
  }
}

TEST_CASE("pure operations are safe to run concurrently") {
  std::vector<DistLattice> lattices = corpus_lattices(3);
  std::vector<std::vector<int>> serial(lattices.size());
  for (size_t i = 0; i < lattices.size(); ++i) serial[i] = counit(lattices[i]).hom.values;

  std::vector<std::vector<int>> parallel(lattices.size());
  std::vector<std::thread> workers;
  for (int w = 0; w < 4; ++w) {
    workers.emplace_back([&, w] {
      for (size_t i = w; i < lattices.size(); i += 4) {
        parallel[i] = counit(lattices[i]).hom.values;
      }
    });
  }
  for (std::thread& t : workers) t.join();
  CHECK(parallel == serial);
}

TEST_CASE("construction corpus covers every construction kind") {
  VerifyOptions opts;
  opts.max_poset_size = 2;
  std::vector<CorpusUltraposet> corpus = build_construction_corpus(opts);
  bool seen[6] = {false, false, false, false, false, false};
  for (const CorpusUltraposet& item : corpus) {
    seen[static_cast<int>(item.u.structure->kind())] = true;
  }
  for (int k = 0; k < 6; ++k) CHECK(seen[k]);
}
