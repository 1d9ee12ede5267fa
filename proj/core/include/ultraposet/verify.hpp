#pragma once

#include "ultraposet/corpus.hpp"
#include "ultraposet/duality.hpp"

namespace upo {

struct ReportEntry {
  std::string name;
  bool pass = false;
  std::string witness;  // failure detail, or a short success summary
  long long probes = 0;
  long long millis = 0;  // wall time; excluded from canonical serialization
};

struct DualityReport {
  std::vector<ReportEntry> entries;

  bool all_pass() const;
  const ReportEntry* first_failure() const;
};

enum class Suite { axioms, los, galois, duality, zero_dim, all };

const char* suite_name(Suite s);
Suite suite_from_name(const std::string& name);  // throws errc::parse

struct VerifyOptions {
  int max_poset_size = 5;  // corpus bound (posets up to this size; <= 6)
  ProbeBudget probe{3, 2, 3};
  long long map_budget = 10'000'000;
  int duality_lattice_cap = 8;  // |C|, |D| bound for pairwise duality checks
  int eta_canonical_cap = 8;    // eta runs on canonical ultraposets up to this size
  int closed_probe_s = 2;       // probe family size for closed-set enumeration
  int omega_cap = 512;          // max clcd size materialized as a lattice
  int patch_carrier_cap = 10;   // priestley_check carrier bound
  const std::atomic<bool>* cancel = nullptr;

  CheckOptions check_options() const { return CheckOptions{probe, cancel}; }
  CheckOptions closed_options() const {
    return CheckOptions{ProbeBudget{closed_probe_s, probe.max_t, probe.max_w}, cancel};
  }
};

/// A named ultraposet from the verification corpus.
struct CorpusUltraposet {
  std::string name;
  Ultraposet u;
};

/// The construction corpus the suites quantify over: discretes over every
/// corpus poset, canonical and spectrum ultraposets over every corpus
/// lattice, presheaves [P, 2] for small P, and a seeded family of products
/// and coproducts (covering every construction kind).
std::vector<CorpusUltraposet> build_construction_corpus(const VerifyOptions& opts);

DualityReport run_suite(Suite suite, const VerifyOptions& opts = {});

}  // namespace upo
