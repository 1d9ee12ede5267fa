#include "ultraposet/verify.hpp"

#include <chrono>
#include <functional>

namespace upo {

bool DualityReport::all_pass() const {
  for (const ReportEntry& e : entries) {
    if (!e.pass) return false;
  }
  return true;
}

const ReportEntry* DualityReport::first_failure() const {
  for (const ReportEntry& e : entries) {
    if (!e.pass) return &e;
  }
  return nullptr;
}

const char* suite_name(Suite s) {
  switch (s) {
    case Suite::axioms: return "axioms";
    case Suite::los: return "los";
    case Suite::galois: return "galois";
    case Suite::duality: return "duality";
    case Suite::zero_dim: return "zero-dim";
    case Suite::all: return "all";
  }
  return "?";
}

Suite suite_from_name(const std::string& name) {
  for (Suite s : {Suite::axioms, Suite::los, Suite::galois, Suite::duality, Suite::zero_dim,
                  Suite::all}) {
    if (name == suite_name(s)) return s;
  }
  fail(errc::parse, "unknown suite '" + name + "'");
}

namespace {

using Clock = std::chrono::steady_clock;

struct EntryResult {
  bool pass = true;
  std::string witness;
  long long probes = 0;

  void count(long long n) { probes += n; }
  void fail_with(const std::string& text) {
    if (pass) {
      pass = false;
      witness = text;
    }
  }
};

void run_entry(DualityReport& report, const std::string& name,
               const std::function<void(EntryResult&)>& body) {
  ReportEntry entry;
  entry.name = name;
  EntryResult result;
  auto start = Clock::now();
  try {
    body(result);
    entry.pass = result.pass;
    entry.witness = result.witness;
  } catch (const Error& e) {
    entry.pass = false;
    entry.witness = e.what();
  }
  entry.probes = result.probes;
  entry.millis =
      std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
  report.entries.push_back(std::move(entry));
}

// ---- axioms suite -----------------------------------------------------------

void beta_monad_entries(DualityReport& report) {
  run_entry(report, "beta/kleisli-identity", [](EntryResult& r) {
    // <mu, delta> = mu pointwise, and <delta o id, nu> = nu.
    for (int s_size = 1; s_size <= 3; ++s_size) {
      std::vector<Ultrafilter> beta_s = enumerate_ultrafilters(s_size);
      for (int t_size = 1; t_size <= 3; ++t_size) {
        std::vector<Ultrafilter> beta_t = enumerate_ultrafilters(t_size);
        std::vector<int> pick(t_size, 0);
        bool more = true;
        while (more) {
          std::vector<Ultrafilter> members;
          for (int t = 0; t < t_size; ++t) members.push_back(beta_s[pick[t]]);
          UltraFamily family(std::move(members));
          for (int t = 0; t < t_size; ++t) {
            r.count(1);
            if (!(kleisli_pair(family, beta_t[t]) == family[t])) {
              r.fail_with("<mu, delta> != mu at |S|=" + std::to_string(s_size));
            }
          }
          more = false;
          for (int i = 0; i < t_size && !more; ++i) {
            if (++pick[i] < s_size) more = true;
            else pick[i] = 0;
          }
        }
      }
      std::vector<int> id(s_size);
      for (int i = 0; i < s_size; ++i) id[i] = i;
      UltraFamily delta_id = UltraFamily::principal_family(id, s_size);
      for (const Ultrafilter& nu : beta_s) {
        r.count(1);
        if (!(kleisli_pair(delta_id, nu) == nu)) r.fail_with("<delta, nu> != nu");
      }
    }
  });

  run_entry(report, "beta/kleisli-associativity", [](EntryResult& r) {
    // <mu, <nu, lambda>> = <<mu, nu>, lambda> over carriers and index sets
    // of size <= 2.
    for (int s = 1; s <= 2; ++s) {
      std::vector<Ultrafilter> beta_s = enumerate_ultrafilters(s);
      for (int t = 1; t <= 2; ++t) {
        std::vector<Ultrafilter> beta_t = enumerate_ultrafilters(t);
        for (int w = 1; w <= 2; ++w) {
          std::vector<Ultrafilter> beta_w = enumerate_ultrafilters(w);
          std::vector<int> mu_pick(t, 0);
          bool mu_more = true;
          while (mu_more) {
            std::vector<Ultrafilter> mu_members;
            for (int i = 0; i < t; ++i) mu_members.push_back(beta_s[mu_pick[i]]);
            UltraFamily mu(std::move(mu_members));
            std::vector<int> nu_pick(w, 0);
            bool nu_more = true;
            while (nu_more) {
              std::vector<Ultrafilter> nu_members;
              for (int i = 0; i < w; ++i) nu_members.push_back(beta_t[nu_pick[i]]);
              UltraFamily nu(std::move(nu_members));
              for (const Ultrafilter& lambda : beta_w) {
                Ultrafilter inner = kleisli_pair(nu, lambda);  // on T
                Ultrafilter lhs = kleisli_pair(mu, inner);
                std::vector<Ultrafilter> mu_nu_members;
                for (int i = 0; i < w; ++i) mu_nu_members.push_back(kleisli_pair(mu, nu[i]));
                UltraFamily mu_nu(std::move(mu_nu_members));
                Ultrafilter rhs = kleisli_pair(mu_nu, lambda);
                r.count(1);
                if (!(lhs == rhs)) r.fail_with("Kleisli associativity failed");
              }
              nu_more = false;
              for (int i = 0; i < w && !nu_more; ++i) {
                if (++nu_pick[i] < t) nu_more = true;
                else nu_pick[i] = 0;
              }
            }
            mu_more = false;
            for (int i = 0; i < t && !mu_more; ++i) {
              if (++mu_pick[i] < s) mu_more = true;
              else mu_pick[i] = 0;
            }
          }
        }
      }
    }
  });

  run_entry(report, "beta/pushforward-pairing", [](EntryResult& r) {
    // i_* nu = <delta o i, nu> for every function i and every nu, carriers <= 3.
    for (int s = 1; s <= 3; ++s) {
      for (int t = 1; t <= 3; ++t) {
        std::vector<int> i(s, 0);
        bool more = true;
        while (more) {
          UltraFamily delta_i = UltraFamily::principal_family(i, t);
          for (const Ultrafilter& nu : enumerate_ultrafilters(s)) {
            r.count(1);
            if (!(pushforward(i, nu, t) == kleisli_pair(delta_i, nu))) {
              r.fail_with("i_* nu != <delta i, nu>");
            }
          }
          more = false;
          for (int k = 0; k < s && !more; ++k) {
            if (++i[k] < t) more = true;
            else i[k] = 0;
          }
        }
      }
    }
  });

  run_entry(report, "beta/carrier-count", [](EntryResult& r) {
    for (int m = 0; m <= 4; ++m) {
      r.count(1);
      if (static_cast<int>(enumerate_ultrafilters(m).size()) != m) {
        r.fail_with("|beta S| != |S| at m=" + std::to_string(m));
      }
    }
  });
}

void axiom_entries(DualityReport& report, const std::vector<CorpusUltraposet>& corpus,
                   const VerifyOptions& opts) {
  run_entry(report, "axioms/constructions", [&](EntryResult& r) {
    for (const CorpusUltraposet& item : corpus) {
      AxiomReport a = check_axioms(item.u, opts.check_options());
      r.count(a.probes);
      if (!a.pass()) r.fail_with(item.name + ": " + a.witness);
      if (!a.assoc_equality) {
        r.fail_with(item.name + ": lax associativity was not an equality");
      }
    }
    if (r.pass) r.witness = std::to_string(corpus.size()) + " constructions";
  });
}

// ---- los suite ---------------------------------------------------------------

void los_entries(DualityReport& report, const std::vector<DistLattice>& lattices,
                 const VerifyOptions& opts) {
  for (int s = 1; s <= 4; ++s) {
    run_entry(report, "los/hom-size-" + std::to_string(s), [&, s](EntryResult& r) {
      LosReport los = los_hom_check(s);
      r.count(los.probes);
      if (!los.ultrafilters_are_homs) r.fail_with(los.hom_witness);
      if (!los.every_filter_violates) r.fail_with("a non-ultra filter gave a lattice hom");
      if (r.pass) {
        r.witness = std::to_string(los.filters_scanned) + " non-ultra filters refuted";
      }
    });
  }
  run_entry(report, "los/spectrum-closure", [&](EntryResult& r) {
    for (size_t i = 0; i < lattices.size(); ++i) {
      SpectrumResult sp = mod_spectrum(lattices[i], opts.check_options());
      r.count(static_cast<long long>(sp.primes.size()));
    }
    r.witness = std::to_string(lattices.size()) + " lattices";
  });
}

// ---- galois / reconstruction / appendix suite ---------------------------------

void galois_entries(DualityReport& report, const std::vector<DistLattice>& lattices,
                    const VerifyOptions& opts) {
  CheckOptions check = opts.closed_options();

  run_entry(report, "reconstruction/counit", [&](EntryResult& r) {
    for (size_t i = 0; i < lattices.size(); ++i) {
      CounitResult c = counit(lattices[i], check);
      r.count(lattices[i].size());
      if (static_cast<int>(c.omega.pairs.size()) != lattices[i].size()) {
        r.fail_with("lattice #" + std::to_string(i) + ": |clcd(Mod D)| != |D|");
      }
    }
    if (r.pass) r.witness = std::to_string(lattices.size()) + " lattices";
  });

  run_entry(report, "reconstruction/idl", [&](EntryResult& r) {
    for (size_t i = 0; i < lattices.size(); ++i) {
      ReconstructIdlResult rec = reconstruct_idl(lattices[i], check);
      r.count(static_cast<long long>(rec.iso.size()));
      if (rec.idl.elements.size() != rec.clc_op.sets.size()) {
        r.fail_with("lattice #" + std::to_string(i) + ": |idl| != |clc|");
      }
    }
    if (r.pass) r.witness = std::to_string(lattices.size()) + " lattices";
  });

  run_entry(report, "galois/roundtrip", [&](EntryResult& r) {
    // both round trips: I -> K_I -> I over all ideals, K -> I_K -> K over clc
    for (size_t i = 0; i < lattices.size(); ++i) {
      SpectrumResult sp = mod_spectrum(lattices[i], check);
      for (const Ideal& ideal : ideals(lattices[i])) {
        r.count(1);
        SubsetMask k = galois(sp, ideal);
        if (!(galois_inv(sp, k).elems == ideal.elems)) {
          r.fail_with("lattice #" + std::to_string(i) + ": I -> K_I -> I failed");
        }
      }
      for (const SubsetMask& k : clc(sp.spectrum, check)) {
        r.count(1);
        Ideal ideal = galois_inv(sp, k);
        if (!(galois(sp, ideal) == k)) {
          r.fail_with("lattice #" + std::to_string(i) + ": K -> I_K -> K failed");
        }
      }
    }
  });

  run_entry(report, "galois/separation", [&](EntryResult& r) {
    // For K in clc(Mod D) and x outside K there is p with K <= B_p, x in O_p;
    // hence K is the intersection of the B_p above it.
    for (size_t i = 0; i < lattices.size(); ++i) {
      const DistLattice& d = lattices[i];
      SpectrumResult sp = mod_spectrum(d, check);
      const int m = static_cast<int>(sp.primes.size());
      std::vector<SubsetMask> b(d.size(), SubsetMask(m));
      for (int p = 0; p < d.size(); ++p) {
        for (int k = 0; k < m; ++k) {
          if (sp.primes[k].test(p)) b[p].set(k);
        }
      }
      for (const SubsetMask& k : clc(sp.spectrum, check)) {
        SubsetMask inter = SubsetMask::full(m);
        for (int p = 0; p < d.size(); ++p) {
          if (k.subset_of(b[p])) inter = inter & b[p];
        }
        r.count(1);
        if (!(inter == k)) {
          r.fail_with("lattice #" + std::to_string(i) + ": K != intersection of B_p");
        }
        for (int x = 0; x < m; ++x) {
          if (k.test(x)) continue;
          bool separated = false;
          for (int p = 0; p < d.size() && !separated; ++p) {
            if (k.subset_of(b[p]) && !b[p].test(x)) separated = true;
          }
          if (!separated) {
            r.fail_with("lattice #" + std::to_string(i) + ": no separating primitive");
          }
        }
      }
    }
    if (r.pass) r.witness = std::to_string(lattices.size()) + " lattices";
  });

  run_entry(report, "appendix/prime-separation", [&](EntryResult& r) {
    for (size_t i = 0; i < lattices.size(); ++i) {
      const DistLattice& d = lattices[i];
      for (int p = 0; p < d.size(); ++p) {
        for (int q = 0; q < d.size(); ++q) {
          if (d.leq(p, q)) continue;
          r.count(1);
          PrimeIdeal x = prime_separation(d, p, q);
          if (!x.elems.test(q) || x.elems.test(p)) {
            r.fail_with("lattice #" + std::to_string(i) + ": bad separator");
          }
        }
      }
    }
  });

  run_entry(report, "appendix/ideal-meet-of-primes", [&](EntryResult& r) {
    for (size_t i = 0; i < lattices.size(); ++i) {
      for (const Ideal& ideal : ideals(lattices[i])) {
        r.count(1);
        if (!ideal_is_meet_of_primes(lattices[i], ideal).holds) {
          r.fail_with("lattice #" + std::to_string(i) + ": ideal not a meet of primes");
        }
      }
    }
  });

  run_entry(report, "appendix/maximal-disjoint-prime", [&](EntryResult& r) {
    // max_ideal_disjoint asserts primality of the maximal ideal internally.
    for (size_t i = 0; i < lattices.size(); ++i) {
      for (const Ideal& ideal : ideals(lattices[i])) {
        for (const Filter& filter : filters(lattices[i])) {
          if (ideal.elems.intersects(filter.elems)) continue;
          r.count(1);
          max_ideal_disjoint(lattices[i], ideal, filter);
        }
      }
    }
  });

  run_entry(report, "appendix/fip-extension", [&](EntryResult& r) {
    for (int m = 1; m <= 4; ++m) {
      const int num_subsets = 1 << m;
      std::vector<SubsetMask> subsets;
      for (int bits = 0; bits < num_subsets; ++bits) {
        SubsetMask mask(m);
        for (int i = 0; i < m; ++i) {
          if ((bits >> i) & 1) mask.set(i);
        }
        subsets.push_back(std::move(mask));
      }
      for (uint64_t family_bits = 0; family_bits < (uint64_t{1} << num_subsets); ++family_bits) {
        std::vector<SubsetMask> family;
        SubsetMask core = SubsetMask::full(m);
        for (int a = 0; a < num_subsets; ++a) {
          if ((family_bits >> a) & 1) {
            family.push_back(subsets[a]);
            core = core & subsets[a];
          }
        }
        if (core.empty()) continue;  // lacks FIP
        r.count(1);
        Ultrafilter mu = extend_fip(family, m);
        for (const SubsetMask& a : family) {
          if (!mu.contains(a)) r.fail_with("FIP extension missed a member");
        }
      }
    }
  });

  run_entry(report, "appendix/model-prime-bijection", [&](EntryResult& r) {
    for (size_t i = 0; i < lattices.size(); ++i) {
      ModelPrimeTable table = model_prime_correspondence(lattices[i]);
      r.count(static_cast<long long>(table.homs.size()));
      if (!table.bijective) r.fail_with("lattice #" + std::to_string(i));
    }
  });
}

// ---- duality suite --------------------------------------------------------------

void duality_entries(DualityReport& report, const std::vector<DistLattice>& lattices,
                     const VerifyOptions& opts) {
  CheckOptions check = opts.check_options();
  std::vector<const DistLattice*> small;
  for (const DistLattice& d : lattices) {
    if (d.size() <= opts.duality_lattice_cap) small.push_back(&d);
  }

  run_entry(report, "duality/full-faithfulness", [&](EntryResult& r) {
    for (size_t a = 0; a < small.size(); ++a) {
      for (size_t b = 0; b < small.size(); ++b) {
        FullFaithfulnessResult ff =
            mod_full_faithful_check(*small[a], *small[b], opts.map_budget, check);
        r.count(ff.lattice_homs);
        if (!ff.bijective) {
          r.fail_with("pair (" + std::to_string(a) + "," + std::to_string(b) +
                      "): hom sets differ");
        }
        if (!ff.counit_recovers) {
          r.fail_with("pair (" + std::to_string(a) + "," + std::to_string(b) +
                      "): counit recovery failed");
        }
      }
    }
    if (r.pass) {
      r.witness = std::to_string(small.size() * small.size()) + " pairs";
    }
  });

  run_entry(report, "duality/pt-points", [&](EntryResult& r) {
    for (size_t i = 0; i < small.size(); ++i) {
      PtPointsResult pt = pt_points_check(*small[i], opts.map_budget);
      r.count(pt.frame_homs);
      if (!pt.bijective) r.fail_with("lattice #" + std::to_string(i));
    }
  });

  run_entry(report, "duality/pt-on-maps", [&](EntryResult& r) {
    for (size_t a = 0; a < small.size(); ++a) {
      for (size_t b = 0; b < small.size(); ++b) {
        r.count(pt_on_maps_check(*small[a], *small[b], opts.map_budget, check));
      }
    }
    if (r.pass) r.witness = std::to_string(small.size() * small.size()) + " pairs";
  });

  run_entry(report, "duality/hom-bijection", [&](EntryResult& r) {
    // P ranges over spectra of the small corpus and discrete posets of size
    // <= 3; Omega(P) then stays within the raised map budget.
    std::vector<Ultraposet> probes;
    for (const DistLattice* d : small) probes.push_back(mod_spectrum(*d, check).spectrum);
    for (int n = 0; n <= 3; ++n) probes.push_back(discrete_ultraposet(n));
    for (size_t p = 0; p < probes.size(); ++p) {
      for (size_t b = 0; b < small.size(); ++b) {
        HomBijectionResult hb =
            hom_bijection_check(probes[p], *small[b], opts.map_budget, check);
        r.count(hb.monotone_maps);
        if (!hb.bijective) {
          r.fail_with("probe #" + std::to_string(p) + " lattice #" + std::to_string(b) + ": " +
                      std::to_string(hb.monotone_maps) + " maps vs " +
                      std::to_string(hb.frame_homs) + " frame homs");
        }
      }
    }
  });

  run_entry(report, "duality/triangle-identities", [&](EntryResult& r) {
    EtaOptions eta_opts{check, opts.omega_cap};
    for (size_t i = 0; i < small.size(); ++i) {
      TriangleResult mod_side = triangle_check_lattice(*small[i], eta_opts);
      Ultraposet spectrum = mod_spectrum(*small[i], check).spectrum;
      TriangleResult omega_side = triangle_check_ultraposet(spectrum, eta_opts);
      r.count(2);
      if (!mod_side.mod_triangle) {
        r.fail_with("lattice #" + std::to_string(i) + ": Mod triangle failed");
      }
      if (!omega_side.omega_triangle) {
        r.fail_with("lattice #" + std::to_string(i) + ": Omega_u triangle failed");
      }
    }
  });

  run_entry(report, "duality/hom-naturality", [&](EntryResult& r) {
    // Naturality of phi -> (I -> phi^{-1}(K_I)) in the ultraposet argument,
    // probed along monotone maps psi : P' -> P.
    std::vector<const DistLattice*> targets;
    for (const DistLattice* d : small) {
      if (d->size() >= 2 && d->size() <= 4) targets.push_back(d);
    }
    for (const DistLattice* d : targets) {
      SpectrumResult sp = mod_spectrum(*d, check);
      IdealLattice idl = ideal_lattice(*d);
      std::vector<SubsetMask> k_of;
      for (const Ideal& ideal : idl.elements) k_of.push_back(galois(sp, ideal));
      Ultraposet p = mod_spectrum(*d, check).spectrum;
      for (int probe_size = 1; probe_size <= 2; ++probe_size) {
        Ultraposet p_probe = discrete_ultraposet(probe_size);
        for (const std::vector<int>& psi :
             monotone_maps(p_probe.carrier, p.carrier, opts.map_budget)) {
          for (const std::vector<int>& phi :
               monotone_maps(p.carrier, sp.spectrum.carrier, opts.map_budget)) {
            std::vector<int> composite(probe_size);
            for (int x = 0; x < probe_size; ++x) composite[x] = phi[psi[x]];
            for (size_t a = 0; a < idl.elements.size(); ++a) {
              SubsetMask via_p(p.size());
              for (int x = 0; x < p.size(); ++x) {
                if (k_of[a].test(phi[x])) via_p.set(x);
              }
              SubsetMask pulled(probe_size);
              for (int x = 0; x < probe_size; ++x) {
                if (via_p.test(psi[x])) pulled.set(x);
              }
              SubsetMask direct(probe_size);
              for (int x = 0; x < probe_size; ++x) {
                if (k_of[a].test(composite[x])) direct.set(x);
              }
              r.count(1);
              if (!(pulled == direct)) r.fail_with("naturality square failed");
            }
          }
        }
      }
    }
  });
}

// ---- zero-dimension / priestley / stone suite -------------------------------------

void zero_dim_entries(DualityReport& report, const std::vector<CorpusUltraposet>& corpus,
                      const std::vector<DistLattice>& lattices, const VerifyOptions& opts) {
  CheckOptions check = opts.closed_options();

  run_entry(report, "zerodim/separation", [&](EntryResult& r) {
    for (const CorpusUltraposet& item : corpus) {
      ZeroDimResult z = is_zero_dimensional(item.u, check);
      r.count(static_cast<long long>(z.separators.size()));
      if (!z.ok) {
        r.fail_with(item.name + ": (" + std::to_string(z.bad_p) + "," +
                    std::to_string(z.bad_q) + ") not separated");
      }
    }
    if (r.pass) r.witness = std::to_string(corpus.size()) + " ultraposets";
  });

  run_entry(report, "zerodim/eta-iso", [&](EntryResult& r) {
    // Canonical ultraposets above eta_canonical_cap skip the eta check: their
    // clcd has |downsets(U)| elements, beyond the lattice-table budget. The
    // zero-dimensionality and strict-associativity entries still cover them.
    int checked = 0, skipped = 0;
    EtaOptions eta_opts{check, opts.omega_cap};
    for (const CorpusUltraposet& item : corpus) {
      bool large_canonical = item.u.structure->kind() == ConstructionKind::canonical &&
                             item.u.size() > opts.eta_canonical_cap;
      if (large_canonical) {
        ++skipped;
        continue;
      }
      EtaResult e = eta(item.u, eta_opts);
      ++checked;
      r.count(1);
      if (!e.iso) r.fail_with(item.name + ": eta is not an isomorphism");
      if (!e.zero_dimensional) r.fail_with(item.name + ": not zero-dimensional");
    }
    if (r.pass) {
      r.witness = std::to_string(checked) + " checked, " + std::to_string(skipped) +
                  " large canonical carriers skipped";
    }
  });

  run_entry(report, "zerodim/strict-associativity", [&](EntryResult& r) {
    for (const CorpusUltraposet& item : corpus) {
      r.count(1);
      if (!strict_assoc_check(item.u, opts.check_options())) {
        r.fail_with(item.name + ": associativity not strict");
      }
    }
    if (r.pass) r.witness = std::to_string(corpus.size()) + " ultraposets";
  });

  run_entry(report, "zerodim/priestley", [&](EntryResult& r) {
    int checked = 0;
    for (const CorpusUltraposet& item : corpus) {
      if (item.u.size() > opts.patch_carrier_cap) continue;
      PriestleyResult p = priestley_check(item.u, check);
      ++checked;
      r.count(1);
      if (!p.priestley || !p.zero_dimensional) r.fail_with(item.name);
    }
    r.witness = std::to_string(checked) + " ultraposets under the patch cap";
  });

  run_entry(report, "zerodim/hom-classification", [&](EntryResult& r) {
    // Left/right/plain ultrafunctors into 2 classify closed downsets, closed
    // upsets, and complemented pairs, with the pointwise order matching
    // reverse inclusion / inclusion / reverse inclusion of down-components.
    Ultraposet two = canonical_two();
    int checked = 0;
    for (const CorpusUltraposet& item : corpus) {
      if (item.u.size() > 6) continue;
      ++checked;
      HomPoset left = hom_poset(UltraKind::left, item.u, two, opts.map_budget, check);
      HomPoset right = hom_poset(UltraKind::right, item.u, two, opts.map_budget, check);
      HomPoset plain = hom_poset(UltraKind::plain, item.u, two, opts.map_budget, check);
      std::vector<SubsetMask> downs = clc(item.u, check);
      std::vector<SubsetMask> ups = cld(item.u, check);
      std::vector<ClosedPair> pairs = clcd(item.u, check);
      r.count(static_cast<long long>(left.elements.size() + right.elements.size()));
      if (left.elements.size() != downs.size() || right.elements.size() != ups.size() ||
          plain.elements.size() != pairs.size()) {
        r.fail_with(item.name + ": hom-poset sizes disagree with closed-set counts");
        continue;
      }
      auto zero_set = [&](const std::vector<int>& phi) {
        SubsetMask out(item.u.size());
        for (int p = 0; p < item.u.size(); ++p) {
          if (phi[p] == 0) out.set(p);
        }
        return out;
      };
      for (size_t i = 0; i < left.elements.size(); ++i) {
        SubsetMask zi = zero_set(left.elements[i]);
        if (std::find(downs.begin(), downs.end(), zi) == downs.end()) {
          r.fail_with(item.name + ": left hom kernel is not a closed downset");
        }
        for (size_t j = 0; j < left.elements.size(); ++j) {
          bool anti = zero_set(left.elements[j]).subset_of(zi);
          if (left.order.leq(static_cast<int>(i), static_cast<int>(j)) != anti) {
            r.fail_with(item.name + ": left hom order is not reverse inclusion");
          }
        }
      }
      for (size_t i = 0; i < right.elements.size(); ++i) {
        SubsetMask oi = zero_set(right.elements[i]).complement();
        if (std::find(ups.begin(), ups.end(), oi) == ups.end()) {
          r.fail_with(item.name + ": right hom support is not a closed upset");
        }
      }
    }
    if (r.pass) r.witness = std::to_string(checked) + " ultraposets up to six elements";
  });

  run_entry(report, "stone/corpus-agreement", [&](EntryResult& r) {
    for (size_t i = 0; i < lattices.size(); ++i) {
      StoneResult s = stone_check(lattices[i], check);
      r.count(1);
      if (s.boolean != s.discrete_spectrum) r.fail_with("lattice #" + std::to_string(i));
    }
    if (r.pass) r.witness = std::to_string(lattices.size()) + " lattices";
  });

  run_entry(report, "stone/boolean-cases", [&](EntryResult& r) {
    // positives 2, 2^2, 2^3; negatives: chains with at least three elements
    for (int n = 1; n <= 3; ++n) {
      StoneResult s = stone_check(downset_lattice(make_antichain(n)), check);
      r.count(1);
      if (!s.boolean || !s.discrete_spectrum) {
        r.fail_with("2^" + std::to_string(n) + " not recognized as Boolean");
      }
    }
    for (int n = 3; n <= 6; ++n) {
      StoneResult s = stone_check(validate_dist_lattice(make_chain(n)), check);
      r.count(1);
      if (s.boolean || s.discrete_spectrum) {
        r.fail_with(std::to_string(n) + "-chain wrongly Boolean");
      }
    }
  });
}

}  // namespace

std::vector<CorpusUltraposet> build_construction_corpus(const VerifyOptions& opts) {
  std::vector<CorpusUltraposet> out;
  std::vector<Poset> posets = corpus_posets(opts.max_poset_size);
  std::vector<DistLattice> lattices = corpus_lattices(opts.max_poset_size);

  for (size_t i = 0; i < posets.size(); ++i) {
    out.push_back({"discrete/" + std::to_string(i), discrete_ultraposet(posets[i].size())});
  }
  for (size_t i = 0; i < lattices.size(); ++i) {
    out.push_back({"canonical/" + std::to_string(i), canonical_ultraposet(lattices[i])});
  }
  for (size_t i = 0; i < lattices.size(); ++i) {
    out.push_back({"mod/" + std::to_string(i), mod_spectrum_ultraposet(lattices[i])});
  }
  for (size_t i = 0; i < posets.size(); ++i) {
    if (posets[i].size() > 3) continue;
    out.push_back({"presheaf/" + std::to_string(i),
                   presheaf_ultraposet(posets[i], canonical_two(), opts.map_budget)});
  }
  // Products and coproducts over a small seed family, enough to exercise the
  // remaining construction kinds (including the empty product).
  std::vector<CorpusUltraposet> seeds;
  seeds.push_back({"discrete2", discrete_ultraposet(2)});
  seeds.push_back({"two", canonical_two()});
  seeds.push_back({"modchain3", mod_spectrum_ultraposet(validate_dist_lattice(make_chain(3)))});
  out.push_back({"product/empty", product_ultraposet({})});
  for (const CorpusUltraposet& a : seeds) {
    for (const CorpusUltraposet& b : seeds) {
      out.push_back({"product/" + a.name + "x" + b.name, product_ultraposet({a.u, b.u})});
      out.push_back(
          {"coproduct/" + a.name + "+" + b.name, coproduct_ultraposet(a.u, b.u)});
    }
  }
  return out;
}

DualityReport run_suite(Suite suite, const VerifyOptions& opts) {
  DualityReport report;
  std::vector<DistLattice> lattices = corpus_lattices(opts.max_poset_size);

  if (suite == Suite::axioms || suite == Suite::all) {
    std::vector<CorpusUltraposet> corpus = build_construction_corpus(opts);
    beta_monad_entries(report);
    axiom_entries(report, corpus, opts);
  }
  if (suite == Suite::los || suite == Suite::all) {
    los_entries(report, lattices, opts);
  }
  if (suite == Suite::galois || suite == Suite::all) {
    galois_entries(report, lattices, opts);
  }
  if (suite == Suite::duality || suite == Suite::all) {
    duality_entries(report, lattices, opts);
  }
  if (suite == Suite::zero_dim || suite == Suite::all) {
    std::vector<CorpusUltraposet> corpus = build_construction_corpus(opts);
    zero_dim_entries(report, corpus, lattices, opts);
  }
  return report;
}

}  // namespace upo
