#include "ultraposet/ultraposet.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace upo {

namespace {

std::string tuple_str(std::span<const int> values) {
  std::string out = "(";
  for (size_t i = 0; i < values.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(values[i]);
  }
  return out + ")";
}

// Little-endian mixed-radix increment; returns false after the last tuple.
bool next_tuple(std::vector<int>& tuple, int radix) {
  for (size_t i = 0; i < tuple.size(); ++i) {
    if (++tuple[i] < radix) return true;
    tuple[i] = 0;
  }
  return false;
}

void check_cancel(const CheckOptions& opts) {
  if (opts.cancel && opts.cancel->load()) fail(errc::canceled, "operation canceled");
}

// Ordered injective tuples W -> {0..s-1}, lexicographic.
std::vector<std::vector<int>> injections(int w, int s) {
  std::vector<std::vector<int>> out;
  if (w > s) return out;
  std::vector<int> tuple(w, 0);
  while (true) {
    bool distinct = true;
    for (int a = 0; a < w && distinct; ++a) {
      for (int b = a + 1; b < w; ++b) {
        if (tuple[a] == tuple[b]) {
          distinct = false;
          break;
        }
      }
    }
    if (distinct) out.push_back(tuple);
    if (!next_tuple(tuple, s)) break;
  }
  return out;
}

}  // namespace

const char* construction_name(ConstructionKind k) {
  switch (k) {
    case ConstructionKind::discrete: return "discrete";
    case ConstructionKind::canonical: return "canonical";
    case ConstructionKind::mod_spectrum: return "mod";
    case ConstructionKind::presheaf: return "presheaf";
    case ConstructionKind::product: return "product";
    case ConstructionKind::coproduct: return "coproduct";
    case ConstructionKind::custom: return "custom";
  }
  return "?";
}

const char* ultra_kind_name(UltraKind k) {
  switch (k) {
    case UltraKind::left: return "left";
    case UltraKind::right: return "right";
    case UltraKind::plain: return "plain";
  }
  return "?";
}

int Ultraposet::pair(std::span<const int> f, const Ultrafilter& mu) const {
  if (static_cast<int>(f.size()) != mu.carrier_size()) {
    fail(errc::shape, "family index set does not match the ultrafilter carrier");
  }
  if (f.empty()) fail(errc::shape, "no ultrafilters exist on the empty index set");
  if (size() == 0) fail(errc::shape, "nonempty family into the empty carrier");
  for (int v : f) {
    if (v < 0 || v >= size()) fail(errc::index, "family value out of carrier range");
  }
  return structure->pair(f, mu);
}

std::vector<int> Ultraposet::pair_family(std::span<const int> f, const UltraFamily& mus) const {
  std::vector<int> out(mus.index_size());
  for (int t = 0; t < mus.index_size(); ++t) out[t] = pair(f, mus[t]);
  return out;
}

// --- structures -------------------------------------------------------------

int DiscreteStructure::pair(std::span<const int> f, const Ultrafilter& mu) const {
  // Convergence point: the unique x whose fiber lies in mu.
  int found = -1;
  for (size_t j = 0; j < f.size(); ++j) {
    int x = f[j];
    bool seen = false;
    for (size_t k = 0; k < j && !seen; ++k) seen = f[k] == x;
    if (seen) continue;
    SubsetMask fiber(mu.carrier_size());
    for (size_t s = 0; s < f.size(); ++s) {
      if (f[s] == x) fiber.set(static_cast<int>(s));
    }
    if (mu.contains(fiber)) {
      if (found != -1) fail(errc::theorem_failure, "two fibers in one ultrafilter");
      found = x;
    }
  }
  if (found == -1) fail(errc::theorem_failure, "no fiber lies in the ultrafilter");
  return found;
}

int CanonicalStructure::pair(std::span<const int> f, const Ultrafilter& mu) const {
  // join over A in mu of (meet over s in A of f(s)), over the stored family
  int acc = lattice_.bot;
  for (const SubsetMask& a : mu.family()) {
    int m = lattice_.top;
    for (int s : a.elements()) m = lattice_.meet(m, f[s]);
    acc = lattice_.join(acc, m);
  }
  return acc;
}

ModSpectrumStructure::ModSpectrumStructure(DistLattice lattice, std::vector<SubsetMask> primes)
    : lattice_(std::move(lattice)), primes_(std::move(primes)) {
  for (size_t k = 0; k < primes_.size(); ++k) index_[primes_[k]] = static_cast<int>(k);
}

int ModSpectrumStructure::index_of(const SubsetMask& prime) const {
  auto it = index_.find(prime);
  return it == index_.end() ? -1 : it->second;
}

int ModSpectrumStructure::pair(std::span<const int> f, const Ultrafilter& mu) const {
  SubsetMask result(lattice_.size());
  for (int p = 0; p < lattice_.size(); ++p) {
    SubsetMask preimage(mu.carrier_size());  // f^{-1}(C_p) = { s : p in f(s) }
    for (size_t s = 0; s < f.size(); ++s) {
      if (primes_[f[s]].test(p)) preimage.set(static_cast<int>(s));
    }
    if (mu.contains(preimage)) result.set(p);
  }
  int idx = index_of(result);
  if (idx == -1) {
    fail(errc::theorem_failure, "ultraproduct of prime ideals left the prime table");
  }
  return idx;
}

PresheafStructure::PresheafStructure(Poset base, Ultraposet target,
                                     std::vector<std::vector<int>> elements)
    : base_(std::move(base)), target_(std::move(target)), elements_(std::move(elements)) {
  for (size_t k = 0; k < elements_.size(); ++k) index_[elements_[k]] = static_cast<int>(k);
}

int PresheafStructure::index_of(const std::vector<int>& element) const {
  auto it = index_.find(element);
  return it == index_.end() ? -1 : it->second;
}

int PresheafStructure::pair(std::span<const int> f, const Ultrafilter& mu) const {
  std::vector<int> result(base_.size());
  std::vector<int> slot(f.size());
  for (int q = 0; q < base_.size(); ++q) {
    for (size_t s = 0; s < f.size(); ++s) slot[s] = elements_[f[s]][q];
    result[q] = target_.pair(slot, mu);
  }
  int idx = index_of(result);
  if (idx == -1) fail(errc::theorem_failure, "pointwise pairing left the presheaf carrier");
  return idx;
}

ProductStructure::ProductStructure(std::vector<Ultraposet> factors)
    : factors_(std::move(factors)) {
  for (const Ultraposet& f : factors_) total_ *= f.size();
}

std::vector<int> ProductStructure::decode(int index) const {
  std::vector<int> tuple(factors_.size());
  for (size_t i = factors_.size(); i-- > 0;) {
    tuple[i] = index % factors_[i].size();
    index /= factors_[i].size();
  }
  return tuple;
}

int ProductStructure::encode(std::span<const int> tuple) const {
  int index = 0;
  for (size_t i = 0; i < factors_.size(); ++i) index = index * factors_[i].size() + tuple[i];
  return index;
}

int ProductStructure::pair(std::span<const int> f, const Ultrafilter& mu) const {
  std::vector<std::vector<int>> tuples;
  tuples.reserve(f.size());
  for (int v : f) tuples.push_back(decode(v));
  std::vector<int> component(f.size());
  std::vector<int> result(factors_.size());
  for (size_t i = 0; i < factors_.size(); ++i) {
    for (size_t s = 0; s < f.size(); ++s) component[s] = tuples[s][i];
    result[i] = factors_[i].pair(component, mu);
  }
  return encode(result);
}

int CoproductStructure::pair(std::span<const int> f, const Ultrafilter& mu) const {
  const int n_left = left_.size();
  SubsetMask in_left(mu.carrier_size());
  for (size_t s = 0; s < f.size(); ++s) {
    if (f[s] < n_left) in_left.set(static_cast<int>(s));
  }
  bool use_left = mu.contains(in_left);
  SubsetMask w = use_left ? in_left : in_left.complement();
  std::vector<int> positions = w.elements();
  std::vector<int> sub(positions.size());
  for (size_t k = 0; k < positions.size(); ++k) {
    sub[k] = use_left ? f[positions[k]] : f[positions[k]] - n_left;
  }
  // restriction of mu to w: { A & w reindexed : A in mu }
  std::set<SubsetMask> restricted;
  for (const SubsetMask& a : mu.family()) {
    SubsetMask r(static_cast<int>(positions.size()));
    for (size_t k = 0; k < positions.size(); ++k) {
      if (a.test(positions[k])) r.set(static_cast<int>(k));
    }
    restricted.insert(std::move(r));
  }
  Ultrafilter nu = Ultrafilter::from_family(
      static_cast<int>(positions.size()),
      std::vector<SubsetMask>(restricted.begin(), restricted.end()));
  int res = (use_left ? left_ : right_).pair(sub, nu);
  return use_left ? res : res + n_left;
}

// --- construction factories ---------------------------------------------------

Ultraposet discrete_ultraposet(int n) {
  return Ultraposet{make_antichain(n), std::make_shared<DiscreteStructure>(n)};
}

Ultraposet canonical_ultraposet(DistLattice lattice) {
  Poset carrier = lattice.poset;
  return Ultraposet{std::move(carrier), std::make_shared<CanonicalStructure>(std::move(lattice))};
}

Ultraposet canonical_two() { return canonical_ultraposet(two_lattice()); }

Ultraposet mod_spectrum_ultraposet(const DistLattice& lattice) {
  std::vector<PrimeIdeal> primes = prime_ideals(lattice);
  std::vector<SubsetMask> masks;
  masks.reserve(primes.size());
  for (const PrimeIdeal& x : primes) masks.push_back(x.elems);
  const int n = static_cast<int>(masks.size());
  std::vector<SubsetMask> rows(n, SubsetMask(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (masks[b].subset_of(masks[a])) rows[a].set(b);  // a <= b iff a contains b
    }
  }
  Poset carrier = Poset::from_rows(std::move(rows));
  return Ultraposet{std::move(carrier),
                    std::make_shared<ModSpectrumStructure>(lattice, std::move(masks))};
}

Ultraposet presheaf_ultraposet(const Poset& base, const Ultraposet& target,
                               long long max_candidates) {
  std::vector<std::vector<int>> elements = monotone_maps(base, target.carrier, max_candidates);
  Poset carrier = pointwise_order(elements, target.carrier);
  return Ultraposet{std::move(carrier),
                    std::make_shared<PresheafStructure>(base, target, std::move(elements))};
}

Ultraposet product_ultraposet(std::vector<Ultraposet> factors, int max_carrier) {
  long long total = 1;
  for (const Ultraposet& f : factors) total *= f.size();
  if (total > max_carrier) fail(errc::budget_exceeded, "product carrier exceeds cap");
  auto structure = std::make_shared<ProductStructure>(std::move(factors));
  const int n = structure->carrier_size();
  std::vector<SubsetMask> rows(n, SubsetMask(n));
  for (int a = 0; a < n; ++a) {
    std::vector<int> ta = structure->decode(a);
    for (int b = 0; b < n; ++b) {
      std::vector<int> tb = structure->decode(b);
      bool le = true;
      for (size_t i = 0; i < ta.size() && le; ++i) {
        if (!structure->factors()[i].carrier.leq(ta[i], tb[i])) le = false;
      }
      if (le) rows[a].set(b);
    }
  }
  return Ultraposet{Poset::from_rows(std::move(rows)), std::move(structure)};
}

Ultraposet coproduct_ultraposet(Ultraposet left, Ultraposet right) {
  const int n = left.size() + right.size();
  const int n_left = left.size();
  std::vector<SubsetMask> rows(n, SubsetMask(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      bool le = false;
      if (a < n_left && b < n_left) le = left.carrier.leq(a, b);
      if (a >= n_left && b >= n_left) le = right.carrier.leq(a - n_left, b - n_left);
      if (le) rows[a].set(b);
    }
  }
  auto structure = std::make_shared<CoproductStructure>(std::move(left), std::move(right));
  return Ultraposet{Poset::from_rows(std::move(rows)), std::move(structure)};
}

int canonical_filter_pair(const DistLattice& lattice, std::span<const int> f,
                          std::span<const SubsetMask> family) {
  for (int v : f) {
    if (v < 0 || v >= lattice.size()) fail(errc::index, "family value out of range");
  }
  int acc = lattice.bot;
  for (const SubsetMask& a : family) {
    if (a.universe() != static_cast<int>(f.size())) fail(errc::shape, "member universe mismatch");
    int m = lattice.top;
    for (int s : a.elements()) m = lattice.meet(m, f[s]);
    acc = lattice.join(acc, m);
  }
  return acc;
}

// --- axiom checking -----------------------------------------------------------

AxiomReport check_axioms(const Ultraposet& u, const CheckOptions& opts) {
  const ProbeBudget& budget = opts.budget;
  if (budget.max_s < 1 || budget.max_t < 1 || budget.max_w < 1) {
    fail(errc::budget_exceeded, "probe budgets must be at least 1");
  }
  AxiomReport report;
  const int n = u.size();
  if (n == 0) return report;  // no families, no ultrafilters: vacuous

  auto note = [&](bool& flag, const std::string& text) {
    if (flag) {
      flag = false;
      if (report.witness.empty()) report.witness = text;
    }
  };

  for (int s_size = 1; s_size <= budget.max_s; ++s_size) {
    std::vector<Ultrafilter> beta_s = enumerate_ultrafilters(s_size);

    // Probe data independent of f, prepared once per |S|.
    struct AssocProbe {
      std::vector<int> family_idx;  // T -> index into beta_s
      Ultrafilter nu;
      Ultrafilter kappa;  // <mu, nu>
    };
    std::vector<AssocProbe> assoc_probes;
    for (int t_size = 1; t_size <= budget.max_t; ++t_size) {
      std::vector<Ultrafilter> beta_t = enumerate_ultrafilters(t_size);
      std::vector<int> family_idx(t_size, 0);
      do {
        std::vector<Ultrafilter> members;
        members.reserve(t_size);
        for (int t = 0; t < t_size; ++t) members.push_back(beta_s[family_idx[t]]);
        UltraFamily family(std::move(members));
        for (const Ultrafilter& nu : beta_t) {
          assoc_probes.push_back(AssocProbe{family_idx, nu, kleisli_pair(family, nu)});
        }
      } while (next_tuple(family_idx, s_size));
    }

    struct LocalityProbe {
      std::vector<int> injection;  // W -> S
      Ultrafilter nu;              // on W
      Ultrafilter pushed;          // i_* nu on S
    };
    std::vector<LocalityProbe> locality_probes;
    for (int w_size = 1; w_size <= std::min(budget.max_w, s_size); ++w_size) {
      std::vector<Ultrafilter> beta_w = enumerate_ultrafilters(w_size);
      for (const std::vector<int>& inj : injections(w_size, s_size)) {
        for (const Ultrafilter& nu : beta_w) {
          locality_probes.push_back(LocalityProbe{inj, nu, pushforward(inj, nu, s_size)});
        }
      }
    }

    std::vector<int> f(s_size, 0);
    std::vector<int> pf(s_size);
    std::vector<int> g;
    std::vector<int> fi;
    do {
      check_cancel(opts);
      for (int j = 0; j < s_size; ++j) {
        pf[j] = u.pair(f, beta_s[j]);
        ++report.probes;
      }
      // (1) Unity: <f, delta> = f.
      for (int j = 0; j < s_size; ++j) {
        if (pf[j] != f[j]) {
          note(report.unity, "unity: f=" + tuple_str(f) + " s=" + std::to_string(j) + " gave " +
                                 std::to_string(pf[j]));
        }
      }
      // (2) Lax associativity: <f, <mu, nu>> <= <<f, mu>, nu>.
      for (const AssocProbe& probe : assoc_probes) {
        int lhs = u.pair(f, probe.kappa);
        g.resize(probe.family_idx.size());
        for (size_t t = 0; t < probe.family_idx.size(); ++t) g[t] = pf[probe.family_idx[t]];
        int rhs = u.pair(g, probe.nu);
        report.probes += 2;
        if (!u.carrier.leq(lhs, rhs)) {
          note(report.lax_assoc, "associativity: f=" + tuple_str(f) + " gave " +
                                     std::to_string(lhs) + " !<= " + std::to_string(rhs));
        } else if (lhs != rhs) {
          report.assoc_equality = false;
        }
      }
      // (3) Locality: <f, i_* nu> = <f o i, nu> for injections i.
      for (const LocalityProbe& probe : locality_probes) {
        int lhs = u.pair(f, probe.pushed);
        fi.resize(probe.injection.size());
        for (size_t k = 0; k < probe.injection.size(); ++k) fi[k] = f[probe.injection[k]];
        int rhs = u.pair(fi, probe.nu);
        report.probes += 2;
        if (lhs != rhs) {
          note(report.locality, "locality: f=" + tuple_str(f) + " i=" +
                                    tuple_str(probe.injection) + " gave " + std::to_string(lhs) +
                                    " != " + std::to_string(rhs));
        }
      }
      // (4) Monotonicity in the first entry. Any pointwise f <= g factors as
      // a chain of single-coordinate increases, so checking those suffices.
      for (int coord = 0; coord < s_size; ++coord) {
        int original = f[coord];
        for (int v = 0; v < n; ++v) {
          if (!u.carrier.lt(original, v)) continue;
          f[coord] = v;
          for (int j = 0; j < s_size; ++j) {
            int pg = u.pair(f, beta_s[j]);
            ++report.probes;
            if (!u.carrier.leq(pf[j], pg)) {
              f[coord] = original;
              note(report.monotone, "monotone: coordinate " + std::to_string(coord) +
                                        " raised to " + std::to_string(v) + " at f=" +
                                        tuple_str(f));
              f[coord] = v;
            }
          }
        }
        f[coord] = original;
      }
    } while (next_tuple(f, n));
  }
  return report;
}

// --- ultrafunctor predicates ----------------------------------------------------

namespace {

UltraCheck check_ultrafunctor(std::span<const int> values, const Ultraposet& dom,
                              const Ultraposet& cod, const CheckOptions& opts, bool need_left,
                              bool need_right) {
  if (static_cast<int>(values.size()) != dom.size()) fail(errc::shape, "value vector size");
  if (!is_monotone(dom.carrier, cod.carrier, values)) {
    fail(errc::not_monotone, "map is not monotone");
  }
  UltraCheck out;
  const int n = dom.size();
  if (n == 0) return out;
  std::vector<int> phi_f;
  // The pairing is pointwise in the second entry, so probing single
  // ultrafilters decides the family-indexed comparisons as well.
  for (int s_size = 1; s_size <= opts.budget.max_s; ++s_size) {
    std::vector<Ultrafilter> beta_s = enumerate_ultrafilters(s_size);
    std::vector<int> f(s_size, 0);
    do {
      check_cancel(opts);
      phi_f.resize(s_size);
      for (int j = 0; j < s_size; ++j) phi_f[j] = values[f[j]];
      for (const Ultrafilter& mu : beta_s) {
        int through_dom = values[dom.pair(f, mu)];
        int through_cod = cod.pair(phi_f, mu);
        out.probes += 2;
        if (need_left && !cod.carrier.leq(through_dom, through_cod)) {
          out.ok = false;
          out.witness = "f=" + tuple_str(f) + " witness=" + std::to_string(mu.witness()) +
                        ": phi<f,mu>=" + std::to_string(through_dom) + " !<= <phi f,mu>=" +
                        std::to_string(through_cod);
          return out;
        }
        if (need_right && !cod.carrier.leq(through_cod, through_dom)) {
          out.ok = false;
          out.witness = "f=" + tuple_str(f) + " witness=" + std::to_string(mu.witness()) +
                        ": <phi f,mu>=" + std::to_string(through_cod) + " !<= phi<f,mu>=" +
                        std::to_string(through_dom);
          return out;
        }
      }
    } while (next_tuple(f, n));
  }
  return out;
}

}  // namespace

UltraCheck is_left_ultrafunctor(std::span<const int> values, const Ultraposet& dom,
                                const Ultraposet& cod, const CheckOptions& opts) {
  return check_ultrafunctor(values, dom, cod, opts, true, false);
}

UltraCheck is_right_ultrafunctor(std::span<const int> values, const Ultraposet& dom,
                                 const Ultraposet& cod, const CheckOptions& opts) {
  return check_ultrafunctor(values, dom, cod, opts, false, true);
}

UltraCheck is_ultrafunctor(std::span<const int> values, const Ultraposet& dom,
                           const Ultraposet& cod, const CheckOptions& opts) {
  return check_ultrafunctor(values, dom, cod, opts, true, true);
}

// --- closed sets ------------------------------------------------------------------

bool is_closed(const Ultraposet& u, const SubsetMask& k, const CheckOptions& opts) {
  if (k.universe() != u.size()) fail(errc::shape, "mask universe mismatch");
  const int n = u.size();
  if (n == 0) return true;
  for (int s_size = 1; s_size <= opts.budget.max_s; ++s_size) {
    std::vector<Ultrafilter> beta_s = enumerate_ultrafilters(s_size);
    std::vector<int> f(s_size, 0);
    do {
      check_cancel(opts);
      for (int j = 0; j < s_size; ++j) {
        // f^{-1}(K) in delta_j iff f(j) in K
        if (!k.test(f[j])) continue;
        if (!k.test(u.pair(f, beta_s[j]))) return false;
      }
    } while (next_tuple(f, n));
  }
  return true;
}

std::vector<SubsetMask> closed_sets(const Ultraposet& u, const CheckOptions& opts,
                                    int max_carrier_bits) {
  if (u.size() > max_carrier_bits) {
    fail(errc::budget_exceeded, "carrier too large to enumerate all subsets");
  }
  std::vector<SubsetMask> out;
  const int n = u.size();
  for (uint64_t bits = 0; bits < (uint64_t{1} << n); ++bits) {
    SubsetMask mask(n);
    for (int i = 0; i < n; ++i) {
      if ((bits >> i) & 1) mask.set(i);
    }
    if (is_closed(u, mask, opts)) out.push_back(std::move(mask));
  }
  return out;
}

std::vector<SubsetMask> clc(const Ultraposet& u, const CheckOptions& opts) {
  std::vector<SubsetMask> out;
  for (const SubsetMask& mask : downsets(u.carrier)) {
    if (is_closed(u, mask, opts)) out.push_back(mask);
  }
  return out;
}

std::vector<SubsetMask> cld(const Ultraposet& u, const CheckOptions& opts) {
  std::vector<SubsetMask> out;
  for (const SubsetMask& mask : upsets(u.carrier)) {
    if (is_closed(u, mask, opts)) out.push_back(mask);
  }
  return out;
}

std::vector<ClosedPair> clcd(const Ultraposet& u, const CheckOptions& opts) {
  std::vector<ClosedPair> out;
  for (const SubsetMask& down : downsets(u.carrier)) {
    SubsetMask up = down.complement();
    if (is_closed(u, down, opts) && is_closed(u, up, opts)) {
      out.push_back(ClosedPair{down, std::move(up)});
    }
  }
  return out;
}

ClosedPair make_closed_pair(const Ultraposet& u, SubsetMask down, const CheckOptions& opts) {
  if (!is_downset(u.carrier, down)) fail(errc::shape, "component is not a downset");
  SubsetMask up = down.complement();
  if (!is_closed(u, down, opts) || !is_closed(u, up, opts)) {
    fail(errc::shape, "components are not both closed");
  }
  return ClosedPair{std::move(down), std::move(up)};
}

// --- primitive subsets ----------------------------------------------------------

namespace {

std::vector<ClosedPair> spectrum_primitive_pairs(const DistLattice& d,
                                                 const ModSpectrumStructure& ms) {
  std::vector<ClosedPair> out;
  const int m = static_cast<int>(ms.primes().size());
  for (int p = 0; p < d.size(); ++p) {
    SubsetMask bp(m);
    for (int k = 0; k < m; ++k) {
      if (ms.primes()[k].test(p)) bp.set(k);
    }
    out.push_back(ClosedPair{bp, bp.complement()});
  }
  return out;
}

void verify_primitive_lattice_laws(const DistLattice& d, const std::vector<ClosedPair>& pairs) {
  for (int p = 0; p < d.size(); ++p) {
    for (int q = 0; q < d.size(); ++q) {
      const ClosedPair& join_pair = pairs[d.join(p, q)];
      const ClosedPair& meet_pair = pairs[d.meet(p, q)];
      if (!(join_pair.down == (pairs[p].down & pairs[q].down)) ||
          !(meet_pair.down == (pairs[p].down | pairs[q].down)) ||
          !(join_pair.up == (pairs[p].up | pairs[q].up)) ||
          !(meet_pair.up == (pairs[p].up & pairs[q].up))) {
        fail(errc::theorem_failure, "primitive subsets break the lattice laws at (" +
                                        std::to_string(p) + "," + std::to_string(q) + ")");
      }
    }
  }
}

}  // namespace

PrimitivePairs primitive_pairs(const DistLattice& d, long long max_candidates) {
  PrimitivePairs out{presheaf_ultraposet(d.poset, canonical_two(), max_candidates),
                     {},
                     mod_spectrum_ultraposet(d),
                     {}};
  auto* presheaf = dynamic_cast<const PresheafStructure*>(out.presheaf.structure.get());
  const auto& elements = presheaf->elements();
  const int m = static_cast<int>(elements.size());
  for (int p = 0; p < d.size(); ++p) {
    SubsetMask cp(m);  // downsets containing p = maps sending p to 0
    for (int i = 0; i < m; ++i) {
      if (elements[i][p] == 0) cp.set(i);
    }
    ClosedPair pair{cp, cp.complement()};
    if (!is_downset(out.presheaf.carrier, pair.down) ||
        !is_closed(out.presheaf, pair.down) || !is_closed(out.presheaf, pair.up)) {
      fail(errc::theorem_failure, "primitive pair (C_p, D_p) is not a closed pair");
    }
    out.cd.push_back(std::move(pair));
  }
  auto* spectrum = dynamic_cast<const ModSpectrumStructure*>(out.spectrum.structure.get());
  out.bo = spectrum_primitive_pairs(d, *spectrum);
  for (const ClosedPair& pair : out.bo) {
    if (!is_downset(out.spectrum.carrier, pair.down) || !is_closed(out.spectrum, pair.down) ||
        !is_closed(out.spectrum, pair.up)) {
      fail(errc::theorem_failure, "primitive pair (B_p, O_p) is not a closed pair");
    }
  }
  verify_primitive_lattice_laws(d, out.bo);
  return out;
}

// --- hom-posets -------------------------------------------------------------------

HomPoset hom_poset(UltraKind kind, const Ultraposet& dom, const Ultraposet& cod,
                   long long max_candidates, const CheckOptions& opts) {
  HomPoset out{kind, dom, cod, {}, {}};
  for (std::vector<int>& values : monotone_maps(dom.carrier, cod.carrier, max_candidates)) {
    UltraCheck check;
    switch (kind) {
      case UltraKind::left: check = is_left_ultrafunctor(values, dom, cod, opts); break;
      case UltraKind::right: check = is_right_ultrafunctor(values, dom, cod, opts); break;
      case UltraKind::plain: check = is_ultrafunctor(values, dom, cod, opts); break;
    }
    if (check.ok) out.elements.push_back(std::move(values));
  }
  out.order = pointwise_order(out.elements, cod.carrier);

  if ((kind == UltraKind::left || kind == UltraKind::right) && cod.size() > 0) {
    // When the codomain is a complete lattice, the left hom-poset is complete
    // with pointwise joins and the right one with pointwise meets; verify the
    // binary and empty cases.
    const Poset& cp = cod.carrier;
    bool complete = true;
    std::vector<int> bound_table(static_cast<size_t>(cod.size()) * cod.size());
    for (int p = 0; p < cod.size() && complete; ++p) {
      for (int q = 0; q < cod.size(); ++q) {
        int l = poset_lub(cp, p, q);
        int g = poset_glb(cp, p, q);
        if (l == -1 || g == -1) {
          complete = false;
          break;
        }
        bound_table[p * cod.size() + q] = kind == UltraKind::left ? l : g;
      }
    }
    if (complete) {
      int unit = 0;
      for (int p = 0; p < cod.size(); ++p) {
        unit = kind == UltraKind::left ? poset_glb(cp, unit, p) : poset_lub(cp, unit, p);
      }
      auto member = [&](const std::vector<int>& v) {
        return std::binary_search(out.elements.begin(), out.elements.end(), v);
      };
      std::vector<int> unit_map(dom.size(), unit);
      if (!member(unit_map)) {
        fail(errc::theorem_failure, "constant bound map missing from the hom-poset");
      }
      std::vector<int> bound_map(dom.size());
      for (const std::vector<int>& a : out.elements) {
        for (const std::vector<int>& b : out.elements) {
          for (int p = 0; p < dom.size(); ++p) {
            bound_map[p] = bound_table[a[p] * cod.size() + b[p]];
          }
          if (!member(bound_map)) {
            fail(errc::theorem_failure, "pointwise bound left the hom-poset");
          }
        }
      }
    }
  }
  return out;
}

// --- patch topology ------------------------------------------------------------------

std::vector<SubsetMask> patch_topology(const Ultraposet& u, const CheckOptions& opts,
                                       int max_sets) {
  std::set<SubsetMask> sets;
  sets.insert(SubsetMask(u.size()));
  sets.insert(SubsetMask::full(u.size()));
  for (const ClosedPair& pair : clcd(u, opts)) {
    sets.insert(pair.down);
    sets.insert(pair.up);
  }
  // Close under binary union and intersection to a fixpoint; on a finite
  // carrier this yields exactly the intersections of finite unions of the
  // subbasis.
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<SubsetMask> current(sets.begin(), sets.end());
    for (size_t a = 0; a < current.size(); ++a) {
      for (size_t b = a + 1; b < current.size(); ++b) {
        if (sets.insert(current[a] | current[b]).second) changed = true;
        if (sets.insert(current[a] & current[b]).second) changed = true;
        if (static_cast<int>(sets.size()) > max_sets) {
          fail(errc::budget_exceeded, "patch topology exceeds the set cap");
        }
      }
    }
  }
  return std::vector<SubsetMask>(sets.begin(), sets.end());
}

}  // namespace upo
