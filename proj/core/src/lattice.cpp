#include "ultraposet/lattice.hpp"

#include <algorithm>
#include <string>

namespace upo {

DistLattice validate_dist_lattice(const Poset& poset) {
  const int n = poset.size();
  if (n == 0) fail(errc::not_a_lattice, "empty carrier has no bounds");
  DistLattice d;
  d.poset = poset;
  d.meet_table.assign(static_cast<size_t>(n) * n, 0);
  d.join_table.assign(static_cast<size_t>(n) * n, 0);
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n; ++q) {
      int m = poset_glb(poset, p, q);
      int j = poset_lub(poset, p, q);
      if (m == -1) {
        fail(errc::not_a_lattice,
             "no meet for (" + std::to_string(p) + "," + std::to_string(q) + ")");
      }
      if (j == -1) {
        fail(errc::not_a_lattice,
             "no join for (" + std::to_string(p) + "," + std::to_string(q) + ")");
      }
      d.meet_table[p * n + q] = m;
      d.join_table[p * n + q] = j;
    }
  }
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n; ++q) {
      for (int r = 0; r < n; ++r) {
        int lhs = d.meet(p, d.join(q, r));
        int rhs = d.join(d.meet(p, q), d.meet(p, r));
        if (lhs != rhs) {
          fail(errc::not_distributive, "witness triple (" + std::to_string(p) + "," +
                                           std::to_string(q) + "," + std::to_string(r) + ")");
        }
      }
    }
  }
  d.bot = 0;
  d.top = 0;
  for (int p = 0; p < n; ++p) {
    d.bot = d.meet(d.bot, p);
    d.top = d.join(d.top, p);
  }
  for (int p = 0; p < n; ++p) {
    if (!poset.leq(d.bot, p) || !poset.leq(p, d.top)) {
      fail(errc::not_a_lattice, "bounds do not bound element " + std::to_string(p));
    }
  }
  return d;
}

DistLattice two_lattice() { return validate_dist_lattice(make_chain(2)); }

DistLattice downset_lattice(const Poset& base) {
  std::vector<SubsetMask> sets = downsets(base);
  const int n = static_cast<int>(sets.size());
  std::vector<SubsetMask> rows(n, SubsetMask(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (sets[a].subset_of(sets[b])) rows[a].set(b);
    }
  }
  return validate_dist_lattice(Poset::from_rows(std::move(rows)));
}

bool is_ideal_mask(const DistLattice& d, const SubsetMask& mask) {
  if (mask.empty()) return false;
  if (!is_downset(d.poset, mask)) return false;
  // A downset is join-closed iff its total join stays inside: each member is
  // below the total join, and a downset containing it contains every pairwise
  // join; conversely the total join is a fold of pairwise joins.
  auto members = mask.elements();
  int total = members[0];
  for (int p : members) total = d.join(total, p);
  return mask.test(total);
}

bool is_filter_mask(const DistLattice& d, const SubsetMask& mask) {
  if (mask.empty()) return false;
  if (!is_upset(d.poset, mask)) return false;
  auto members = mask.elements();
  int total = members[0];
  for (int p : members) total = d.meet(total, p);
  return mask.test(total);
}

bool is_prime_ideal_mask(const DistLattice& d, const SubsetMask& mask) {
  if (!is_ideal_mask(d, mask)) return false;
  if (mask.test(d.top)) return false;  // proper
  // primality contraposed: p, q outside the ideal force p ^ q outside, so
  // the complement must be meet-closed, i.e. a filter
  return is_filter_mask(d, mask.complement());
}

Ideal make_ideal(const DistLattice& d, SubsetMask elems) {
  if (!is_ideal_mask(d, elems)) fail(errc::shape, "mask is not an ideal");
  return Ideal{std::move(elems)};
}

Filter make_filter(const DistLattice& d, SubsetMask elems) {
  if (!is_filter_mask(d, elems)) fail(errc::shape, "mask is not a filter");
  return Filter{std::move(elems)};
}

PrimeIdeal make_prime_ideal(const DistLattice& d, SubsetMask elems) {
  if (!is_prime_ideal_mask(d, elems)) fail(errc::shape, "mask is not a prime ideal");
  return PrimeIdeal{std::move(elems)};
}

Ideal principal_ideal(const DistLattice& d, int p) {
  return Ideal{principal_downset(d.poset, p)};
}

Filter principal_filter(const DistLattice& d, int p) {
  return Filter{principal_upset(d.poset, p)};
}

std::vector<Ideal> ideals(const DistLattice& d) {
  std::vector<Ideal> out;
  for (const SubsetMask& mask : downsets(d.poset)) {
    if (is_ideal_mask(d, mask)) out.push_back(Ideal{mask});
  }
  return out;
}

std::vector<Filter> filters(const DistLattice& d) {
  std::vector<Filter> out;
  for (const SubsetMask& mask : upsets(d.poset)) {
    if (is_filter_mask(d, mask)) out.push_back(Filter{mask});
  }
  return out;
}

std::vector<PrimeIdeal> prime_ideals(const DistLattice& d) {
  std::vector<PrimeIdeal> out;
  for (const SubsetMask& mask : downsets(d.poset)) {
    if (is_prime_ideal_mask(d, mask)) out.push_back(PrimeIdeal{mask});
  }
  return out;
}

bool is_lattice_hom(const DistLattice& dom, const DistLattice& cod, std::span<const int> values) {
  if (static_cast<int>(values.size()) != dom.size()) fail(errc::shape, "value vector size");
  if (dom.size() == 0) return true;
  if (values[dom.bot] != cod.bot || values[dom.top] != cod.top) return false;
  for (int p = 0; p < dom.size(); ++p) {
    for (int q = 0; q < dom.size(); ++q) {
      if (values[dom.meet(p, q)] != cod.meet(values[p], values[q])) return false;
      if (values[dom.join(p, q)] != cod.join(values[p], values[q])) return false;
    }
  }
  return true;
}

LatticeHom make_lattice_hom(DistLattice dom, DistLattice cod, std::vector<int> values) {
  for (int v : values) {
    if (v < 0 || v >= cod.size()) fail(errc::index, "hom value out of range");
  }
  if (!is_lattice_hom(dom, cod, values)) fail(errc::shape, "map is not a lattice hom");
  return LatticeHom{std::move(dom), std::move(cod), std::move(values)};
}

namespace {

void hom_dfs(const DistLattice& dom, const DistLattice& cod, std::vector<int>& values, int next,
             long long& explored, long long max_candidates,
             std::vector<std::vector<int>>& out) {
  if (next == dom.size()) {
    if (is_lattice_hom(dom, cod, values)) out.push_back(values);
    return;
  }
  for (int v = 0; v < cod.size(); ++v) {
    if (++explored > max_candidates) {
      fail(errc::budget_exceeded,
           "lattice hom search exceeded " + std::to_string(max_candidates) + " candidates");
    }
    bool ok = true;
    if (next == dom.bot && v != cod.bot) ok = false;
    if (next == dom.top && v != cod.top) ok = false;
    for (int j = 0; j < next && ok; ++j) {
      if (dom.leq(j, next) && !cod.leq(values[j], v)) ok = false;
      if (dom.leq(next, j) && !cod.leq(v, values[j])) ok = false;
      // meet/join closure against already-assigned elements
      if (ok) {
        int m = dom.meet(j, next);
        if (m < next && values[m] != cod.meet(values[j], v)) ok = false;
        int jn = dom.join(j, next);
        if (jn < next && values[jn] != cod.join(values[j], v)) ok = false;
      }
    }
    if (!ok) continue;
    values[next] = v;
    hom_dfs(dom, cod, values, next + 1, explored, max_candidates, out);
  }
}

}  // namespace

std::vector<LatticeHom> lattice_homs(const DistLattice& dom, const DistLattice& cod,
                                     long long max_candidates) {
  std::vector<std::vector<int>> raw;
  std::vector<int> values(dom.size(), 0);
  long long explored = 0;
  hom_dfs(dom, cod, values, 0, explored, max_candidates, raw);
  std::vector<LatticeHom> out;
  out.reserve(raw.size());
  for (auto& v : raw) out.push_back(LatticeHom{dom, cod, std::move(v)});
  return out;
}

PrimeIdeal max_ideal_disjoint(const DistLattice& d, const Ideal& ideal, const Filter& filter) {
  if (ideal.elems.intersects(filter.elems)) {
    fail(errc::not_disjoint, "ideal and filter intersect");
  }
  std::vector<Ideal> all = ideals(d);
  std::vector<const Ideal*> candidates;
  for (const Ideal& j : all) {
    if (ideal.elems.subset_of(j.elems) && !j.elems.intersects(filter.elems)) {
      candidates.push_back(&j);
    }
  }
  // first maximal candidate in canonical order
  for (const Ideal* j : candidates) {
    bool maximal = true;
    for (const Ideal* k : candidates) {
      if (k != j && j->elems.subset_of(k->elems) && !(k->elems == j->elems)) {
        maximal = false;
        break;
      }
    }
    if (maximal) {
      // the appendix lemma: maximal ideals disjoint from a filter are prime
      if (!is_prime_ideal_mask(d, j->elems)) {
        fail(errc::theorem_failure, "maximal disjoint ideal is not prime");
      }
      return PrimeIdeal{j->elems};
    }
  }
  fail(errc::theorem_failure, "no maximal disjoint ideal found");
}

PrimeIdeal prime_separation(const DistLattice& d, int p, int q) {
  if (p < 0 || p >= d.size() || q < 0 || q >= d.size()) fail(errc::index, "element out of range");
  if (d.leq(p, q)) fail(errc::order, "p <= q, nothing to separate");
  // first separating prime in canonical order; membership is tested before
  // the primality scan so the walk can stop early
  for (const SubsetMask& mask : downsets(d.poset)) {
    if (mask.test(q) && !mask.test(p) && is_prime_ideal_mask(d, mask)) {
      return PrimeIdeal{mask};
    }
  }
  fail(errc::theorem_failure, "no separating prime ideal (completeness violated)");
}

MeetOfPrimesResult ideal_is_meet_of_primes(const DistLattice& d, const Ideal& ideal) {
  MeetOfPrimesResult result;
  SubsetMask intersection = SubsetMask::full(d.size());
  for (const PrimeIdeal& x : prime_ideals(d)) {
    if (ideal.elems.subset_of(x.elems)) {
      result.primes_above.push_back(x);
      intersection = intersection & x.elems;
    }
  }
  // empty family: intersection stays all of D, matching the improper ideal
  result.holds = (intersection == ideal.elems);
  return result;
}

ModelPrimeTable model_prime_correspondence(const DistLattice& d) {
  ModelPrimeTable table;
  table.homs = lattice_homs(d, two_lattice());
  table.primes = prime_ideals(d);
  table.hom_to_prime.assign(table.homs.size(), -1);
  std::vector<bool> hit(table.primes.size(), false);
  for (size_t h = 0; h < table.homs.size(); ++h) {
    SubsetMask zero_set(d.size());
    for (int p = 0; p < d.size(); ++p) {
      if (table.homs[h].values[p] == 0) zero_set.set(p);
    }
    for (size_t k = 0; k < table.primes.size(); ++k) {
      if (table.primes[k].elems == zero_set) {
        table.hom_to_prime[h] = static_cast<int>(k);
        break;
      }
    }
  }
  bool ok = table.homs.size() == table.primes.size();
  for (size_t h = 0; h < table.homs.size() && ok; ++h) {
    int k = table.hom_to_prime[h];
    if (k < 0 || hit[k]) ok = false;
    else hit[k] = true;
  }
  table.bijective = ok;
  if (!ok) fail(errc::theorem_failure, "hom/prime correspondence is not a bijection");
  return table;
}

bool is_boolean(const DistLattice& d) {
  for (int p = 0; p < d.size(); ++p) {
    bool has_complement = false;
    for (int q = 0; q < d.size(); ++q) {
      if (d.meet(p, q) == d.bot && d.join(p, q) == d.top) {
        has_complement = true;
        break;
      }
    }
    if (!has_complement) return false;
  }
  return true;
}

bool preserves_directed_joins(const DistLattice& dom, const DistLattice& cod,
                              std::span<const int> values, int max_subset_bits) {
  if (dom.size() > max_subset_bits) fail(errc::budget_exceeded, "too many subsets to scan");
  const int n = dom.size();
  for (uint64_t bits = 1; bits < (uint64_t{1} << n); ++bits) {
    std::vector<int> members;
    for (int i = 0; i < n; ++i) {
      if ((bits >> i) & 1) members.push_back(i);
    }
    bool directed = true;
    for (int a : members) {
      for (int b : members) {
        bool bounded = false;
        for (int c : members) {
          if (dom.leq(a, c) && dom.leq(b, c)) {
            bounded = true;
            break;
          }
        }
        if (!bounded) directed = false;
      }
    }
    if (!directed) continue;
    int join_dom = members[0];
    for (int a : members) join_dom = dom.join(join_dom, a);
    int join_cod = values[members[0]];
    for (int a : members) join_cod = cod.join(join_cod, values[a]);
    if (values[join_dom] != join_cod) return false;
  }
  return true;
}

}  // namespace upo
