#include "ultraposet/poset.hpp"

#include <algorithm>
#include <string>

namespace upo {

Poset Poset::from_pairs(int n, const std::vector<std::pair<int, int>>& leq_pairs) {
  if (n < 0) fail(errc::index, "negative poset size");
  std::vector<SubsetMask> rows(n, SubsetMask(n));
  for (int p = 0; p < n; ++p) rows[p].set(p);
  for (auto [p, q] : leq_pairs) {
    if (p < 0 || p >= n || q < 0 || q >= n) {
      fail(errc::index, "relation pair (" + std::to_string(p) + "," + std::to_string(q) +
                            ") out of range for n=" + std::to_string(n));
    }
    rows[p].set(q);
  }
  // Transitive closure: row p accumulates rows of everything above p.
  bool changed = true;
  while (changed) {
    changed = false;
    for (int p = 0; p < n; ++p) {
      SubsetMask acc = rows[p];
      for (int q : rows[p].elements()) acc = acc | rows[q];
      if (!(acc == rows[p])) {
        rows[p] = acc;
        changed = true;
      }
    }
  }
  for (int p = 0; p < n; ++p) {
    for (int q = p + 1; q < n; ++q) {
      if (rows[p].test(q) && rows[q].test(p)) {
        fail(errc::cycle, "antisymmetry violated between " + std::to_string(p) + " and " +
                              std::to_string(q));
      }
    }
  }
  Poset out;
  out.n_ = n;
  out.rows_ = std::move(rows);
  out.compute_linext();
  return out;
}

Poset Poset::from_rows(std::vector<SubsetMask> rows) {
  int n = static_cast<int>(rows.size());
  for (int p = 0; p < n; ++p) {
    if (rows[p].universe() != n) fail(errc::shape, "row universe mismatch");
    if (!rows[p].test(p)) fail(errc::cycle, "relation not reflexive at " + std::to_string(p));
  }
  for (int p = 0; p < n; ++p) {
    for (int q : rows[p].elements()) {
      if (q != p && rows[q].test(p)) {
        fail(errc::cycle, "antisymmetry violated between " + std::to_string(p) + " and " +
                              std::to_string(q));
      }
      if (!rows[q].subset_of(rows[p])) {
        fail(errc::cycle, "relation not transitive at (" + std::to_string(p) + "," +
                              std::to_string(q) + ")");
      }
    }
  }
  Poset out;
  out.n_ = n;
  out.rows_ = std::move(rows);
  out.compute_linext();
  return out;
}

void Poset::compute_linext() {
  linext_.clear();
  linext_.reserve(n_);
  std::vector<bool> placed(n_, false);
  for (int step = 0; step < n_; ++step) {
    for (int p = 0; p < n_; ++p) {
      if (placed[p]) continue;
      bool minimal = true;
      for (int q = 0; q < n_; ++q) {
        if (q != p && !placed[q] && leq(q, p)) {
          minimal = false;
          break;
        }
      }
      if (minimal) {
        linext_.push_back(p);
        placed[p] = true;
        break;
      }
    }
  }
}

bool Poset::is_antichain() const {
  for (int p = 0; p < n_; ++p) {
    if (rows_[p].count() != 1) return false;
  }
  return true;
}

std::vector<std::pair<int, int>> Poset::covers() const {
  std::vector<std::pair<int, int>> out;
  for (int p = 0; p < n_; ++p) {
    for (int q = 0; q < n_; ++q) {
      if (!lt(p, q)) continue;
      bool cover = true;
      for (int r = 0; r < n_; ++r) {
        if (lt(p, r) && lt(r, q)) {
          cover = false;
          break;
        }
      }
      if (cover) out.emplace_back(p, q);
    }
  }
  return out;
}

Poset validate_poset(int n, const std::vector<std::pair<int, int>>& leq_pairs) {
  return Poset::from_pairs(n, leq_pairs);
}

Poset make_chain(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
  return Poset::from_pairs(n, pairs);
}

Poset make_antichain(int n) { return Poset::from_pairs(n, {}); }

std::vector<SubsetMask> downsets(const Poset& poset) {
  const int n = poset.size();
  std::vector<SubsetMask> out;
  out.emplace_back(SubsetMask(n));
  // Grow along the linear extension: element e may join a partial downset iff
  // everything strictly below e is already in it. All elements below e precede
  // e in the extension, so the invariant is maintained.
  for (int e : poset.linear_extension()) {
    SubsetMask below = principal_downset(poset, e);
    below.reset(e);
    size_t count = out.size();
    for (size_t k = 0; k < count; ++k) {
      if (below.subset_of(out[k])) {
        SubsetMask grown = out[k];
        grown.set(e);
        out.push_back(std::move(grown));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SubsetMask> upsets(const Poset& poset) {
  std::vector<SubsetMask> out = downsets(poset);
  for (auto& mask : out) mask = mask.complement();
  std::sort(out.begin(), out.end());
  return out;
}

SubsetMask principal_downset(const Poset& poset, int p) {
  SubsetMask m(poset.size());
  for (int q = 0; q < poset.size(); ++q) {
    if (poset.leq(q, p)) m.set(q);
  }
  return m;
}

SubsetMask principal_upset(const Poset& poset, int p) { return poset.upset_of(p); }

int poset_glb(const Poset& poset, int p, int q) {
  int best = -1;
  for (int r = 0; r < poset.size(); ++r) {
    if (!poset.leq(r, p) || !poset.leq(r, q)) continue;
    if (best == -1 || poset.leq(best, r)) best = r;
  }
  if (best == -1) return -1;
  for (int r = 0; r < poset.size(); ++r) {
    if (poset.leq(r, p) && poset.leq(r, q) && !poset.leq(r, best)) return -1;
  }
  return best;
}

int poset_lub(const Poset& poset, int p, int q) {
  int best = -1;
  for (int r = 0; r < poset.size(); ++r) {
    if (!poset.leq(p, r) || !poset.leq(q, r)) continue;
    if (best == -1 || poset.leq(r, best)) best = r;
  }
  if (best == -1) return -1;
  for (int r = 0; r < poset.size(); ++r) {
    if (poset.leq(p, r) && poset.leq(q, r) && !poset.leq(best, r)) return -1;
  }
  return best;
}

bool is_downset(const Poset& poset, const SubsetMask& mask) {
  for (int p : mask.elements()) {
    if (!principal_downset(poset, p).subset_of(mask)) return false;
  }
  return true;
}

bool is_upset(const Poset& poset, const SubsetMask& mask) {
  for (int p : mask.elements()) {
    if (!poset.upset_of(p).subset_of(mask)) return false;
  }
  return true;
}

bool is_monotone(const Poset& dom, const Poset& cod, std::span<const int> values) {
  if (static_cast<int>(values.size()) != dom.size()) fail(errc::shape, "value vector size");
  for (int v : values) {
    if (v < 0 || v >= cod.size()) fail(errc::index, "map value out of range");
  }
  for (int p = 0; p < dom.size(); ++p) {
    for (int q = 0; q < dom.size(); ++q) {
      if (dom.leq(p, q) && !cod.leq(values[p], values[q])) return false;
    }
  }
  return true;
}

MonotoneMap make_monotone_map(Poset dom, Poset cod, std::vector<int> values) {
  if (!is_monotone(dom, cod, values)) fail(errc::not_monotone, "map is not monotone");
  return MonotoneMap{std::move(dom), std::move(cod), std::move(values)};
}

MonotoneMap identity_map(const Poset& p) {
  std::vector<int> values(p.size());
  for (int i = 0; i < p.size(); ++i) values[i] = i;
  return MonotoneMap{p, p, std::move(values)};
}

MonotoneMap compose(const MonotoneMap& second, const MonotoneMap& first) {
  if (!(first.cod == second.dom)) fail(errc::shape, "composition shape mismatch");
  std::vector<int> values(first.values.size());
  for (size_t i = 0; i < values.size(); ++i) values[i] = second.values[first.values[i]];
  return MonotoneMap{first.dom, second.cod, std::move(values)};
}

namespace {

void monotone_dfs(const Poset& dom, const Poset& cod, std::vector<int>& values, int next,
                  long long& explored, long long max_candidates,
                  std::vector<std::vector<int>>& out) {
  if (next == dom.size()) {
    out.push_back(values);
    return;
  }
  for (int v = 0; v < cod.size(); ++v) {
    if (++explored > max_candidates) {
      fail(errc::budget_exceeded,
           "monotone map search exceeded " + std::to_string(max_candidates) + " candidates");
    }
    bool ok = true;
    for (int j = 0; j < next && ok; ++j) {
      if (dom.leq(j, next) && !cod.leq(values[j], v)) ok = false;
      if (dom.leq(next, j) && !cod.leq(v, values[j])) ok = false;
    }
    if (!ok) continue;
    values[next] = v;
    monotone_dfs(dom, cod, values, next + 1, explored, max_candidates, out);
  }
}

}  // namespace

std::vector<std::vector<int>> monotone_maps(const Poset& dom, const Poset& cod,
                                            long long max_candidates) {
  std::vector<std::vector<int>> out;
  if (cod.size() == 0 && dom.size() > 0) return out;
  std::vector<int> values(dom.size(), 0);
  long long explored = 0;
  monotone_dfs(dom, cod, values, 0, explored, max_candidates, out);
  return out;
}

Poset pointwise_order(const std::vector<std::vector<int>>& maps, const Poset& cod) {
  const int n = static_cast<int>(maps.size());
  std::vector<SubsetMask> rows(n, SubsetMask(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      bool le = true;
      for (size_t i = 0; i < maps[a].size() && le; ++i) {
        if (!cod.leq(maps[a][i], maps[b][i])) le = false;
      }
      if (le) rows[a].set(b);
    }
  }
  return Poset::from_rows(std::move(rows));
}

}  // namespace upo
