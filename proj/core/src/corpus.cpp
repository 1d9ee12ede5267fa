#include "ultraposet/corpus.hpp"

#include <algorithm>
#include <set>

namespace upo {

namespace {

// Labeled posets on {0..n-1} as reflexive relation matrices packed row-major
// into a uint64 (bit r*n+c set iff r <= c). Enumerated by extending each
// labeled poset on n-1 elements with a new element whose strict down-set D
// and up-set U satisfy: D is a downset, U is an upset, D and U are disjoint,
// and D x U lies in the strict order (so transitivity through the new
// element holds).
std::vector<uint64_t> labeled_posets(int n) {
  if (n == 0) return {0};
  std::vector<uint64_t> previous = labeled_posets(n - 1);
  const int m = n - 1;
  auto prev_leq = [m](uint64_t bits, int r, int c) {
    return (bits >> (r * m + c)) & 1;
  };
  std::vector<uint64_t> out;
  for (uint64_t bits : previous) {
    std::vector<uint32_t> downsets_of, upsets_of;
    for (uint32_t sub = 0; sub < (1u << m); ++sub) {
      bool down = true, up = true;
      for (int a = 0; a < m; ++a) {
        if (!((sub >> a) & 1)) continue;
        for (int b = 0; b < m; ++b) {
          if (prev_leq(bits, b, a) && !((sub >> b) & 1)) down = false;
          if (prev_leq(bits, a, b) && !((sub >> b) & 1)) up = false;
        }
      }
      if (down) downsets_of.push_back(sub);
      if (up) upsets_of.push_back(sub);
    }
    for (uint32_t down : downsets_of) {
      for (uint32_t up : upsets_of) {
        if (down & up) continue;
        bool wedge = true;
        for (int a = 0; a < m && wedge; ++a) {
          if (!((down >> a) & 1)) continue;
          for (int b = 0; b < m; ++b) {
            if (((up >> b) & 1) && !prev_leq(bits, a, b)) {
              wedge = false;
              break;
            }
          }
        }
        if (!wedge) continue;
        uint64_t grown = 0;
        for (int r = 0; r < m; ++r) {
          for (int c = 0; c < m; ++c) {
            if (prev_leq(bits, r, c)) grown |= uint64_t{1} << (r * n + c);
          }
        }
        grown |= uint64_t{1} << (m * n + m);  // reflexive at the new element
        for (int a = 0; a < m; ++a) {
          if ((down >> a) & 1) grown |= uint64_t{1} << (a * n + m);
          if ((up >> a) & 1) grown |= uint64_t{1} << (m * n + a);
        }
        out.push_back(grown);
      }
    }
  }
  return out;
}

uint64_t canonical_bits(uint64_t bits, int n) {
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  uint64_t best = ~uint64_t{0};
  do {
    uint64_t image = 0;
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) {
        if ((bits >> (r * n + c)) & 1) image |= uint64_t{1} << (perm[r] * n + perm[c]);
      }
    }
    best = std::min(best, image);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return n == 0 ? 0 : best;
}

}  // namespace

uint64_t poset_canonical_bits(const Poset& p) {
  const int n = p.size();
  if (n > 8) fail(errc::budget_exceeded, "canonical form supports up to 8 elements");
  uint64_t bits = 0;
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      if (p.leq(r, c)) bits |= uint64_t{1} << (r * n + c);
    }
  }
  return canonical_bits(bits, n);
}

std::vector<Poset> corpus_posets(int max_n) {
  if (max_n < 0 || max_n > 6) fail(errc::budget_exceeded, "corpus bound must be within 0..6");
  std::vector<Poset> out;
  for (int n = 0; n <= max_n; ++n) {
    std::set<uint64_t> canonical;
    for (uint64_t bits : labeled_posets(n)) canonical.insert(canonical_bits(bits, n));
    for (uint64_t bits : canonical) {
      std::vector<std::pair<int, int>> pairs;
      for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
          if ((bits >> (r * n + c)) & 1) pairs.emplace_back(r, c);
        }
      }
      out.push_back(Poset::from_pairs(n, pairs));
    }
  }
  return out;
}

std::vector<DistLattice> corpus_lattices(int max_n) {
  std::vector<DistLattice> out;
  for (const Poset& p : corpus_posets(max_n)) out.push_back(downset_lattice(p));
  return out;
}

}  // namespace upo
