#pragma once

// Test corpus generation and brute-force oracles. Nothing here calls the
// library's own algorithms beyond constructing origamis.

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "squaretile/origami.hpp"

namespace testing_support {

using squaretile::Origami;
using squaretile::Permutation;

inline const char* const kMstar = "h=(2,3)(4,5,6); v=(1,4,2)(3,5); n=6";
inline const char* const kMstarstar = "h=(2,3)(4,5,6); v=(1,2)(3,4); n=6";
inline const char* const kTorus = "h=(); v=(); n=1";
inline const char* const kL = "h=(1,2); v=(1,3); n=3";

inline Origami mstar() { return squaretile::parse_origami(kMstar); }
inline Origami mstarstar() { return squaretile::parse_origami(kMstarstar); }
inline Origami torus() { return squaretile::parse_origami(kTorus); }
inline Origami l_shape() { return squaretile::parse_origami(kL); }

inline bool connected(const std::vector<std::size_t>& h, const std::vector<std::size_t>& v) {
  std::vector<bool> seen(h.size(), false);
  std::vector<std::size_t> st{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!st.empty()) {
    auto i = st.back();
    st.pop_back();
    for (auto j : {h[i], v[i]})
      if (!seen[j]) {
        seen[j] = true;
        ++count;
        st.push_back(j);
      }
  }
  return count == h.size();
}

// Uniformly random transitive pairs, rejection sampled, with a fixed seed.
inline std::vector<Origami> random_corpus(std::size_t count, std::size_t max_n, unsigned seed = 20260501u) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<std::size_t> size_dist(1, max_n);
  std::vector<Origami> out;
  while (out.size() < count) {
    const std::size_t n = size_dist(rng);
    std::vector<std::size_t> h(n), v(n);
    std::iota(h.begin(), h.end(), 0);
    std::iota(v.begin(), v.end(), 0);
    std::shuffle(h.begin(), h.end(), rng);
    std::shuffle(v.begin(), v.end(), rng);
    if (!connected(h, v)) continue;
    out.emplace_back(Permutation(h), Permutation(v));
  }
  return out;
}

// Corpus plus the four named surfaces.
inline std::vector<Origami> full_corpus(std::size_t count = 60, std::size_t max_n = 8) {
  auto c = random_corpus(count, max_n);
  c.insert(c.begin(), {torus(), l_shape(), mstar(), mstarstar()});
  return c;
}

// Relabel by breadth-first order from `start`: a canonical labeling for
// transitive pairs. The minimum over starts is an isomorphism invariant.
inline std::pair<std::vector<std::size_t>, std::vector<std::size_t>> bfs_relabel(const std::vector<std::size_t>& h,
                                                                                 const std::vector<std::size_t>& v,
                                                                                 std::size_t start) {
  const std::size_t n = h.size();
  std::vector<std::size_t> label(n, n), order;
  label[start] = 0;
  order.push_back(start);
  for (std::size_t k = 0; k < order.size(); ++k)
    for (auto j : {h[order[k]], v[order[k]]})
      if (label[j] == n) {
        label[j] = order.size();
        order.push_back(j);
      }
  std::vector<std::size_t> h2(n), v2(n);
  for (std::size_t i = 0; i < n; ++i) {
    h2[label[i]] = label[h[i]];
    v2[label[i]] = label[v[i]];
  }
  return {h2, v2};
}

inline std::pair<std::vector<std::size_t>, std::vector<std::size_t>> canonical_pair(const Origami& o) {
  const auto& h = o.h().images();
  const auto& v = o.v().images();
  auto best = bfs_relabel(h, v, 0);
  for (std::size_t s = 1; s < o.size(); ++s) best = std::min(best, bfs_relabel(h, v, s));
  return best;
}

// Every connected origami with exactly n squares, one per isomorphism class.
// h runs over one representative per cycle type, v over all of S_n.
inline std::vector<Origami> all_origamis(std::size_t n) {
  std::vector<std::vector<std::size_t>> partitions;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t left, std::size_t maxpart) -> void {
    if (left == 0) {
      partitions.push_back(cur);
      return;
    }
    for (std::size_t p = std::min(left, maxpart); p >= 1; --p) {
      cur.push_back(p);
      self(self, left - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  std::set<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> seen;
  std::vector<Origami> out;
  for (const auto& part : partitions) {
    std::vector<std::size_t> h(n);
    std::size_t base = 0;
    for (auto len : part) {
      for (std::size_t k = 0; k < len; ++k) h[base + k] = base + (k + 1) % len;
      base += len;
    }
    std::vector<std::size_t> v(n);
    std::iota(v.begin(), v.end(), 0);
    do {
      if (!connected(h, v)) continue;
      Origami o{Permutation(h), Permutation(v)};
      if (seen.insert(canonical_pair(o)).second) out.push_back(o);
    } while (std::next_permutation(v.begin(), v.end()));
  }
  return out;
}

// Lexicographically smallest p with p h1 p^-1 = h2 and p v1 p^-1 = v2, by
// trying all n! permutations.
inline std::optional<std::vector<std::size_t>> brute_iso(const Origami& a, const Origami& b) {
  const std::size_t n = a.size();
  if (b.size() != n) return std::nullopt;
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) ok = p[a.h()(i)] == b.h()(p[i]) && p[a.v()(i)] == b.v()(p[i]);
    if (ok) return p;
  } while (std::next_permutation(p.begin(), p.end()));
  return std::nullopt;
}

inline std::vector<std::vector<std::size_t>> brute_aut(const Origami& a) {
  std::vector<std::vector<std::size_t>> out;
  const std::size_t n = a.size();
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) ok = p[a.h()(i)] == a.h()(p[i]) && p[a.v()(i)] == a.v()(p[i]);
    if (ok) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// Cone orders from gluing the 4n square corners directly: a vertex made of c
// corners has angle c * pi/2 = 2 pi (k + 1).
inline std::multiset<long> corner_orbit_orders(const Origami& o) {
  const std::size_t n = o.size();
  std::vector<std::size_t> parent(4 * n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x];
    return x;
  };
  auto unite = [&](std::size_t a, std::size_t b) { parent[find(a)] = find(b); };
  // corner indices: 0 BL, 1 BR, 2 TR, 3 TL
  for (std::size_t i = 0; i < n; ++i) {
    unite(4 * i + 1, 4 * o.h()(i) + 0);
    unite(4 * i + 2, 4 * o.h()(i) + 3);
    unite(4 * i + 3, 4 * o.v()(i) + 0);
    unite(4 * i + 2, 4 * o.v()(i) + 1);
  }
  std::map<std::size_t, long> size;
  for (std::size_t x = 0; x < 4 * n; ++x) ++size[find(x)];
  std::multiset<long> orders;
  for (auto [root, c] : size) orders.insert(c / 4 - 1);
  return orders;
}

}  // namespace testing_support
