#include "squaretile/cylinders.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "squaretile/error.hpp"

namespace squaretile {

namespace {

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

struct Flow {
  const Origami& o;
  long p, q;   // normalized direction
  long slots;  // pieces per transversal edge

  std::size_t index(std::size_t square, long slot) const { return square * static_cast<std::size_t>(slots) + static_cast<std::size_t>(slot); }
  std::size_t count() const { return o.size() * static_cast<std::size_t>(slots); }

  // Next piece reached by the flow from (square, slot), plus the crossings of
  // the segment in between and the squares it passes through. Valid for both
  // interior points and left endpoints of pieces.
  std::pair<std::size_t, long> step(std::size_t square, long slot, std::vector<Crossing>* crossings,
                                    std::vector<std::size_t>* visited) const {
    const std::size_t n = o.size();
    if (q == 0) {
      if (crossings) crossings->push_back({y_edge(n, o.h()(square)), +1});
      if (visited) visited->push_back(square);
      return {o.h()(square), 0};
    }
    if (crossings) crossings->push_back({x_edge(square), +1});
    const long shifted = slot + p;
    const long m = floor_div(shifted, q);
    const long next_slot = shifted - m * q;
    std::size_t cur = square;
    if (visited) visited->push_back(cur);
    for (long s = 0; s < m; ++s) {
      cur = o.h()(cur);
      if (crossings) crossings->push_back({y_edge(n, cur), +1});
      if (visited) visited->push_back(cur);
    }
    for (long s = 0; s > m; --s) {
      if (crossings) crossings->push_back({y_edge(n, cur), -1});
      cur = o.h_inv()(cur);
      if (visited) visited->push_back(cur);
    }
    return {o.v()(cur), next_slot};
  }

  // Piece adjacent on the other side of the left endpoint of (square, slot):
  // below it for horizontal flow, to its left otherwise.
  std::pair<std::size_t, long> neighbour(std::size_t square, long slot) const {
    if (q == 0) return {o.v_inv()(square), 0};
    if (slot > 0) return {square, slot - 1};
    return {o.h_inv()(square), slots - 1};
  }
};

}  // namespace

std::array<long, 2> normalize_direction(std::array<long, 2> dir) {
  long p = dir[0], q = dir[1];
  if (p == 0 && q == 0) throw InputError("direction vector must be nonzero");
  if (std::gcd(p, q) != 1) throw InputError("direction vector must be primitive");
  if (q < 0 || (q == 0 && p < 0)) {
    p = -p;
    q = -q;
  }
  return {p, q};
}

std::size_t Cylinder::min_square() const {
  std::size_t best = static_cast<std::size_t>(-1);
  for (const auto& r : rows)
    if (!r.squares.empty()) best = std::min(best, r.squares.front());
  return best;
}

std::vector<std::size_t> Cylinder::squares() const {
  std::set<std::size_t> all;
  for (const auto& r : rows) all.insert(r.squares.begin(), r.squares.end());
  return {all.begin(), all.end()};
}

std::vector<Cylinder> cylinders(const Origami& o, std::array<long, 2> dir) {
  const auto [p, q] = normalize_direction(dir);
  const Flow flow{o, p, q, q == 0 ? 1 : q};
  const std::size_t total = flow.count();

  // Strips: orbits of the flow on transversal pieces.
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> strip_of(total, unset);
  std::vector<Strip> strips;
  for (std::size_t start = 0; start < total; ++start) {
    if (strip_of[start] != unset) continue;
    Strip s;
    std::size_t sq = start / static_cast<std::size_t>(flow.slots);
    long slot = static_cast<long>(start % static_cast<std::size_t>(flow.slots));
    std::vector<std::size_t> visited;
    for (;;) {
      const std::size_t idx = flow.index(sq, slot);
      if (strip_of[idx] != unset) {
        ensure(idx == start, "flow on transversal pieces is not a permutation");
        break;
      }
      strip_of[idx] = strips.size();
      s.pieces.emplace_back(sq, slot);
      std::tie(sq, slot) = flow.step(sq, slot, &s.core, &visited);
    }
    std::sort(visited.begin(), visited.end());
    visited.erase(std::unique(visited.begin(), visited.end()), visited.end());
    s.squares = std::move(visited);
    strips.push_back(std::move(s));
  }

  // Merge strips across boundary leaves that avoid every zero.
  std::vector<std::size_t> parent(strips.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  const auto vertex_of = vertex_of_corners(o);
  const auto vertices = singularities(o);
  std::vector<bool> seen(total, false);
  for (std::size_t start = 0; start < total; ++start) {
    if (seen[start]) continue;
    std::vector<std::pair<std::size_t, long>> orbit;
    bool singular = false;
    std::size_t sq = start / static_cast<std::size_t>(flow.slots);
    long slot = static_cast<long>(start % static_cast<std::size_t>(flow.slots));
    while (!seen[flow.index(sq, slot)]) {
      seen[flow.index(sq, slot)] = true;
      orbit.emplace_back(sq, slot);
      if (slot == 0 && vertices[vertex_of[sq]].cone_order > 0) singular = true;
      std::tie(sq, slot) = flow.step(sq, slot, nullptr, nullptr);
    }
    if (singular) continue;
    for (auto [bs, bslot] : orbit) {
      const auto [ns, nslot] = flow.neighbour(bs, bslot);
      parent[find(strip_of[flow.index(bs, bslot)])] = find(strip_of[flow.index(ns, nslot)]);
    }
  }

  std::vector<Cylinder> out;
  std::vector<std::size_t> cyl_of(strips.size(), unset);
  for (std::size_t s = 0; s < strips.size(); ++s) {
    const std::size_t root = find(s);
    if (cyl_of[root] == unset) {
      cyl_of[root] = out.size();
      out.push_back(Cylinder{{p, q}, {}, 0, 0});
    }
    out[cyl_of[root]].rows.push_back(strips[s]);
  }
  long area = 0;
  for (auto& c : out) {
    const long len = static_cast<long>(c.rows.front().pieces.size());
    for (const auto& r : c.rows) ensure(static_cast<long>(r.pieces.size()) == len, "rows of a cylinder differ in length");
    ensure(len % flow.slots == 0, "closed leaf has non-integral holonomy");
    c.circumference = len / flow.slots;
    c.height = static_cast<long>(c.rows.size());
    area += c.circumference * c.height;
  }
  ensure(area == static_cast<long>(o.size()), "cylinder areas do not sum to the number of squares");
  std::sort(out.begin(), out.end(), [](const Cylinder& a, const Cylinder& b) {
    if (a.circumference != b.circumference) return a.circumference < b.circumference;
    return a.min_square() < b.min_square();
  });
  return out;
}

}  // namespace squaretile
