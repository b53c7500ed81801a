#include "squaretile/invariants.hpp"

#include <deque>

#include "squaretile/error.hpp"

namespace squaretile {

namespace {

struct Traversal {
  std::size_t edge;
  bool forward;
};

// Splits a closed integral chain into closed edge walks: |c_e| copies of each
// edge, oriented by sign, chained greedily until the walk returns home.
std::vector<std::vector<Traversal>> closed_walks(const Homology& hom, const Vector& chain) {
  const std::size_t edges = hom.edge_count();
  if (chain.size() != edges) throw InputError("chain has the wrong number of edge coefficients");
  if (!hom.is_cycle(chain)) throw InputError("chain is not closed");
  std::vector<Traversal> copies;
  for (std::size_t e = 0; e < edges; ++e) {
    if (chain[e].get_den() != 1) throw InputError("chain is not integral");
    const long c = to_long(chain[e]);
    for (long k = 0; k < std::labs(c); ++k) copies.push_back({e, c > 0});
  }
  auto source = [&](const Traversal& t) { return t.forward ? hom.edge_init(t.edge) : hom.edge_term(t.edge); };
  auto target = [&](const Traversal& t) { return t.forward ? hom.edge_term(t.edge) : hom.edge_init(t.edge); };

  std::vector<std::deque<std::size_t>> leaving(hom.boundary(chain).size());
  for (std::size_t k = 0; k < copies.size(); ++k) leaving[source(copies[k])].push_back(k);
  std::vector<bool> used(copies.size(), false);
  std::vector<std::vector<Traversal>> walks;
  for (std::size_t start = 0; start < copies.size(); ++start) {
    if (used[start]) continue;
    std::vector<Traversal> walk;
    const std::size_t home = source(copies[start]);
    std::size_t cur = start;
    for (;;) {
      used[cur] = true;
      walk.push_back(copies[cur]);
      const std::size_t at = target(copies[cur]);
      if (at == home) break;
      auto& out = leaving[at];
      while (!out.empty() && used[out.front()]) out.pop_front();
      ensure(!out.empty(), "unbalanced vertex while splitting a closed chain");
      cur = out.front();
      out.pop_front();
    }
    walks.push_back(std::move(walk));
  }
  return walks;
}

// Crossings of a walk pushed slightly to its left. At each vertex the pushed
// curve sweeps clockwise from the arriving edge end to the leaving one and
// crosses every end in between.
std::vector<Crossing> push_left(const std::vector<std::vector<EdgeEnd>>& around,
                                const std::vector<std::pair<std::size_t, std::size_t>>& where,
                                std::size_t n, const std::vector<Traversal>& walk) {
  auto key = [](std::size_t edge, bool initial) { return 2 * edge + (initial ? 0 : 1); };
  std::vector<Crossing> out;
  for (std::size_t k = 0; k < walk.size(); ++k) {
    const Traversal& in = walk[k];
    const Traversal& next = walk[(k + 1) % walk.size()];
    const auto [vertex, p_in] = where[key(in.edge, !in.forward)];
    const auto [vertex_out, p_out] = where[key(next.edge, next.forward)];
    ensure(vertex == vertex_out, "walk is not connected");
    const auto& ends = around[vertex];
    const std::size_t len = ends.size();
    for (std::size_t t = 1;; ++t) {
      const std::size_t idx = (p_in + len - t % len) % len;
      if (idx == p_out) break;
      const EdgeEnd& f = ends[idx];
      const bool is_x = f.edge < n;
      // Clockwise past an east ray goes down, past a west ray up, past a
      // north ray rightward, past a south ray leftward.
      out.push_back({f.edge, (is_x ? !f.initial : f.initial) ? 1 : -1});
    }
  }
  // Cancel back-and-forth pairs, cyclically.
  std::vector<Crossing> stack;
  for (const auto& c : out) {
    if (!stack.empty() && stack.back().edge == c.edge && stack.back().direction == -c.direction)
      stack.pop_back();
    else
      stack.push_back(c);
  }
  std::size_t lo = 0, hi = stack.size();
  while (hi - lo >= 2 && stack[lo].edge == stack[hi - 1].edge && stack[lo].direction == -stack[hi - 1].direction) {
    ++lo;
    --hi;
  }
  return {stack.begin() + static_cast<long>(lo), stack.begin() + static_cast<long>(hi)};
}

struct Side {
  std::size_t square;
  Rational param;  // counterclockwise boundary parameter in [0, 4)
};

}  // namespace

int quadratic_form_of_chain(const Homology& hom, const Vector& chain) {
  const Origami& o = hom.origami();
  for (auto k : stratum(o).zero_orders)
    if (k % 2) throw InputError("spin structure needs every zero of even order");
  const std::size_t n = o.size();
  const auto around = edge_ends_ccw(o);
  std::vector<std::pair<std::size_t, std::size_t>> where(4 * n);
  for (std::size_t vx = 0; vx < around.size(); ++vx)
    for (std::size_t p = 0; p < around[vx].size(); ++p)
      where[2 * around[vx][p].edge + (around[vx][p].initial ? 0 : 1)] = {vx, p};

  std::vector<std::vector<Crossing>> curves;
  for (const auto& w : closed_walks(hom, chain)) {
    auto c = push_left(around, where, n, w);
    if (!c.empty()) curves.push_back(std::move(c));
  }

  // Spread the crossings of each edge along it, then read every curve as a
  // chain of straight chords, one per square visited.
  std::vector<std::size_t> per_edge(2 * n, 0);
  for (const auto& c : curves)
    for (const auto& x : c) ++per_edge[x.edge];
  std::vector<std::size_t> seen(2 * n, 0);
  auto heading = [&](const Crossing& c) { return c.edge < n ? (c.direction > 0 ? 1 : 3) : (c.direction > 0 ? 0 : 2); };

  long quarter_turns = 0;
  std::vector<std::vector<std::pair<Rational, Rational>>> chords(n);
  for (const auto& curve : curves) {
    const std::size_t len = curve.size();
    std::vector<Side> enter(len), leave(len);
    for (std::size_t k = 0; k < len; ++k) {
      const Crossing& c = curve[k];
      const Rational t = fraction(static_cast<long>(++seen[c.edge]), static_cast<long>(per_edge[c.edge] + 1));
      if (c.edge < n) {
        const std::size_t j = c.edge, below = o.v_inv()(j);
        const Side bottom{j, t}, top{below, Rational(3) - t};
        enter[k] = c.direction > 0 ? bottom : top;
        leave[k] = c.direction > 0 ? top : bottom;
      } else {
        const std::size_t j = c.edge - n, left = o.h_inv()(j);
        const Side lside{j, Rational(4) - t}, rside{left, Rational(1) + t};
        enter[k] = c.direction > 0 ? lside : rside;
        leave[k] = c.direction > 0 ? rside : lside;
      }
    }
    long turns = 0;
    for (std::size_t k = 0; k < len; ++k) {
      const std::size_t next = (k + 1) % len;
      ensure(enter[k].square == leave[next].square, "pushed curve is not continuous");
      const int d = (heading(curve[next]) - heading(curve[k]) + 4) % 4;
      ensure(d != 2, "pushed curve turns back inside a square");
      turns += d == 1 ? 1 : d == 3 ? -1 : 0;
      chords[enter[k].square].emplace_back(enter[k].param, leave[next].param);
    }
    ensure(turns % 4 == 0, "closed curve with fractional turning");
    quarter_turns += turns / 4;
  }

  auto inside = [](const Rational& x, const Rational& a, const Rational& b) {
    Rational dx = x - a, db = b - a;
    if (dx < 0) dx += 4;
    if (db < 0) db += 4;
    return dx < db;
  };
  long crossings = 0;
  for (const auto& list : chords)
    for (std::size_t i = 0; i < list.size(); ++i)
      for (std::size_t j = i + 1; j < list.size(); ++j)
        if (inside(list[j].first, list[i].first, list[i].second) != inside(list[j].second, list[i].first, list[i].second))
          ++crossings;

  const long total = quarter_turns + crossings + static_cast<long>(curves.size());
  return static_cast<int>(((total % 2) + 2) % 2);
}

namespace {

int form2(const Matrix& g, const Vector& x, const Vector& y) {
  Rational s = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) s += x[i] * g(i, j) * y[j];
  return static_cast<int>(((to_long(s) % 2) + 2) % 2);
}

Vector mod2(Vector v) {
  for (auto& e : v) e = Rational(((to_long(e) % 2) + 2) % 2);
  return v;
}

}  // namespace

int quadratic_form(const Homology& hom, const SpinData& spin, const Vector& coords) {
  if (coords.size() != hom.rank()) throw InputError("class has the wrong number of coordinates");
  for (const auto& c : coords)
    if (c.get_den() != 1) throw InputError("class is not integral");
  const Vector x = mod2(coords);
  long s = 0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (x[k] == 0) continue;
    s += spin.basis_values[k];
    for (std::size_t l = k + 1; l < x.size(); ++l)
      if (x[l] != 0) s += to_long(hom.gram()(k, l));
  }
  return static_cast<int>(((s % 2) + 2) % 2);
}

SpinData spin_parity(const Homology& hom) {
  if (hom.genus() == 0) throw InputError("spin parity needs genus at least 1");
  SpinData out;
  for (const auto& b : hom.basis()) out.basis_values.push_back(quadratic_form_of_chain(hom, b));

  const std::size_t r = hom.rank();
  std::vector<Vector> pool;
  for (std::size_t k = 0; k < r; ++k) {
    Vector e(r, Rational(0));
    e[k] = 1;
    pool.push_back(e);
  }
  const Matrix& g = hom.gram();
  int arf = 0;
  while (!pool.empty()) {
    const Vector a = pool.front();
    pool.erase(pool.begin());
    std::size_t partner = pool.size();
    for (std::size_t k = 0; k < pool.size(); ++k)
      if (form2(g, a, pool[k])) {
        partner = k;
        break;
      }
    ensure(partner < pool.size(), "intersection form is degenerate mod 2");
    const Vector b = pool[partner];
    pool.erase(pool.begin() + static_cast<long>(partner));
    for (auto& v : pool) {
      const int wb = form2(g, v, b), wa = form2(g, v, a);
      for (std::size_t i = 0; i < r; ++i) v[i] += Rational(wb) * a[i] + Rational(wa) * b[i];
      v = mod2(v);
    }
    out.symplectic_pairs.push_back({a, b});
    arf += quadratic_form(hom, out, a) * quadratic_form(hom, out, b);
  }
  out.parity = arf % 2;
  return out;
}

Origami refine(const Origami& o) {
  const std::size_t n = o.size();
  std::vector<std::size_t> h(4 * n), v(4 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t b = 0; b < 2; ++b)
      for (std::size_t a = 0; a < 2; ++a) {
        const std::size_t q = 4 * i + 2 * b + a;
        h[q] = a == 0 ? q + 1 : 4 * o.h()(i) + 2 * b;
        v[q] = b == 0 ? q + 2 : 4 * o.v()(i) + a;
      }
  return Origami(Permutation(h), Permutation(v));
}

std::vector<InvolutionWitness> involutions(const Origami& o) {
  const std::size_t n = o.size();
  const Origami r = refine(o);
  const std::size_t m = 4 * n;
  const auto vertex = vertex_of_corners(r);
  const std::size_t genus = stratum(o).genus;
  std::vector<InvolutionWitness> out;

  const std::array<std::array<int, 2>, 4> shifts{{{0, 0}, {1, 0}, {0, 1}, {1, 1}}};
  for (const auto& shift : shifts) {
    for (std::size_t j = 0; j < n; ++j) {
      // A rotation by pi about a point of the half-integer grid sends the
      // quarter at offset p to one at offset p' with p + p' + (1/2,1/2) = c.
      const std::size_t seed = 4 * j + 2 * static_cast<std::size_t>(1 - shift[1]) + static_cast<std::size_t>(1 - shift[0]);
      std::vector<std::size_t> img(m, m);
      img[0] = seed;
      std::deque<std::size_t> todo{0};
      bool ok = true;
      auto assign = [&](std::size_t s, std::size_t t) {
        if (img[s] == m) {
          img[s] = t;
          todo.push_back(s);
        } else if (img[s] != t) {
          ok = false;
        }
      };
      while (ok && !todo.empty()) {
        const std::size_t s = todo.front();
        todo.pop_front();
        assign(r.h()(s), r.h_inv()(img[s]));
        assign(r.h_inv()(s), r.h()(img[s]));
        assign(r.v()(s), r.v_inv()(img[s]));
        assign(r.v_inv()(s), r.v()(img[s]));
      }
      if (!ok) continue;
      std::vector<bool> hit(m, false);
      for (std::size_t s = 0; s < m && ok; ++s) {
        ok = img[s] < m && !hit[img[s]];
        if (ok) hit[img[s]] = true;
      }
      if (!ok) continue;
      for (std::size_t s = 0; s < m && ok; ++s) ok = img[img[s]] == s;
      if (!ok) continue;

      InvolutionWitness w;
      w.refined = Permutation(img);
      std::vector<std::size_t> sq(n);
      for (std::size_t i = 0; i < n; ++i) sq[i] = img[4 * i + 3] / 4;
      w.square_map = Permutation(sq);
      w.shift_halves = shift;

      auto tally = [&](bool on_vertex, bool on_edge) {
        if (on_vertex)
          ++w.fixed_vertices;
        else if (on_edge)
          ++w.fixed_edge_points;
        else
          ++w.fixed_interior_points;
      };
      std::vector<bool> vertex_done(m, false);
      for (std::size_t s = 0; s < m; ++s) {
        const std::size_t a = s % 2, b = (s / 2) % 2;
        if (img[s] == s) tally(false, false);
        if (img[s] == r.v_inv()(s)) tally(false, b == 0);
        if (img[s] == r.h_inv()(s)) tally(false, a == 0);
        // The bottom-left corner of s goes to the top-right corner of its
        // image, which is the bottom-left corner of v h (image).
        const std::size_t vx = vertex[s];
        if (!vertex_done[vx] && vertex[r.v()(r.h()(img[s]))] == vx) {
          vertex_done[vx] = true;
          tally(a == 0 && b == 0, a != b);
        }
      }
      w.hyperelliptic = w.fixed_points() == 2 * genus + 2;
      out.push_back(std::move(w));
    }
  }
  return out;
}

std::optional<InvolutionWitness> hyperelliptic_involution(const Origami& o) {
  auto all = involutions(o);
  if (all.empty()) return std::nullopt;
  return all.front();
}

}  // namespace squaretile
