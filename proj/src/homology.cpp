#include "squaretile/homology.hpp"

#include <deque>
#include <numeric>
#include <sstream>

#include "squaretile/error.hpp"

namespace squaretile {

// Walking the bottom-left corners i, c(i), c^2(i), ... with c the corner
// rotation, each corner contributes the east ray x_i, the north ray y_i, the
// west ray (end of x_{h^-1 i}) and the south ray (top of y_{h v^-1 h^-1 i}).
std::vector<std::vector<EdgeEnd>> edge_ends_ccw(const Origami& o) {
  const std::size_t n = o.size();
  std::vector<std::vector<EdgeEnd>> out;
  for (const auto& vx : singularities(o)) {
    std::vector<EdgeEnd> ends;
    for (std::size_t i : vx.corners) {
      ends.push_back({x_edge(i), true});
      ends.push_back({y_edge(n, i), true});
      ends.push_back({x_edge(o.h_inv()(i)), false});
      ends.push_back({y_edge(n, o.h()(o.v_inv()(o.h_inv()(i)))), false});
    }
    out.push_back(std::move(ends));
  }
  return out;
}

namespace {

Rational positive_part(const Rational& a) { return a > 0 ? a : Rational(0); }

}  // namespace

Homology::Homology(const Origami& o) : o_(o), vertex_of_(vertex_of_corners(o)) {
  const std::size_t n = o.size();
  const std::size_t edges = 2 * n;
  vertex_count_ = singularities(o).size();

  std::vector<std::vector<std::size_t>> incident(vertex_count_);
  for (std::size_t e = 0; e < edges; ++e) {
    incident[edge_init(e)].push_back(e);
    if (edge_term(e) != edge_init(e)) incident[edge_term(e)].push_back(e);
  }

  // Primal spanning tree by breadth-first search from vertex 0.
  constexpr std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> parent_edge(vertex_count_, none);
  std::vector<bool> reached(vertex_count_, false), in_tree(edges, false);
  std::deque<std::size_t> queue{0};
  reached[0] = true;
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    for (std::size_t e : incident[u]) {
      const std::size_t w = edge_init(e) == u ? edge_term(e) : edge_init(e);
      if (reached[w]) continue;
      reached[w] = true;
      parent_edge[w] = e;
      in_tree[e] = true;
      queue.push_back(w);
    }
  }

  // Dual spanning tree: squares joined across edges not in the primal tree.
  auto dual_ends = [&](std::size_t e) -> std::pair<std::size_t, std::size_t> {
    if (e < n) return {o.v_inv()(e), e};
    return {o.h_inv()(e - n), e - n};
  };
  std::vector<std::vector<std::size_t>> dual_incident(n);
  for (std::size_t e = 0; e < edges; ++e) {
    if (in_tree[e]) continue;
    const auto [a, b] = dual_ends(e);
    if (a == b) continue;
    dual_incident[a].push_back(e);
    dual_incident[b].push_back(e);
  }
  std::vector<bool> dual_reached(n, false), in_cotree(edges, false);
  queue = {0};
  dual_reached[0] = true;
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    for (std::size_t e : dual_incident[u]) {
      const auto [a, b] = dual_ends(e);
      const std::size_t w = a == u ? b : a;
      if (dual_reached[w]) continue;
      dual_reached[w] = true;
      in_cotree[e] = true;
      queue.push_back(w);
    }
  }

  auto path_to_root = [&](std::size_t u, const Rational& sign, Vector& chain) {
    while (u != 0) {
      const std::size_t e = parent_edge[u];
      // Walking u -> parent along e agrees with e's orientation iff u is its start.
      if (edge_init(e) == u) {
        chain[e] += sign;
        u = edge_term(e);
      } else {
        chain[e] -= sign;
        u = edge_init(e);
      }
    }
  };
  for (std::size_t e = 0; e < edges; ++e) {
    if (in_tree[e] || in_cotree[e]) continue;
    Vector chain(edges);
    chain[e] = 1;
    path_to_root(edge_term(e), 1, chain);
    path_to_root(edge_init(e), -1, chain);
    ensure(is_cycle(chain), "fundamental cycle is not closed");
    basis_.push_back(std::move(chain));
  }
  ensure(static_cast<long>(basis_.size()) == static_cast<long>(n) - static_cast<long>(vertex_count_) + 2,
         "tree-cotree leftover count differs from 2g");
  ensure(basis_.size() == 2 * stratum(o).genus, "rank of H_1 differs from twice the genus");

  const std::size_t r = basis_.size();
  gram_ = Matrix(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) gram_(i, j) = intersection(basis_[i], basis_[j]);
  ensure(gram_.transpose() == Rational(-1) * gram_, "intersection matrix is not antisymmetric");
  ensure(gram_.is_integral(), "intersection matrix is not integral");
  ensure(abs(determinant(gram_)) == 1, "intersection matrix is not unimodular");
  gram_transpose_inverse_ = checked_inverse(gram_.transpose());

  std::vector<Vector> columns = basis_;
  for (std::size_t i = 0; i < n; ++i) columns.push_back(square_boundary(i));
  solver_.emplace(Matrix::from_columns(columns, edges));
  ensure(solver_->rank() == r + n - 1, "basis and square boundaries have the wrong rank");

  holonomy_ = Matrix(2, r);
  for (std::size_t k = 0; k < r; ++k) {
    const auto hol = holonomy_of_chain(basis_[k]);
    holonomy_(0, k) = hol[0];
    holonomy_(1, k) = hol[1];
  }
}

std::size_t Homology::edge_init(std::size_t e) const {
  const std::size_t n = o_.size();
  return e < n ? vertex_of_[e] : vertex_of_[e - n];
}

std::size_t Homology::edge_term(std::size_t e) const {
  const std::size_t n = o_.size();
  return e < n ? vertex_of_[o_.h()(e)] : vertex_of_[o_.v()(e - n)];
}

Vector Homology::boundary(const Vector& chain) const {
  if (chain.size() != edge_count()) throw InputError("chain has the wrong number of edges");
  Vector out(vertex_count_);
  for (std::size_t e = 0; e < chain.size(); ++e) {
    out[edge_term(e)] += chain[e];
    out[edge_init(e)] -= chain[e];
  }
  return out;
}

Vector Homology::square_boundary(std::size_t i) const {
  const std::size_t n = o_.size();
  Vector c(edge_count());
  c[x_edge(i)] += 1;
  c[y_edge(n, o_.h()(i))] += 1;
  c[x_edge(o_.v()(i))] -= 1;
  c[y_edge(n, i)] -= 1;
  return c;
}

bool Homology::is_cycle(const Vector& chain) const { return is_zero(boundary(chain)); }

Vector Homology::coordinates(const Vector& chain) const {
  if (!is_cycle(chain)) throw InputError("chain is not closed");
  auto sol = solver_->solve(chain);
  ensure(sol.has_value(), "closed chain is not a combination of basis cycles and boundaries");
  return Vector(sol->begin(), sol->begin() + static_cast<long>(rank()));
}

Vector Homology::chain(const Vector& coords) const {
  Vector c(edge_count());
  for (std::size_t k = 0; k < rank(); ++k)
    if (coords[k] != 0)
      for (std::size_t e = 0; e < c.size(); ++e) c[e] += coords[k] * basis_[k][e];
  return c;
}

Rational Homology::intersection(const Vector& c1, const Vector& c2) const {
  if (c1.size() != edge_count() || c2.size() != edge_count())
    throw InputError("cycles belong to origamis of different size");
  if (!is_cycle(c1) || !is_cycle(c2)) throw InputError("intersection needs closed chains");
  // Around a vertex, F is the signed flux of c2 through the sectors met so far.
  // A strand of c1 entering along end f is pushed to the sector just before f,
  // one leaving along f to the sector just after it; the crossing count is the
  // flux difference between where it arrives and where it leaves.
  Rational total = 0;
  for (const auto& ends : edge_ends_ccw(o_)) {
    Rational flux = 0;
    for (const auto& f : ends) {
      const Rational w2 = f.initial ? c2[f.edge] : Rational(-c2[f.edge]);
      const Rational& a = c1[f.edge];
      const Rational in = f.initial ? positive_part(-a) : positive_part(a);
      const Rational out = f.initial ? positive_part(a) : positive_part(-a);
      total += in * flux - out * (flux + w2);
      flux += w2;
    }
  }
  return total;
}

Rational Homology::pairing(const Vector& x, const Vector& y) const {
  Rational s = 0;
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t j = 0; j < rank(); ++j)
      if (x[i] != 0 && y[j] != 0) s += x[i] * gram_(i, j) * y[j];
  return s;
}

Rational Homology::crossing_pairing(const std::vector<Crossing>& curve, const Vector& chain) const {
  const std::size_t n = o_.size();
  Rational s = 0;
  for (const auto& c : curve) {
    // Going up across a rightward edge counts -1; rightward across an upward edge +1.
    if (c.edge < n)
      s -= c.direction * chain[c.edge];
    else
      s += c.direction * chain[c.edge];
  }
  return s;
}

Vector Homology::class_of_curve(const std::vector<Crossing>& curve) const {
  Vector f(rank());
  for (std::size_t l = 0; l < rank(); ++l) f[l] = crossing_pairing(curve, basis_[l]);
  return gram_transpose_inverse_ * f;
}

std::array<Rational, 2> Homology::holonomy_of_chain(const Vector& chain) const {
  const std::size_t n = o_.size();
  std::array<Rational, 2> h{0, 0};
  for (std::size_t i = 0; i < n; ++i) {
    h[0] += chain[x_edge(i)];
    h[1] += chain[y_edge(n, i)];
  }
  return h;
}

std::array<Rational, 2> Homology::holonomy(const Vector& coords) const {
  const Vector h = holonomy_ * coords;
  return {h[0], h[1]};
}

Vector waist_class(const Homology& hom, const Cylinder& cyl, std::size_t row) {
  if (row >= cyl.rows.size()) throw InputError("cylinder row out of range");
  return hom.class_of_curve(cyl.rows[row].core);
}

namespace {

std::vector<Cylinder> reordered(std::vector<Cylinder> cyls, const std::vector<std::size_t>* order, const char* what) {
  if (!order || order->empty()) return cyls;
  if (order->size() != cyls.size()) throw InputError(std::string(what) + " order has the wrong length");
  std::vector<bool> used(cyls.size(), false);
  std::vector<Cylinder> out;
  for (std::size_t k : *order) {
    if (k >= cyls.size() || used[k]) throw InputError(std::string(what) + " order is not a permutation");
    used[k] = true;
    out.push_back(cyls[k]);
  }
  return out;
}

std::string term(long coeff, const std::string& name, bool first) {
  std::string s;
  if (coeff < 0)
    s = "-";
  else if (!first)
    s = "+";
  const long a = std::labs(coeff);
  if (a != 1) s += std::to_string(a);
  return s + name;
}

}  // namespace

Waists horizontal_vertical_waists(const Homology& hom, const WaistOrder* order) {
  Waists w;
  const auto hs = reordered(cylinders(hom.origami(), {1, 0}), order ? &order->sigma : nullptr, "sigma");
  const auto vs = reordered(cylinders(hom.origami(), {0, 1}), order ? &order->zeta : nullptr, "zeta");
  for (const auto& c : hs) {
    w.sigma.push_back(waist_class(hom, c));
    w.sigma_length.push_back(c.circumference);
  }
  for (const auto& c : vs) {
    w.zeta.push_back(waist_class(hom, c));
    w.zeta_length.push_back(c.circumference);
  }
  return w;
}

PerpBasis perp_subspace(const Homology& hom, const WaistOrder* order) {
  const std::size_t r = hom.rank();
  PerpBasis out;
  if (r == 0) return out;

  const Waists w = horizontal_vertical_waists(hom, order);
  std::vector<Vector> all = w.sigma;
  all.insert(all.end(), w.zeta.begin(), w.zeta.end());
  const bool spans = rank(Matrix::from_columns(all, r)) == r;
  if (spans && w.sigma.size() + w.zeta.size() == r) {
    auto add_family = [&](const std::vector<Vector>& wc, const std::vector<long>& len, const std::string& name) {
      for (std::size_t i = 1; i < wc.size(); ++i) {
        const long g = std::gcd(len[0], len[i]);
        const long a = len[0] / g, b = len[i] / g;
        Vector v(r);
        for (std::size_t k = 0; k < r; ++k) v[k] = a * wc[i][k] - b * wc[0][k];
        out.vectors.push_back(std::move(v));
        out.labels.push_back(term(a, name + std::to_string(i), true) + term(-b, name + "0", false));
      }
    };
    add_family(w.sigma, w.sigma_length, "sigma");
    add_family(w.zeta, w.zeta_length, "zeta");
    if (rank(Matrix::from_columns(out.vectors, r)) == r - 2) {
      out.from_waists = true;
      return out;
    }
    out = PerpBasis{};
  }
  if (order && (!order->sigma.empty() || !order->zeta.empty()))
    throw InputError("waist classes do not give a basis of the holonomy kernel; no waist order applies");
  const auto kernel = nullspace(hom.holonomy_matrix());
  for (std::size_t k = 0; k < kernel.size(); ++k) {
    out.vectors.push_back(scaled_to_primitive_integers(kernel[k]));
    out.labels.push_back("k" + std::to_string(k + 1));
  }
  ensure(out.vectors.size() == r - 2, "holonomy kernel does not have rank 2g-2");
  return out;
}

std::string chain_to_string(const Vector& chain, std::size_t n) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t e = 0; e < chain.size(); ++e) {
    if (chain[e] == 0) continue;
    os << (first ? "" : " ") << (e < n ? 'x' : 'y') << (e < n ? e : e - n) + 1 << ':' << chain[e].get_str();
    first = false;
  }
  return first ? "0" : os.str();
}

}  // namespace squaretile
