#include "squaretile/origami.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "squaretile/error.hpp"

namespace squaretile {

namespace {

bool transitive(const Permutation& h, const Permutation& v) {
  const std::size_t n = h.size();
  if (n == 0) return false;
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    const std::size_t i = stack.back();
    stack.pop_back();
    for (std::size_t j : {h(i), v(i)}) {
      if (!seen[j]) {
        seen[j] = true;
        ++count;
        stack.push_back(j);
      }
    }
  }
  return count == n;
}

// Vertex count from the corner gluings directly, independent of the
// commutator: corner k of square i is 4*i + k with k = BL, BR, TR, TL.
std::size_t count_corner_orbits(const Origami& o) {
  const std::size_t n = o.size();
  std::vector<std::size_t> parent(4 * n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](std::size_t a, std::size_t b) { parent[find(a)] = find(b); };
  enum { BL = 0, BR = 1, TR = 2, TL = 3 };
  for (std::size_t i = 0; i < n; ++i) {
    unite(4 * i + BR, 4 * o.h()(i) + BL);
    unite(4 * i + TR, 4 * o.h()(i) + TL);
    unite(4 * i + TL, 4 * o.v()(i) + BL);
    unite(4 * i + TR, 4 * o.v()(i) + BR);
  }
  std::size_t roots = 0;
  for (std::size_t x = 0; x < 4 * n; ++x) roots += find(x) == x;
  return roots;
}

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

// Propagates p(0) = image through p a = b p for both generators.
std::optional<Permutation> propagate(const Origami& o1, const Origami& o2, std::size_t image) {
  const std::size_t n = o1.size();
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> p(n, unset);
  std::vector<bool> hit(n, false);
  p[0] = image;
  hit[image] = true;
  std::vector<std::size_t> stack{0};
  while (!stack.empty()) {
    const std::size_t i = stack.back();
    stack.pop_back();
    const std::pair<std::size_t, std::size_t> steps[] = {{o1.h()(i), o2.h()(p[i])}, {o1.v()(i), o2.v()(p[i])}};
    for (auto [from, to] : steps) {
      if (p[from] == unset) {
        if (hit[to]) return std::nullopt;
        p[from] = to;
        hit[to] = true;
        stack.push_back(from);
      } else if (p[from] != to) {
        return std::nullopt;
      }
    }
  }
  return Permutation(std::move(p));
}

}  // namespace

Origami::Origami(Permutation h, Permutation v) : h_(std::move(h)), v_(std::move(v)) {
  if (h_.size() != v_.size()) throw ParseError(ParseErrorKind::Syntax, "h and v act on different sets");
  if (!transitive(h_, v_))
    throw ParseError(ParseErrorKind::NotTransitive, "h and v do not act transitively; surface is disconnected");
  h_inv_ = h_.inverse();
  v_inv_ = v_.inverse();
}

Permutation Origami::corner_rotation() const { return v_ * h_ * v_inv_ * h_inv_; }

std::string Origami::to_string() const {
  return "h=" + h_.to_cycle_string() + "; v=" + v_.to_cycle_string() + "; n=" + std::to_string(size());
}

Origami Origami::relabeled(const Permutation& p) const {
  const Permutation pinv = p.inverse();
  return Origami(p * h_ * pinv, p * v_ * pinv);
}

Origami parse_origami(const std::string& text) {
  std::optional<std::string> h_text, v_text;
  std::optional<std::size_t> n;
  std::string field;
  std::istringstream is(text);
  std::vector<std::string> fields;
  for (std::string part; std::getline(is, part, '\n');) {
    std::istringstream ps(part);
    for (std::string f; std::getline(ps, f, ';');) {
      f = trim(f);
      if (!f.empty()) fields.push_back(f);
    }
  }
  for (const auto& f : fields) {
    const auto eq = f.find('=');
    if (eq == std::string::npos) throw ParseError(ParseErrorKind::Syntax, "expected key=value, got '" + f + "'");
    const std::string key = trim(f.substr(0, eq));
    const std::string value = trim(f.substr(eq + 1));
    if (key == "h" || key == "v") {
      auto& slot = key == "h" ? h_text : v_text;
      if (slot) throw ParseError(ParseErrorKind::Syntax, "duplicate field " + key);
      slot = value;
    } else if (key == "n") {
      if (n) throw ParseError(ParseErrorKind::Syntax, "duplicate field n");
      if (value.empty() || !std::all_of(value.begin(), value.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw ParseError(ParseErrorKind::Syntax, "n must be a positive integer");
      n = std::stoul(value);
      if (*n == 0) throw ParseError(ParseErrorKind::Syntax, "n must be a positive integer");
    } else {
      throw ParseError(ParseErrorKind::Syntax, "unknown field '" + key + "'");
    }
  }
  if (!h_text || !v_text) throw ParseError(ParseErrorKind::Syntax, "origami needs both h= and v= fields");
  const auto hc = parse_cycles(*h_text);
  const auto vc = parse_cycles(*v_text);
  std::size_t max_symbol = 0;
  for (const auto* cs : {&hc, &vc})
    for (const auto& c : *cs)
      for (auto s : c) max_symbol = std::max(max_symbol, s);
  const std::size_t size = n.value_or(std::max<std::size_t>(max_symbol, 1));
  return Origami(Permutation::from_cycles(size, hc), Permutation::from_cycles(size, vc));
}

std::vector<Vertex> singularities(const Origami& o) {
  const Permutation rot = o.corner_rotation();
  std::vector<Vertex> out;
  for (auto& cyc : rot.cycles()) {
    Vertex vx{out.size(), std::move(cyc), 0};
    vx.cone_order = vx.corners.size() - 1;
    out.push_back(std::move(vx));
  }
  return out;
}

std::vector<std::size_t> vertex_of_corners(const Origami& o) {
  std::vector<std::size_t> of(o.size());
  for (const auto& vx : singularities(o))
    for (auto c : vx.corners) of[c] = vx.id;
  return of;
}

std::string StratumSignature::to_string() const {
  std::ostringstream os;
  os << "H(";
  for (std::size_t i = 0; i < zero_orders.size(); ++i) os << (i ? "," : "") << zero_orders[i];
  os << ')';
  return os.str();
}

StratumSignature stratum(const Origami& o) {
  const std::size_t n = o.size();
  StratumSignature s;
  std::size_t vertices = 0;
  long total_order = 0;
  for (const auto& vx : singularities(o)) {
    ++vertices;
    if (vx.cone_order == 0)
      ++s.marked_regular_points;
    else
      s.zero_orders.push_back(vx.cone_order);
    total_order += static_cast<long>(vx.cone_order);
  }
  std::sort(s.zero_orders.rbegin(), s.zero_orders.rend());

  ensure(count_corner_orbits(o) == vertices, "corner orbits disagree with commutator cycles");
  // Euler characteristic V - E + F with E = 2n edges and F = n squares.
  const long euler = static_cast<long>(count_corner_orbits(o)) - static_cast<long>(n);
  ensure(euler % 2 == 0 && euler <= 0, "Euler characteristic of an origami must be even and non-positive");
  const long genus_euler = (2 - euler) / 2;
  ensure(total_order % 2 == 0, "total zero order must be even");
  const long genus_orders = (total_order + 2) / 2;
  ensure(genus_euler == genus_orders, "genus from zero orders disagrees with Euler characteristic");
  s.genus = static_cast<std::size_t>(genus_euler);
  return s;
}

Sl2z Sl2z::checked(long a, long b, long c, long d) {
  if (a * d - b * c != 1) throw InputError("matrix does not have determinant 1");
  return {a, b, c, d};
}

namespace {

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Origami act_letter(char letter, const Origami& o) {
  switch (letter) {
    case 'T':
      return Origami(o.h(), o.v() * o.h_inv());
    case 't':
      return Origami(o.h(), o.v() * o.h());
    case 'S':
      return Origami(o.v_inv(), o.h());
    default:
      throw InvariantViolation("unknown SL(2,Z) letter");
  }
}

}  // namespace

std::string sl2z_word(const Sl2z& m) {
  if (m.a * m.d - m.b * m.c != 1) throw InputError("matrix does not have determinant 1");
  // Left-multiply by letters until the identity is reached; m is then the
  // product of the inverse letters in application order.
  Sl2z cur = m;
  std::string applied;
  auto apply_t = [&](long k) {
    for (long i = 0; i < std::abs(k); ++i) applied.push_back(k > 0 ? 'T' : 't');
    cur = Sl2z{cur.a + k * cur.c, cur.b + k * cur.d, cur.c, cur.d};
  };
  auto apply_s = [&] {
    applied.push_back('S');
    cur = Sl2z::S() * cur;
  };
  while (cur.c != 0) {
    apply_t(-floor_div(cur.a, cur.c));
    apply_s();
  }
  if (cur.a == -1) {
    apply_s();
    apply_s();
  }
  apply_t(-cur.b);
  ensure(cur == Sl2z{}, "SL(2,Z) word reduction did not reach the identity");

  std::string word;
  for (char l : applied) {
    if (l == 'T')
      word.push_back('t');
    else if (l == 't')
      word.push_back('T');
    else
      word += "SSS";
  }
  return word;
}

Origami sl2z_act(const Sl2z& m, const Origami& o) {
  const std::string word = sl2z_word(m);
  Origami cur = o;
  for (auto it = word.rbegin(); it != word.rend(); ++it) cur = act_letter(*it, cur);
  return cur;
}

Sl2z sl2z_to_horizontal(std::array<long, 2> dir) {
  const long p = dir[0], q = dir[1];
  // Extended Euclid: x p + y q = 1.
  long old_r = p, r = q, old_x = 1, x = 0, old_y = 0, y = 1;
  while (r != 0) {
    const long quot = floor_div(old_r, r);
    old_r -= quot * r;
    std::swap(old_r, r);
    old_x -= quot * x;
    std::swap(old_x, x);
    old_y -= quot * y;
    std::swap(old_y, y);
  }
  if (old_r == -1) {
    old_x = -old_x;
    old_y = -old_y;
    old_r = 1;
  }
  if (old_r != 1) throw InputError("direction vector is not primitive");
  const Sl2z g{old_x, old_y, -q, p};
  ensure(g.apply(dir) == std::array<long, 2>{1, 0}, "horizontalizing matrix is wrong");
  return g;
}

std::optional<Permutation> iso(const Origami& o1, const Origami& o2) {
  if (o1.size() != o2.size()) return std::nullopt;
  for (std::size_t j = 0; j < o2.size(); ++j)
    if (auto p = propagate(o1, o2, j)) return p;
  return std::nullopt;
}

std::vector<Permutation> aut(const Origami& o) {
  std::vector<Permutation> out;
  for (std::size_t j = 0; j < o.size(); ++j)
    if (auto p = propagate(o, o, j)) out.push_back(std::move(*p));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace squaretile
