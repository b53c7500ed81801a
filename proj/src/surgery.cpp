#include "squaretile/surgery.hpp"

#include <numeric>

#include "squaretile/cylinders.hpp"
#include "squaretile/error.hpp"

namespace squaretile {

namespace {

void check_slit(const Origami& o, const SlitSpec& slit) {
  if (slit.base_square >= o.size())
    throw InputError("slit square " + std::to_string(slit.base_square + 1) + " is out of range 1.." +
                     std::to_string(o.size()));
}

std::size_t zero_order_sum(const StratumSignature& s) {
  return std::accumulate(s.zero_orders.begin(), s.zero_orders.end(), std::size_t{0});
}

}  // namespace

Origami insert_square_handle(const Origami& o, const SlitSpec& slit) {
  check_slit(o, slit);
  const std::size_t n = o.size(), a = slit.base_square, s = n;
  std::vector<std::size_t> h = o.h().images(), v = o.v().images();
  h.push_back(s);
  v.push_back(v[a]);
  v[a] = s;
  return Origami(Permutation(h), Permutation(v));
}

bool slit_endpoints_distinct(const Origami& o, const SlitSpec& slit) {
  check_slit(o, slit);
  const auto vx = vertex_of_corners(o);
  const std::size_t a = slit.base_square;
  // Top-left of a is the bottom-left of v(a); top-right is the bottom-left of v(h(a)).
  return vx[o.v()(a)] != vx[o.v()(o.h()(a))];
}

Origami bubble_square_handle(const Origami& o, const SlitSpec& slit) {
  if (!slit_endpoints_distinct(o, slit))
    throw InputError("slit at square " + std::to_string(slit.base_square + 1) +
                     " starts and ends at the same point; a square handle there does not add genus");
  const Origami out = insert_square_handle(o, slit);
  const auto before = stratum(o), after = stratum(out);
  ensure(after.genus == before.genus + 1, "bubbling did not raise the genus by one");
  ensure(zero_order_sum(after) == zero_order_sum(before) + 2, "bubbling did not raise the total zero order by two");
  bool unit_cylinder = false;
  for (const auto& c : cylinders(out, {1, 0}))
    unit_cylinder = unit_cylinder || (c.circumference == 1 && c.height == 1 && c.squares() == std::vector<std::size_t>{o.size()});
  ensure(unit_cylinder, "new square is not a 1x1 horizontal cylinder");
  return out;
}

}  // namespace squaretile
