#include "bump/augmented.hpp"

#include <ostream>
#include <stdexcept>

namespace bump {

AugmentedDiagram::AugmentedDiagram(YoungDiagram regular, Box special)
    : regular_(std::move(regular)), special_(special) {
  if (!regular_.is_outer_corner(special_))
    throw std::invalid_argument("AugmentedDiagram: special box is not an outer corner");
}

std::ostream& operator<<(std::ostream& os, const AugmentedDiagram& a) {
  return os << a.regular() << '*' << a.special();
}

AugmentedDiagram augmented_shape(const InsertionTableau& t) {
  std::vector<int> rows;
  std::optional<Box> special;
  for (std::size_t y = 0; y < t.num_rows(); ++y) {
    const auto& r = t.rows()[y];
    int len = static_cast<int>(r.size());
    // plus infinity exceeds everything, so it can only sit at a row end
    for (std::size_t x = 0; x + 1 < r.size(); ++x)
      if (r[x].is_plus_infinity()) throw std::invalid_argument("augmented_shape: misplaced infinity");
    if (!r.empty() && r.back().is_plus_infinity()) {
      if (special) throw std::invalid_argument("augmented_shape: more than one infinity");
      special = Box{len - 1, static_cast<int>(y)};
      --len;
    }
    rows.push_back(len);
  }
  if (!special) throw std::invalid_argument("augmented_shape: no infinity entry");
  return AugmentedDiagram(YoungDiagram(std::move(rows)), *special);
}

AugmentedDiagram step(const AugmentedDiagram& a, Box new_box) {
  YoungDiagram grown = a.regular().with_box(new_box);
  Box special = a.special();
  if (new_box == special) special = Box{grown.row(static_cast<std::size_t>(special.y) + 1), special.y + 1};
  return AugmentedDiagram(std::move(grown), special);
}

bool is_edge(const AugmentedDiagram& a, const AugmentedDiagram& b) {
  const auto added = added_box(a.regular(), b.regular());
  if (!added) return false;
  if (*added == a.special()) {
    const Box expected{b.regular().row(static_cast<std::size_t>(a.special().y) + 1), a.special().y + 1};
    return b.special() == expected;
  }
  return b.special() == a.special();
}

bool is_bump(const AugmentedDiagram& a, const AugmentedDiagram& b) {
  return is_edge(a, b) && a.special() != b.special();
}

ExtendedNode step_extended(const ExtendedNode& node, Box new_box) {
  ExtendedNode out{node.x, node.regular.with_box(new_box)};
  if (new_box.x == node.x) {
    // the largest row length not exceeding x; rows past the top count as 0
    int best = 0;
    for (int len : out.regular.rows())
      if (len <= node.x && len > best) best = len;
    out.x = best;
  }
  return out;
}

std::vector<AugmentedDiagram> lift_path(const AugmentedDiagram& start, std::span<const YoungDiagram> path) {
  if (path.empty() || path.front() != start.regular())
    throw std::invalid_argument("lift_path: path must start at the regular part of start");
  std::vector<AugmentedDiagram> out;
  out.reserve(path.size());
  out.push_back(start);
  for (std::size_t i = 1; i < path.size(); ++i) {
    const auto added = added_box(path[i - 1], path[i]);
    if (!added) throw std::invalid_argument("lift_path: consecutive diagrams are not an edge");
    out.push_back(step(out.back(), *added));
  }
  return out;
}

AugmentedDiagram transpose(const AugmentedDiagram& a) {
  return AugmentedDiagram(a.regular().transposed(), Box{a.special().y, a.special().x});
}

int count_bumps(std::span<const AugmentedDiagram> path) {
  int bumps = 0;
  for (std::size_t i = 1; i < path.size(); ++i)
    if (path[i].special() != path[i - 1].special()) ++bumps;
  return bumps;
}

}  // namespace bump
