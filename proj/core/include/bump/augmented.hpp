#pragma once

// Augmented Young diagrams: a regular diagram together with a special box
// sitting at one of its outer corners. The special box marks where the
// maximal entry of a tableau lives; growing the regular part moves it up one
// row exactly when the new box lands on it.

#include <span>
#include <vector>

#include "bump/tableau.hpp"

namespace bump {

class AugmentedDiagram {
 public:
  /// Throws std::invalid_argument unless special is an outer corner of regular.
  AugmentedDiagram(YoungDiagram regular, Box special);

  const YoungDiagram& regular() const noexcept { return regular_; }
  Box special() const noexcept { return special_; }
  /// The regular diagram with the special box added.
  YoungDiagram full_shape() const { return regular_.with_box(special_); }

  friend bool operator==(const AugmentedDiagram&, const AugmentedDiagram&) = default;

 private:
  YoungDiagram regular_;
  Box special_;
};

std::ostream& operator<<(std::ostream& os, const AugmentedDiagram& a);

/// Node of the extended graph: the special box is remembered only by its
/// column and need not be a corner.
struct ExtendedNode {
  int x = 0;
  YoungDiagram regular;

  friend bool operator==(const ExtendedNode&, const ExtendedNode&) = default;
};

/// Regular shape and position of the unique plus-infinity entry. Throws
/// std::invalid_argument if t holds zero or several such entries.
AugmentedDiagram augmented_shape(const InsertionTableau& t);

/// Whether b is a successor of a in the augmented Young graph.
bool is_edge(const AugmentedDiagram& a, const AugmentedDiagram& b);
/// An edge along which the special box moves.
bool is_bump(const AugmentedDiagram& a, const AugmentedDiagram& b);

/// The unique successor of a whose regular part gains new_box. Throws
/// std::invalid_argument if new_box is not an outer corner of a.regular().
AugmentedDiagram step(const AugmentedDiagram& a, Box new_box);

/// Same update expressed on the extended graph.
ExtendedNode step_extended(const ExtendedNode& node, Box new_box);

/// Lift of the growth path (path[0] = start.regular()) to the augmented
/// graph; element i of the result sits over path[i]. Throws
/// std::invalid_argument if consecutive diagrams do not differ by one box.
std::vector<AugmentedDiagram> lift_path(const AugmentedDiagram& start,
                                        std::span<const YoungDiagram> path);

/// Rows and columns exchanged, for the regular part and the special box.
AugmentedDiagram transpose(const AugmentedDiagram& a);

/// Number of bumps along an augmented path.
int count_bumps(std::span<const AugmentedDiagram> path);

}  // namespace bump
