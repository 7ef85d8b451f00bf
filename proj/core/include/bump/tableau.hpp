#pragma once

// Young diagrams, insertion and recording tableaux, Schensted row insertion
// and the RSK correspondence. Diagrams are drawn in the French convention:
// row 0 is the bottom row, boxes are addressed by the zero-based (x, y) of
// their lower-left corner.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

namespace bump {

struct Box {
  int x = 0;
  int y = 0;

  friend constexpr auto operator<=>(const Box&, const Box&) = default;
};

std::ostream& operator<<(std::ostream& os, Box b);

/// Weakly decreasing row lengths, bottom row first. Trailing zero rows are
/// never stored, so two equal diagrams always compare equal.
class YoungDiagram {
 public:
  YoungDiagram() = default;
  /// Throws std::invalid_argument unless the lengths are non-negative and
  /// weakly decreasing. Trailing zeros are dropped.
  explicit YoungDiagram(std::vector<int> rows);

  const std::vector<int>& rows() const noexcept { return rows_; }
  int row(std::size_t y) const noexcept { return y < rows_.size() ? rows_[y] : 0; }
  std::size_t num_rows() const noexcept { return rows_.size(); }
  std::int64_t size() const noexcept { return size_; }
  bool empty() const noexcept { return rows_.empty(); }

  /// Number of boxes in column x.
  int column_length(int x) const noexcept;
  bool contains(Box b) const noexcept;
  /// True iff adding b keeps the diagram valid.
  bool is_outer_corner(Box b) const noexcept;
  /// Outer corners ordered bottom to top.
  std::vector<Box> outer_corners() const;

  /// Throws std::invalid_argument if b is not an outer corner.
  void add_box(Box b);
  YoungDiagram with_box(Box b) const;
  YoungDiagram transposed() const;

  friend bool operator==(const YoungDiagram&, const YoungDiagram&) = default;

 private:
  std::vector<int> rows_;
  std::int64_t size_ = 0;
};

std::ostream& operator<<(std::ostream& os, const YoungDiagram& d);

/// The unique box of larger/smaller, or nullopt when the pair is not an
/// edge of the Young graph.
std::optional<Box> added_box(const YoungDiagram& smaller, const YoungDiagram& larger);

/// Totally ordered tableau entry. A finite entry is a real value with an
/// integer tiebreak; a probe of level k sits strictly between the integers
/// k and k+1; plus infinity exceeds everything.
class Entry {
 public:
  enum class Kind : std::uint8_t { finite, probe, plus_infinity };

  /// Throws std::invalid_argument for NaN.
  static Entry finite(double value, std::uint64_t tiebreak = 0);
  static Entry probe(std::int64_t level) noexcept;
  static Entry plus_infinity() noexcept;

  Kind kind() const noexcept { return kind_; }
  bool is_finite() const noexcept { return kind_ == Kind::finite; }
  bool is_probe() const noexcept { return kind_ == Kind::probe; }
  bool is_plus_infinity() const noexcept { return kind_ == Kind::plus_infinity; }

  double value() const noexcept { return value_; }
  std::uint64_t tiebreak() const noexcept { return aux_; }
  std::int64_t level() const noexcept { return static_cast<std::int64_t>(aux_); }

  // A probe that ties with a finite value k+1/2 orders before it.
  friend std::strong_ordering operator<=>(const Entry& a, const Entry& b) noexcept;
  friend bool operator==(const Entry& a, const Entry& b) noexcept { return (a <=> b) == 0; }

 private:
  Entry(Kind kind, double value, std::uint64_t aux) noexcept
      : value_(value), aux_(aux), kind_(kind) {}

  double value_ = 0.0;
  std::uint64_t aux_ = 0;
  Kind kind_ = Kind::finite;
};

std::ostream& operator<<(std::ostream& os, const Entry& e);

/// Finite entries (w_i, i) for i = 1..n.
std::vector<Entry> to_entries(std::span<const double> values);
std::vector<Entry> to_entries(std::span<const int> values);

/// Rows strictly increasing left to right, columns strictly increasing
/// bottom to top.
class InsertionTableau {
 public:
  InsertionTableau() = default;
  /// Throws std::invalid_argument if the rows do not form a valid tableau.
  explicit InsertionTableau(std::vector<std::vector<Entry>> rows);

  const std::vector<std::vector<Entry>>& rows() const noexcept { return rows_; }
  std::size_t num_rows() const noexcept { return rows_.size(); }
  int row_length(std::size_t y) const noexcept {
    return y < rows_.size() ? static_cast<int>(rows_[y].size()) : 0;
  }
  std::int64_t size() const noexcept { return size_; }
  YoungDiagram shape() const;
  const Entry& at(Box b) const;

  /// Schensted row insertion in place; returns the newly created box.
  /// Throws std::invalid_argument (leaving the tableau untouched) if a is
  /// already present.
  Box insert(const Entry& a);
  /// As insert, but returns the whole bumping route ending in the new box.
  std::vector<Box> insert_with_route(const Entry& a);

  bool is_valid() const;
  InsertionTableau transposed() const;

  friend bool operator==(const InsertionTableau&, const InsertionTableau&) = default;

 private:
  void check_route(std::span<const Box> route) const;

  std::vector<std::vector<Entry>> rows_;
  std::int64_t size_ = 0;
};

struct RowInsertResult {
  InsertionTableau tableau;
  std::vector<Box> route;
};

/// T <- a as a value: the output tableau and the bumping route including
/// the final new box.
RowInsertResult row_insert(InsertionTableau t, const Entry& a);

/// Distinct positive integer entries with increasing rows and columns.
class StandardTableau {
 public:
  StandardTableau() = default;
  /// Throws std::invalid_argument unless rows and columns strictly increase
  /// and entries are distinct positive integers.
  explicit StandardTableau(std::vector<std::vector<std::int64_t>> rows);

  const std::vector<std::vector<std::int64_t>>& rows() const noexcept { return rows_; }
  std::size_t num_rows() const noexcept { return rows_.size(); }
  std::int64_t size() const noexcept { return size_; }
  YoungDiagram shape() const;
  std::int64_t at(Box b) const;
  /// Position of entry s, if present.
  std::optional<Box> position_of(std::int64_t s) const;
  /// True iff the entries are exactly {1, ..., size()}.
  bool is_complete() const;

  /// Adds value at an outer corner. The value must exceed every entry.
  void append(Box b, std::int64_t value);

  StandardTableau transposed() const;
  /// The same numbers as finite entries, for use as an insertion tableau.
  InsertionTableau as_insertion() const;

  friend bool operator==(const StandardTableau&, const StandardTableau&) = default;

 private:
  std::vector<std::vector<std::int64_t>> rows_;
  std::int64_t size_ = 0;
  std::int64_t max_entry_ = 0;
};

struct RskResult {
  InsertionTableau p;
  StandardTableau q;
};

/// Iterated row insertion of w into the empty tableau. Throws
/// std::invalid_argument if two entries of w tie.
RskResult rsk(std::span<const Entry> w);
RskResult rsk(std::span<const double> w);
RskResult rsk(std::span<const int> w);

YoungDiagram rsk_shape(std::span<const Entry> w);
YoungDiagram rsk_shape(std::span<const int> w);

YoungDiagram transpose(const YoungDiagram& d);
InsertionTableau transpose(const InsertionTableau& t);
StandardTableau transpose(const StandardTableau& t);

/// Sub-tableau of the entries <= t.
StandardTableau restrict_leq(const StandardTableau& q, std::int64_t t);

/// Values of the insertion tableau as integers, for comparing against
/// standard tableaux. Non-finite entries throw std::invalid_argument.
std::vector<std::vector<std::int64_t>> integer_rows(const InsertionTableau& t);

/// sigma is a permutation of 1..n in one-line notation. Returns whether
/// P(sigma) and Q(sigma^-1) coincide. Throws std::invalid_argument if sigma
/// is not a permutation.
bool schuetzenberger_check(std::span<const int> sigma);

/// Inverse permutation in one-line notation (values 1..n).
std::vector<int> inverse_permutation(std::span<const int> sigma);

}  // namespace bump
