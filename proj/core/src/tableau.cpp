#include "bump/tableau.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace bump {

std::ostream& operator<<(std::ostream& os, Box b) {
  return os << '(' << b.x << ',' << b.y << ')';
}

// ---------------------------------------------------------------------------
// YoungDiagram

YoungDiagram::YoungDiagram(std::vector<int> rows) : rows_(std::move(rows)) {
  while (!rows_.empty() && rows_.back() == 0) rows_.pop_back();
  for (std::size_t y = 0; y < rows_.size(); ++y) {
    if (rows_[y] < 0) throw std::invalid_argument("YoungDiagram: negative row length");
    if (y > 0 && rows_[y] > rows_[y - 1])
      throw std::invalid_argument("YoungDiagram: row lengths must be weakly decreasing");
    size_ += rows_[y];
  }
}

int YoungDiagram::column_length(int x) const noexcept {
  if (x < 0) return 0;
  // rows are weakly decreasing, so count rows longer than x
  auto it = std::partition_point(rows_.begin(), rows_.end(), [x](int len) { return len > x; });
  return static_cast<int>(it - rows_.begin());
}

bool YoungDiagram::contains(Box b) const noexcept {
  return b.x >= 0 && b.y >= 0 && b.x < row(static_cast<std::size_t>(b.y));
}

bool YoungDiagram::is_outer_corner(Box b) const noexcept {
  if (b.x < 0 || b.y < 0) return false;
  const auto y = static_cast<std::size_t>(b.y);
  if (y > rows_.size()) return false;
  if (row(y) != b.x) return false;
  return y == 0 || row(y - 1) > b.x;
}

std::vector<Box> YoungDiagram::outer_corners() const {
  std::vector<Box> corners;
  for (std::size_t y = 0; y <= rows_.size(); ++y) {
    const Box b{row(y), static_cast<int>(y)};
    if (is_outer_corner(b)) corners.push_back(b);
  }
  return corners;
}

void YoungDiagram::add_box(Box b) {
  if (!is_outer_corner(b)) throw std::invalid_argument("YoungDiagram::add_box: not an outer corner");
  if (static_cast<std::size_t>(b.y) == rows_.size()) rows_.push_back(0);
  ++rows_[static_cast<std::size_t>(b.y)];
  ++size_;
}

YoungDiagram YoungDiagram::with_box(Box b) const {
  YoungDiagram out = *this;
  out.add_box(b);
  return out;
}

YoungDiagram YoungDiagram::transposed() const {
  std::vector<int> cols(rows_.empty() ? 0 : static_cast<std::size_t>(rows_.front()));
  for (std::size_t x = 0; x < cols.size(); ++x) cols[x] = column_length(static_cast<int>(x));
  return YoungDiagram(std::move(cols));
}

std::ostream& operator<<(std::ostream& os, const YoungDiagram& d) {
  os << '(';
  for (std::size_t y = 0; y < d.num_rows(); ++y) os << (y ? "," : "") << d.rows()[y];
  return os << ')';
}

std::optional<Box> added_box(const YoungDiagram& smaller, const YoungDiagram& larger) {
  if (larger.size() != smaller.size() + 1) return std::nullopt;
  std::optional<Box> diff;
  const std::size_t n = std::max(smaller.num_rows(), larger.num_rows());
  for (std::size_t y = 0; y < n; ++y) {
    const int a = smaller.row(y);
    const int b = larger.row(y);
    if (a == b) continue;
    if (b != a + 1 || diff) return std::nullopt;
    diff = Box{a, static_cast<int>(y)};
  }
  return diff;
}

// ---------------------------------------------------------------------------
// Entry

Entry Entry::finite(double value, std::uint64_t tiebreak) {
  if (std::isnan(value)) throw std::invalid_argument("Entry::finite: NaN value");
  return Entry(Kind::finite, value, tiebreak);
}

Entry Entry::probe(std::int64_t level) noexcept {
  return Entry(Kind::probe, static_cast<double>(level) + 0.5, static_cast<std::uint64_t>(level));
}

Entry Entry::plus_infinity() noexcept { return Entry(Kind::plus_infinity, 0.0, 0); }

namespace {

std::strong_ordering compare_doubles(double a, double b) noexcept {
  if (a < b) return std::strong_ordering::less;
  if (a > b) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering operator<=>(const Entry& a, const Entry& b) noexcept {
  using K = Entry::Kind;
  if (a.kind_ == K::plus_infinity || b.kind_ == K::plus_infinity) {
    return (a.kind_ == K::plus_infinity) <=> (b.kind_ == K::plus_infinity);
  }
  if (a.kind_ == K::probe && b.kind_ == K::probe) return a.level() <=> b.level();
  if (auto c = compare_doubles(a.value_, b.value_); c != 0) return c;
  if (a.kind_ == K::finite && b.kind_ == K::finite) return a.aux_ <=> b.aux_;
  // probe against a finite value equal to level + 1/2
  return a.kind_ == K::probe ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::ostream& operator<<(std::ostream& os, const Entry& e) {
  switch (e.kind()) {
    case Entry::Kind::finite: return os << e.value();
    case Entry::Kind::probe: return os << e.level() << "+1/2";
    case Entry::Kind::plus_infinity: return os << "inf";
  }
  return os;
}

std::vector<Entry> to_entries(std::span<const double> values) {
  std::vector<Entry> out;
  out.reserve(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) out.push_back(Entry::finite(values[i], i + 1));
  return out;
}

std::vector<Entry> to_entries(std::span<const int> values) {
  std::vector<Entry> out;
  out.reserve(values.size());
  for (std::size_t i = 0; i < values.size(); ++i)
    out.push_back(Entry::finite(static_cast<double>(values[i]), i + 1));
  return out;
}

// ---------------------------------------------------------------------------
// InsertionTableau

namespace {

template <class Rows>
bool rows_form_tableau(const Rows& rows) {
  for (std::size_t y = 0; y < rows.size(); ++y) {
    const auto& r = rows[y];
    if (r.empty()) return false;
    if (y > 0 && r.size() > rows[y - 1].size()) return false;
    for (std::size_t x = 0; x < r.size(); ++x) {
      if (x > 0 && !(r[x - 1] < r[x])) return false;
      if (y > 0 && !(rows[y - 1][x] < r[x])) return false;
    }
  }
  return true;
}

}  // namespace

InsertionTableau::InsertionTableau(std::vector<std::vector<Entry>> rows) : rows_(std::move(rows)) {
  if (!rows_form_tableau(rows_)) throw std::invalid_argument("InsertionTableau: rows do not form a tableau");
  for (const auto& r : rows_) size_ += static_cast<std::int64_t>(r.size());
}

YoungDiagram InsertionTableau::shape() const {
  std::vector<int> lens;
  lens.reserve(rows_.size());
  for (const auto& r : rows_) lens.push_back(static_cast<int>(r.size()));
  return YoungDiagram(std::move(lens));
}

const Entry& InsertionTableau::at(Box b) const {
  if (b.y < 0 || b.x < 0 || static_cast<std::size_t>(b.y) >= rows_.size() ||
      static_cast<std::size_t>(b.x) >= rows_[static_cast<std::size_t>(b.y)].size())
    throw std::out_of_range("InsertionTableau::at: box outside the tableau");
  return rows_[static_cast<std::size_t>(b.y)][static_cast<std::size_t>(b.x)];
}

std::vector<Box> InsertionTableau::insert_with_route(const Entry& a) {
  // Row starts increase upwards, so only rows starting at or below a can
  // hold it.
  for (const auto& r : rows_) {
    if (a < r.front()) break;
    if (std::binary_search(r.begin(), r.end(), a))
      throw std::invalid_argument("InsertionTableau::insert: duplicate entry");
  }

  std::vector<Box> route;
  Entry carried = a;
  for (std::size_t y = 0;; ++y) {
    if (y == rows_.size()) {
      route.push_back(Box{0, static_cast<int>(y)});
      break;
    }
    const auto& r = rows_[y];
    auto it = std::upper_bound(r.begin(), r.end(), carried);
    const int x = static_cast<int>(it - r.begin());
    route.push_back(Box{x, static_cast<int>(y)});
    if (it == r.end()) break;
    carried = *it;
  }

  carried = a;
  for (const Box b : route) {
    const auto y = static_cast<std::size_t>(b.y);
    if (y == rows_.size()) rows_.emplace_back();
    auto& r = rows_[y];
    if (static_cast<std::size_t>(b.x) == r.size()) {
      r.push_back(carried);
    } else {
      std::swap(r[static_cast<std::size_t>(b.x)], carried);
    }
  }
  ++size_;
#ifndef NDEBUG
  check_route(route);
#endif
  return route;
}

Box InsertionTableau::insert(const Entry& a) { return insert_with_route(a).back(); }

void InsertionTableau::check_route(std::span<const Box> route) const {
  // Only the boxes on the route changed; their row and column neighbours are
  // the only comparisons that can have been broken.
  for (const Box b : route) {
    const auto x = static_cast<std::size_t>(b.x);
    const auto y = static_cast<std::size_t>(b.y);
    const auto& r = rows_[y];
    assert(x == 0 || r[x - 1] < r[x]);
    assert(x + 1 >= r.size() || r[x] < r[x + 1]);
    assert(y == 0 || (x < rows_[y - 1].size() && rows_[y - 1][x] < r[x]));
    assert(y + 1 >= rows_.size() || x >= rows_[y + 1].size() || r[x] < rows_[y + 1][x]);
    (void)x;
    (void)y;
    (void)r;
  }
}

bool InsertionTableau::is_valid() const { return rows_form_tableau(rows_); }

InsertionTableau InsertionTableau::transposed() const {
  InsertionTableau out;
  if (rows_.empty()) return out;
  out.rows_.resize(rows_.front().size());
  for (const auto& r : rows_)
    for (std::size_t x = 0; x < r.size(); ++x) out.rows_[x].push_back(r[x]);
  out.size_ = size_;
  return out;
}

RowInsertResult row_insert(InsertionTableau t, const Entry& a) {
  auto route = t.insert_with_route(a);
  return {std::move(t), std::move(route)};
}

// ---------------------------------------------------------------------------
// StandardTableau

StandardTableau::StandardTableau(std::vector<std::vector<std::int64_t>> rows) : rows_(std::move(rows)) {
  if (!rows_form_tableau(rows_)) throw std::invalid_argument("StandardTableau: rows do not form a tableau");
  std::vector<std::int64_t> all;
  for (const auto& r : rows_) {
    for (auto v : r) {
      if (v <= 0) throw std::invalid_argument("StandardTableau: entries must be positive");
      all.push_back(v);
    }
  }
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end())
    throw std::invalid_argument("StandardTableau: entries must be distinct");
  size_ = static_cast<std::int64_t>(all.size());
  max_entry_ = all.empty() ? 0 : all.back();
}

YoungDiagram StandardTableau::shape() const {
  std::vector<int> lens;
  lens.reserve(rows_.size());
  for (const auto& r : rows_) lens.push_back(static_cast<int>(r.size()));
  return YoungDiagram(std::move(lens));
}

std::int64_t StandardTableau::at(Box b) const {
  if (b.y < 0 || b.x < 0 || static_cast<std::size_t>(b.y) >= rows_.size() ||
      static_cast<std::size_t>(b.x) >= rows_[static_cast<std::size_t>(b.y)].size())
    throw std::out_of_range("StandardTableau::at: box outside the tableau");
  return rows_[static_cast<std::size_t>(b.y)][static_cast<std::size_t>(b.x)];
}

std::optional<Box> StandardTableau::position_of(std::int64_t s) const {
  for (std::size_t y = 0; y < rows_.size(); ++y) {
    const auto& r = rows_[y];
    auto it = std::lower_bound(r.begin(), r.end(), s);
    if (it != r.end() && *it == s) return Box{static_cast<int>(it - r.begin()), static_cast<int>(y)};
  }
  return std::nullopt;
}

bool StandardTableau::is_complete() const { return max_entry_ == size_; }

void StandardTableau::append(Box b, std::int64_t value) {
  if (value <= max_entry_) throw std::invalid_argument("StandardTableau::append: value must exceed all entries");
  const auto y = static_cast<std::size_t>(b.y);
  const int len = y < rows_.size() ? static_cast<int>(rows_[y].size()) : 0;
  const int below = y == 0 ? b.x + 1 : (y - 1 < rows_.size() ? static_cast<int>(rows_[y - 1].size()) : 0);
  if (b.y < 0 || y > rows_.size() || len != b.x || below <= b.x)
    throw std::invalid_argument("StandardTableau::append: not an outer corner");
  if (y == rows_.size()) rows_.emplace_back();
  rows_[y].push_back(value);
  ++size_;
  max_entry_ = value;
}

StandardTableau StandardTableau::transposed() const {
  StandardTableau out;
  if (rows_.empty()) return out;
  out.rows_.resize(rows_.front().size());
  for (const auto& r : rows_)
    for (std::size_t x = 0; x < r.size(); ++x) out.rows_[x].push_back(r[x]);
  out.size_ = size_;
  out.max_entry_ = max_entry_;
  return out;
}

InsertionTableau StandardTableau::as_insertion() const {
  std::vector<std::vector<Entry>> rows;
  rows.reserve(rows_.size());
  for (const auto& r : rows_) {
    auto& out = rows.emplace_back();
    out.reserve(r.size());
    for (auto v : r) out.push_back(Entry::finite(static_cast<double>(v), 0));
  }
  return InsertionTableau(std::move(rows));
}

// ---------------------------------------------------------------------------
// RSK and identities

RskResult rsk(std::span<const Entry> w) {
  RskResult out;
  std::int64_t step = 0;
  for (const Entry& a : w) {
    const Box b = out.p.insert(a);
    out.q.append(b, ++step);
  }
  return out;
}

RskResult rsk(std::span<const double> w) {
  const auto entries = to_entries(w);
  return rsk(entries);
}

RskResult rsk(std::span<const int> w) {
  const auto entries = to_entries(w);
  return rsk(entries);
}

YoungDiagram rsk_shape(std::span<const Entry> w) { return rsk(w).p.shape(); }

YoungDiagram rsk_shape(std::span<const int> w) { return rsk(w).p.shape(); }

YoungDiagram transpose(const YoungDiagram& d) { return d.transposed(); }
InsertionTableau transpose(const InsertionTableau& t) { return t.transposed(); }
StandardTableau transpose(const StandardTableau& t) { return t.transposed(); }

StandardTableau restrict_leq(const StandardTableau& q, std::int64_t t) {
  std::vector<std::vector<std::int64_t>> rows;
  for (const auto& r : q.rows()) {
    auto end = std::upper_bound(r.begin(), r.end(), t);
    if (end == r.begin()) break;  // columns increase, so no higher row has entries <= t either
    rows.emplace_back(r.begin(), end);
  }
  return StandardTableau(std::move(rows));
}

std::vector<std::vector<std::int64_t>> integer_rows(const InsertionTableau& t) {
  std::vector<std::vector<std::int64_t>> out;
  out.reserve(t.num_rows());
  for (const auto& r : t.rows()) {
    auto& row = out.emplace_back();
    row.reserve(r.size());
    for (const Entry& e : r) {
      if (!e.is_finite()) throw std::invalid_argument("integer_rows: non-finite entry");
      row.push_back(static_cast<std::int64_t>(std::llround(e.value())));
    }
  }
  return out;
}

std::vector<int> inverse_permutation(std::span<const int> sigma) {
  const int n = static_cast<int>(sigma.size());
  std::vector<int> inv(sigma.size(), 0);
  for (int i = 0; i < n; ++i) {
    const int v = sigma[static_cast<std::size_t>(i)];
    if (v < 1 || v > n || inv[static_cast<std::size_t>(v - 1)] != 0)
      throw std::invalid_argument("inverse_permutation: not a permutation of 1..n");
    inv[static_cast<std::size_t>(v - 1)] = i + 1;
  }
  return inv;
}

bool schuetzenberger_check(std::span<const int> sigma) {
  const auto inv = inverse_permutation(sigma);
  const auto p = rsk(sigma).p;
  const auto q = rsk(std::span<const int>(inv)).q;
  return integer_rows(p) == q.rows();
}

}  // namespace bump
