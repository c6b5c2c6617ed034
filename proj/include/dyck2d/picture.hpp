#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dyck2d/error.hpp"
#include "dyck2d/symbol.hpp"

namespace dyck2d {

/// A rectangular portion (top, left)..(bottom, right) of a picture.
/// Coordinates are 1-based and inclusive; the natural ordering is
/// lexicographic on (top, left, bottom, right).
struct Domain {
  std::size_t top = 1;
  std::size_t left = 1;
  std::size_t bottom = 1;
  std::size_t right = 1;

  constexpr std::size_t rows() const noexcept { return bottom - top + 1; }
  constexpr std::size_t cols() const noexcept { return right - left + 1; }
  constexpr std::size_t area() const noexcept { return rows() * cols(); }
  constexpr bool contains(std::size_t row, std::size_t col) const noexcept {
    return top <= row && row <= bottom && left <= col && col <= right;
  }

  friend constexpr auto operator<=>(const Domain&, const Domain&) = default;
};

/// A 1-based grid coordinate, ordered row-major.
struct GridPos {
  std::size_t row = 1;
  std::size_t col = 1;

  friend constexpr auto operator<=>(const GridPos&, const GridPos&) = default;
};

/// Rectangular array of symbols over an alphabet with k corner quadruples.
///
/// The default-constructed picture is the empty picture of size (0, 0); it is
/// the identity for both concatenations. Cell access through at() is 0-based.
class Picture {
 public:
  Picture() = default;

  Picture(std::size_t rows, std::size_t cols, int k, std::vector<Symbol> cells)
      : rows_(rows), cols_(cols), k_(k), cells_(std::move(cells)) {
    if (cells_.size() != rows_ * cols_) {
      throw Error(Errc::size_mismatch, "cell count " + std::to_string(cells_.size()) +
                                           " does not match size " + std::to_string(rows_) +
                                           "x" + std::to_string(cols_));
    }
    if (rows_ == 0 || cols_ == 0) {
      rows_ = cols_ = 0;
    }
    for (const Symbol& s : cells_) {
      if (s.is_corner() && (s.index < 1 || s.index > k_)) {
        throw Error(Errc::index_out_of_range,
                    "symbol index " + std::to_string(s.index) + " outside 1.." + std::to_string(k_));
      }
    }
  }

  static Picture homogeneous(std::size_t rows, std::size_t cols, Symbol s, int k = 1) {
    return Picture(rows, cols, k, std::vector<Symbol>(rows * cols, s));
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t area() const noexcept { return cells_.size(); }
  int k() const noexcept { return k_; }
  bool empty() const noexcept { return cells_.empty(); }

  const Symbol& at(std::size_t r, std::size_t c) const { return cells_[r * cols_ + c]; }

  void set(std::size_t r, std::size_t c, Symbol s) {
    if (s.is_corner() && s.index > k_) k_ = s.index;
    cells_[r * cols_ + c] = s;
  }

  std::span<const Symbol> cells() const noexcept { return cells_; }

  std::span<const Symbol> row(std::size_t r) const {
    return std::span<const Symbol>(cells_).subspan(r * cols_, cols_);
  }

  std::vector<Symbol> column(std::size_t c) const {
    std::vector<Symbol> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.push_back(at(r, c));
    return out;
  }

  bool all_of(Role role) const {
    return std::all_of(cells_.begin(), cells_.end(), [role](Symbol s) { return s.role == role; });
  }
  bool any_of(Role role) const {
    return std::any_of(cells_.begin(), cells_.end(), [role](Symbol s) { return s.role == role; });
  }
  // True when every cell is a corner symbol, i.e. the picture lies in Δ_k^{++} or is empty.
  bool over_corner_alphabet() const {
    return std::all_of(cells_.begin(), cells_.end(), [](Symbol s) { return s.is_corner(); });
  }

  // Content key for memo tables: size plus cell bytes, independent of k.
  std::string key() const {
    std::string out;
    out.reserve(8 + cells_.size() * 2);
    auto put = [&out](std::size_t v) {
      for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
    };
    put(rows_);
    put(cols_);
    for (const Symbol& s : cells_) {
      out.push_back(static_cast<char>(s.role));
      out.push_back(static_cast<char>(s.index & 0xff));
    }
    return out;
  }

  friend bool operator==(const Picture& lhs, const Picture& rhs) {
    return lhs.rows_ == rhs.rows_ && lhs.cols_ == rhs.cols_ && lhs.cells_ == rhs.cells_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  int k_ = 1;
  std::vector<Symbol> cells_;
};

enum class Axis { horizontal, vertical };

/// Horizontal (⊚) or vertical (⊖) juxtaposition. The empty picture is an
/// identity on both axes.
inline Picture concat(const Picture& p, const Picture& q, Axis axis) {
  if (p.empty()) return q;
  if (q.empty()) return p;
  const int k = std::max(p.k(), q.k());
  if (axis == Axis::horizontal) {
    if (p.rows() != q.rows()) {
      throw Error(Errc::size_mismatch, "horizontal concatenation needs equal row counts (" +
                                           std::to_string(p.rows()) + " vs " +
                                           std::to_string(q.rows()) + ")");
    }
    std::vector<Symbol> cells;
    cells.reserve(p.area() + q.area());
    for (std::size_t r = 0; r < p.rows(); ++r) {
      auto pr = p.row(r);
      auto qr = q.row(r);
      cells.insert(cells.end(), pr.begin(), pr.end());
      cells.insert(cells.end(), qr.begin(), qr.end());
    }
    return Picture(p.rows(), p.cols() + q.cols(), k, std::move(cells));
  }
  if (p.cols() != q.cols()) {
    throw Error(Errc::size_mismatch, "vertical concatenation needs equal column counts (" +
                                         std::to_string(p.cols()) + " vs " +
                                         std::to_string(q.cols()) + ")");
  }
  std::vector<Symbol> cells(p.cells().begin(), p.cells().end());
  cells.insert(cells.end(), q.cells().begin(), q.cells().end());
  return Picture(p.rows() + q.rows(), p.cols(), k, std::move(cells));
}

inline Picture hcat(const Picture& p, const Picture& q) { return concat(p, q, Axis::horizontal); }
inline Picture vcat(const Picture& p, const Picture& q) { return concat(p, q, Axis::vertical); }

inline bool valid_domain(const Picture& p, const Domain& d) {
  return 1 <= d.top && d.top <= d.bottom && d.bottom <= p.rows() && 1 <= d.left &&
         d.left <= d.right && d.right <= p.cols();
}

inline Domain full_domain(const Picture& p) { return Domain{1, 1, p.rows(), p.cols()}; }

inline Picture subpicture(const Picture& p, const Domain& d) {
  if (!valid_domain(p, d)) {
    throw Error(Errc::domain_out_of_bounds,
                "domain (" + std::to_string(d.top) + "," + std::to_string(d.left) + "," +
                    std::to_string(d.bottom) + "," + std::to_string(d.right) +
                    ") outside picture of size " + std::to_string(p.rows()) + "x" +
                    std::to_string(p.cols()));
  }
  std::vector<Symbol> cells;
  cells.reserve(d.area());
  for (std::size_t r = d.top - 1; r < d.bottom; ++r) {
    for (std::size_t c = d.left - 1; c < d.right; ++c) cells.push_back(p.at(r, c));
  }
  return Picture(d.rows(), d.cols(), p.k(), std::move(cells));
}

// A one-row or one-column picture holding `word`.
inline Picture row_picture(std::span<const Symbol> word, int k = 1) {
  for (Symbol s : word) {
    if (s.is_corner()) k = std::max<int>(k, s.index);
  }
  return Picture(word.empty() ? 0 : 1, word.size(), k, std::vector<Symbol>(word.begin(), word.end()));
}
inline Picture column_picture(std::span<const Symbol> word, int k = 1) {
  for (Symbol s : word) {
    if (s.is_corner()) k = std::max<int>(k, s.index);
  }
  return Picture(word.size(), word.empty() ? 0 : 1, k, std::vector<Symbol>(word.begin(), word.end()));
}

}  // namespace dyck2d
