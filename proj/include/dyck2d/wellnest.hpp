#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "dyck2d/dyck1d.hpp"
#include "dyck2d/error.hpp"
#include "dyck2d/picture.hpp"
#include "dyck2d/simplot.hpp"

namespace dyck2d {

/// How the border words of a nesting accretion may use indices when k > 1:
/// permissive allows any pair [a_j,b_j] / [a_j,c_j], strict only the
/// accretion's own index.
enum class BorderMode { permissive, strict };

/// Framing data: corner index, top border word over {a_j, b_j}, left border
/// word over {a_j, c_j}, and the framed core.
struct Accretion {
  std::uint16_t index = 1;
  Word row_border;
  Word col_border;
  Picture core;
};

namespace detail {

inline bool valid_border(std::span<const Symbol> w, Role open, Role close, Pairing pr,
                         std::uint16_t index, BorderMode mode) {
  for (Symbol s : w) {
    if (s.role != open && s.role != close) return false;
    if (mode == BorderMode::strict && s.index != index) return false;
  }
  return partners(w, pr).has_value();
}

constexpr Symbol h_row(Symbol s) { return Symbol{s.role == Role::A ? Role::C : Role::D, s.index}; }
constexpr Symbol h_col(Symbol s) { return Symbol{s.role == Role::A ? Role::B : Role::D, s.index}; }

}  // namespace detail

/// Builds (a_i ⊚ w_r ⊚ b_i) ⊖ (w_c ⊚ core ⊚ h_c(w_c)) ⊖ (c_i ⊚ h_r(w_r) ⊚ d_i),
/// where h_r maps a→c, b→d and h_c maps a→b, c→d.
inline Picture nesting_accretion(const Accretion& acc, BorderMode mode = BorderMode::permissive) {
  if (acc.row_border.size() != acc.core.cols() || acc.col_border.size() != acc.core.rows()) {
    throw Error(Errc::length_mismatch, "border words must match the core size");
  }
  if (!detail::valid_border(acc.row_border, Role::A, Role::B, Pairing::row(), acc.index, mode)) {
    throw Error(Errc::not_dyck_border, "top border must be a Dyck word over [a_j,b_j]");
  }
  if (!detail::valid_border(acc.col_border, Role::A, Role::C, Pairing::col(), acc.index, mode)) {
    throw Error(Errc::not_dyck_border, "left border must be a Dyck word over [a_j,c_j]");
  }
  const std::size_t rows = acc.core.rows() + 2;
  const std::size_t cols = acc.core.cols() + 2;
  int k = std::max<int>(acc.core.k(), acc.index);
  for (Symbol s : acc.row_border) k = std::max<int>(k, s.index);
  for (Symbol s : acc.col_border) k = std::max<int>(k, s.index);

  Picture out = Picture::homogeneous(rows, cols, sym::N, k);
  out.set(0, 0, sym::a(acc.index));
  out.set(0, cols - 1, sym::b(acc.index));
  out.set(rows - 1, 0, sym::c(acc.index));
  out.set(rows - 1, cols - 1, sym::d(acc.index));
  for (std::size_t j = 0; j < acc.row_border.size(); ++j) {
    out.set(0, j + 1, acc.row_border[j]);
    out.set(rows - 1, j + 1, detail::h_row(acc.row_border[j]));
  }
  for (std::size_t i = 0; i < acc.col_border.size(); ++i) {
    out.set(i + 1, 0, acc.col_border[i]);
    out.set(i + 1, cols - 1, detail::h_col(acc.col_border[i]));
  }
  for (std::size_t i = 0; i < acc.core.rows(); ++i) {
    for (std::size_t j = 0; j < acc.core.cols(); ++j) out.set(i + 1, j + 1, acc.core.at(i, j));
  }
  return out;
}

/// Decides membership in the well-nested language.
///
/// A non-empty picture is well-nested iff it tessellates into pieces that are
/// nesting accretions of well-nested cores (one piece being the accretion case
/// itself). The frame of a piece fixes its border words, so the accretion test
/// is a direct check plus one recursive call on the core. Results are memoized
/// on picture content for the lifetime of the decider.
class WellNestedDecider {
 public:
  explicit WellNestedDecider(BorderMode mode = BorderMode::permissive) : mode_(mode) {}

  bool contains(const Picture& p) {
    if (p.empty()) return true;
    if (!p.over_corner_alphabet() || p.rows() % 2 != 0 || p.cols() % 2 != 0) return false;
    const std::string key = p.key();
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const bool result =
        simplot_partition(p, [this](const Picture& piece) { return accretion_piece(piece); })
            .has_value();
    memo_.emplace(key, result);
    return result;
  }

  /// The accretion whose frame is p's frame, if the frame is well formed.
  /// The core is not checked.
  std::optional<Accretion> frame_of(const Picture& p) const {
    const std::size_t rows = p.rows();
    const std::size_t cols = p.cols();
    if (rows < 2 || cols < 2 || (rows == 2) != (cols == 2)) return std::nullopt;
    const Symbol nw = p.at(0, 0);
    if (nw.role != Role::A) return std::nullopt;
    const auto i = nw.index;
    if (p.at(0, cols - 1) != sym::b(i) || p.at(rows - 1, 0) != sym::c(i) ||
        p.at(rows - 1, cols - 1) != sym::d(i)) {
      return std::nullopt;
    }
    Accretion acc;
    acc.index = i;
    for (std::size_t j = 1; j + 1 < cols; ++j) {
      acc.row_border.push_back(p.at(0, j));
      if (p.at(rows - 1, j) != detail::h_row(p.at(0, j)) || !p.at(0, j).is_corner()) {
        return std::nullopt;
      }
    }
    for (std::size_t r = 1; r + 1 < rows; ++r) {
      acc.col_border.push_back(p.at(r, 0));
      if (p.at(r, cols - 1) != detail::h_col(p.at(r, 0)) || !p.at(r, 0).is_corner()) {
        return std::nullopt;
      }
    }
    if (!detail::valid_border(acc.row_border, Role::A, Role::B, Pairing::row(), i, mode_) ||
        !detail::valid_border(acc.col_border, Role::A, Role::C, Pairing::col(), i, mode_)) {
      return std::nullopt;
    }
    if (rows > 2) acc.core = subpicture(p, Domain{2, 2, rows - 1, cols - 1});
    return acc;
  }

  // p is a nesting accretion of a well-nested core.
  bool accretion_piece(const Picture& p) {
    if (p.rows() % 2 != 0 || p.cols() % 2 != 0) return false;
    auto acc = frame_of(p);
    return acc && contains(acc->core);
  }

  std::size_t memo_size() const noexcept { return memo_.size(); }

 private:
  BorderMode mode_;
  std::unordered_map<std::string, bool> memo_;
};

inline bool in_DW(const Picture& p, BorderMode mode = BorderMode::permissive) {
  WellNestedDecider decider(mode);
  return decider.contains(p);
}

/// Frames p with corners a b c d and bullet sides; the empty picture maps to [ab/cd].
inline Picture chinese_accretion(const Picture& p) {
  const std::size_t rows = p.rows() + 2;
  const std::size_t cols = p.cols() + 2;
  Picture out = Picture::homogeneous(rows, cols, sym::bullet, p.k());
  out.set(0, 0, sym::a());
  out.set(0, cols - 1, sym::b());
  out.set(rows - 1, 0, sym::c());
  out.set(rows - 1, cols - 1, sym::d());
  for (std::size_t i = 0; i < p.rows(); ++i) {
    for (std::size_t j = 0; j < p.cols(); ++j) out.set(i + 1, j + 1, p.at(i, j));
  }
  return out;
}

/// Chinese boxes: closure of the empty picture under ⊚, ⊖ and Chinese accretion.
class ChineseBoxDecider {
 public:
  bool contains(const Picture& p) {
    if (p.empty()) return true;
    const std::string key = p.key();
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const bool result = decide(p);
    memo_.emplace(key, result);
    return result;
  }

 private:
  static bool is_box_symbol(Symbol s) { return s.is_bullet() || (s.is_corner() && s.index == 1); }

  bool framed(const Picture& p) {
    const std::size_t rows = p.rows();
    const std::size_t cols = p.cols();
    if (rows < 2 || cols < 2 || (rows == 2) != (cols == 2)) return false;
    if (p.at(0, 0) != sym::a() || p.at(0, cols - 1) != sym::b() || p.at(rows - 1, 0) != sym::c() ||
        p.at(rows - 1, cols - 1) != sym::d()) {
      return false;
    }
    for (std::size_t j = 1; j + 1 < cols; ++j) {
      if (!p.at(0, j).is_bullet() || !p.at(rows - 1, j).is_bullet()) return false;
    }
    for (std::size_t i = 1; i + 1 < rows; ++i) {
      if (!p.at(i, 0).is_bullet() || !p.at(i, cols - 1).is_bullet()) return false;
    }
    return rows == 2 || contains(subpicture(p, Domain{2, 2, rows - 1, cols - 1}));
  }

  bool decide(const Picture& p) {
    for (Symbol s : p.cells()) {
      if (!is_box_symbol(s)) return false;
    }
    if (framed(p)) return true;
    for (std::size_t c = 1; c < p.cols(); ++c) {
      if (contains(subpicture(p, Domain{1, 1, p.rows(), c})) &&
          contains(subpicture(p, Domain{1, c + 1, p.rows(), p.cols()}))) {
        return true;
      }
    }
    for (std::size_t r = 1; r < p.rows(); ++r) {
      if (contains(subpicture(p, Domain{1, 1, r, p.cols()})) &&
          contains(subpicture(p, Domain{r + 1, 1, p.rows(), p.cols()}))) {
        return true;
      }
    }
    return false;
  }

  std::unordered_map<std::string, bool> memo_;
};

inline bool in_DB(const Picture& p) {
  ChineseBoxDecider decider;
  return decider.contains(p);
}

}  // namespace dyck2d
