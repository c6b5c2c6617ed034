#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "dyck2d/crossword.hpp"
#include "dyck2d/dyck1d.hpp"
#include "dyck2d/error.hpp"
#include "dyck2d/fixtures.hpp"
#include "dyck2d/neutralize.hpp"
#include "dyck2d/picture.hpp"
#include "dyck2d/text.hpp"
#include "dyck2d/wellnest.hpp"

namespace dyck2d {

inline constexpr std::size_t kDefaultCensusBudget = 36;

struct ClassFlags {
  bool in_dc = false;
  bool in_dq = false;
  bool in_dn = false;
  bool in_dw = false;

  friend constexpr bool operator==(const ClassFlags&, const ClassFlags&) = default;
};

inline nlohmann::ordered_json flags_to_json(const ClassFlags& f) {
  nlohmann::ordered_json out;
  out["in_dc"] = f.in_dc;
  out["in_dq"] = f.in_dq;
  out["in_dn"] = f.in_dn;
  out["in_dw"] = f.in_dw;
  return out;
}

/// Evaluates the four memberships independently and checks DW ⊆ DN ⊆ DQ ⊆ DC.
/// Pictures with symbols outside the corner alphabet belong to none of them.
inline ClassFlags classify(const Picture& p, WellNestedDecider& dw) {
  ClassFlags f;
  if (p.empty() || !p.over_corner_alphabet()) return f;
  f.in_dc = in_DC(p);
  f.in_dq = f.in_dc && is_quaternate(p);
  f.in_dn = in_DN(p, Strategy::greedy).member;
  f.in_dw = dw.contains(p);
  if ((f.in_dw && !f.in_dn) || (f.in_dn && !f.in_dq) || (f.in_dq && !f.in_dc)) {
    throw Error(Errc::hierarchy_violation,
                "membership flags break DW <= DN <= DQ <= DC for\n" + render_picture(p));
  }
  return f;
}

inline ClassFlags classify(const Picture& p) {
  WellNestedDecider dw;
  return classify(p, dw);
}

/// Calls fn(picture) for every Dyck crossword of the given size, in
/// lexicographic order of the row sequence. Cells are filled row by row; the
/// current row and every column keep a stack of open symbols, and a branch is
/// cut as soon as a stack can no longer close within the remaining cells.
template <class Fn>
void for_each_dc(std::size_t rows, std::size_t cols, int k, Fn&& fn) {
  if (rows == 0 || cols == 0 || rows % 2 != 0 || cols % 2 != 0) return;
  // Alphabet in Symbol order, so the output is lexicographic.
  std::vector<Symbol> alphabet;
  for (Role role : {Role::A, Role::B, Role::C, Role::D}) {
    for (int i = 1; i <= k; ++i) alphabet.push_back(Symbol{role, static_cast<std::uint16_t>(i)});
  }
  std::vector<std::vector<std::uint16_t>> col_stacks(cols);
  std::vector<std::uint16_t> row_stack;
  std::vector<Symbol> cells(rows * cols);

  auto rec = [&](auto& self, std::size_t pos) -> void {
    if (pos == cells.size()) {
      fn(Picture(rows, cols, k, cells));
      return;
    }
    const std::size_t r = pos / cols;
    const std::size_t c = pos % cols;
    auto& col_stack = col_stacks[c];
    const std::size_t rows_after = rows - r - 1;
    const std::size_t cols_after = cols - c - 1;
    for (Symbol s : alphabet) {
      // a and c open a row pair, a and b open a column pair.
      const bool row_open = s.role == Role::A || s.role == Role::C;
      const bool col_open = s.role == Role::A || s.role == Role::B;
      // Row and column stacks hold the open role's index tagged by role.
      const std::uint16_t row_tag = static_cast<std::uint16_t>(
          s.index * 2 + (s.role == Role::C || s.role == Role::D ? 1 : 0));
      const std::uint16_t col_tag = static_cast<std::uint16_t>(
          s.index * 2 + (s.role == Role::B || s.role == Role::D ? 1 : 0));
      if (row_open ? row_stack.size() + 1 > cols_after
                   : row_stack.empty() || row_stack.back() != row_tag) {
        continue;
      }
      if (col_open ? col_stack.size() + 1 > rows_after
                   : col_stack.empty() || col_stack.back() != col_tag) {
        continue;
      }
      if (row_open) row_stack.push_back(row_tag); else row_stack.pop_back();
      if (col_open) col_stack.push_back(col_tag); else col_stack.pop_back();
      cells[pos] = s;
      self(self, pos + 1);
      if (row_open) row_stack.pop_back(); else row_stack.push_back(row_tag);
      if (col_open) col_stack.pop_back(); else col_stack.push_back(col_tag);
    }
  };
  rec(rec, 0);
}

/// For quaternate pictures: every two rectangles whose boxes cross (intersect,
/// neither containing the other) are bounded exactly by the box of a third
/// rectangle. Compared against DW membership in censuses; no equivalence is
/// claimed.
inline bool minimal_bounding_boxes(const Picture& p) {
  if (!in_DC(p) || !is_quaternate(p)) return false;
  std::vector<Domain> boxes;
  for (const Circuit& c : circuits(matching_graph(p))) boxes.push_back(c.bounding_box());
  auto inside = [](const Domain& in, const Domain& out) {
    return out.top <= in.top && in.bottom <= out.bottom && out.left <= in.left &&
           in.right <= out.right;
  };
  for (std::size_t i = 0; i < boxes.size(); ++i) {
    for (std::size_t j = i + 1; j < boxes.size(); ++j) {
      const Domain& x = boxes[i];
      const Domain& y = boxes[j];
      const bool meet = x.top <= y.bottom && y.top <= x.bottom && x.left <= y.right &&
                        y.left <= x.right;
      if (!meet || inside(x, y) || inside(y, x)) continue;
      const Domain hull{std::min(x.top, y.top), std::min(x.left, y.left),
                        std::max(x.bottom, y.bottom), std::max(x.right, y.right)};
      if (std::find(boxes.begin(), boxes.end(), hull) == boxes.end()) return false;
    }
  }
  return true;
}

struct Census {
  std::size_t rows = 0;
  std::size_t cols = 0;
  int k = 1;
  std::size_t dc = 0;
  std::size_t dq = 0;
  std::size_t dn = 0;
  std::size_t dw = 0;
  std::optional<Picture> dc_not_dq;
  std::optional<Picture> dq_not_dn;
  std::optional<Picture> dn_not_dw;
  // Bounding-box criterion versus DW over the enumerated crosswords.
  std::size_t box_criterion_disagreements = 0;
  std::optional<Picture> box_criterion_witness;
};

inline Census census(std::size_t rows, std::size_t cols, int k = 1,
                     std::size_t budget = kDefaultCensusBudget) {
  if (rows * cols > budget) {
    throw Error(Errc::budget_exceeded, std::to_string(rows) + "x" + std::to_string(cols) +
                                           " exceeds the census budget of " +
                                           std::to_string(budget) + " cells");
  }
  Census out;
  out.rows = rows;
  out.cols = cols;
  out.k = k;
  WellNestedDecider dw;
  for_each_dc(rows, cols, k, [&](const Picture& p) {
    const ClassFlags f = classify(p, dw);
    ++out.dc;
    out.dq += f.in_dq;
    out.dn += f.in_dn;
    out.dw += f.in_dw;
    if (!f.in_dq && !out.dc_not_dq) out.dc_not_dq = p;
    if (f.in_dq && !f.in_dn && !out.dq_not_dn) out.dq_not_dn = p;
    if (f.in_dn && !f.in_dw && !out.dn_not_dw) out.dn_not_dw = p;
    if (minimal_bounding_boxes(p) != f.in_dw) {
      if (out.box_criterion_disagreements++ == 0) out.box_criterion_witness = p;
    }
  });
  return out;
}

inline nlohmann::ordered_json census_to_json(const Census& c) {
  using json = nlohmann::ordered_json;
  auto witness = [](const std::optional<Picture>& p) {
    return p ? json(render_picture(*p)) : json(nullptr);
  };
  json out;
  out["rows"] = c.rows;
  out["cols"] = c.cols;
  out["k"] = c.k;
  out["counts"] = json{{"dc", c.dc}, {"dq", c.dq}, {"dn", c.dn}, {"dw", c.dw}};
  out["witnesses"] = json{{"dc_not_dq", witness(c.dc_not_dq)},
                          {"dq_not_dn", witness(c.dq_not_dn)},
                          {"dn_not_dw", witness(c.dn_not_dw)}};
  out["box_criterion_disagreements"] = c.box_criterion_disagreements;
  out["box_criterion_witness"] = witness(c.box_criterion_witness);
  return out;
}

inline std::string census_to_table(const Census& c) {
  char buf[160];
  std::string out;
  std::snprintf(buf, sizeof buf, "size %zux%zu  k=%d\n", c.rows, c.cols, c.k);
  out += buf;
  std::snprintf(buf, sizeof buf, "%-6s %10s\n", "class", "count");
  out += buf;
  const std::pair<const char*, std::size_t> rows[] = {
      {"DC", c.dc}, {"DQ", c.dq}, {"DN", c.dn}, {"DW", c.dw}};
  for (const auto& [name, count] : rows) {
    std::snprintf(buf, sizeof buf, "%-6s %10zu\n", name, count);
    out += buf;
  }
  auto witness = [&out](const char* label, const std::optional<Picture>& p) {
    if (!p) return;
    out += std::string(label) + ":\n" + render_picture(*p) + "\n";
  };
  witness("witness DC-DQ", c.dc_not_dq);
  witness("witness DQ-DN", c.dq_not_dn);
  witness("witness DN-DW", c.dn_not_dw);
  return out;
}

/// A height-4 neutralizable picture whose third row is w, built by induction
/// on w: concatenation splits into prime factors, and a prime x w' y is framed
/// by the columns a c a c / b d b d (x = a) or a a c c / b b d d (x = c).
inline Picture embed_row(std::span<const Symbol> w) {
  if (w.empty() || !is_dyck(w, Pairing::row())) {
    throw Error(Errc::not_dyck, "embed_row needs a non-empty row Dyck word");
  }
  const auto factors = prime_factorize(w, Pairing::row());
  if (factors.size() > 1) {
    Picture out;
    for (const Word& f : factors) out = hcat(out, embed_row(f));
    return out;
  }
  const std::uint16_t i = w.front().index;
  const bool outer_a = w.front().role == Role::A;
  const Word left = outer_a ? Word{sym::a(i), sym::c(i), sym::a(i), sym::c(i)}
                            : Word{sym::a(i), sym::a(i), sym::c(i), sym::c(i)};
  const Word right = outer_a ? Word{sym::b(i), sym::d(i), sym::b(i), sym::d(i)}
                             : Word{sym::b(i), sym::b(i), sym::d(i), sym::d(i)};
  const Picture inner = w.size() > 2 ? embed_row(w.subspan(1, w.size() - 2)) : Picture{};
  return hcat(hcat(column_picture(left), inner), column_picture(right));
}

/// The double-noose family: p(1) is the 4x6 base picture; p(h) stacks a copy
/// of p(1) under p(h-1) and relabels the four junction cells so that a new
/// rectangle joins the two long circuits into one of length 4+8h.
inline Picture double_noose(std::size_t h) {
  if (h == 0) throw Error(Errc::size_mismatch, "double_noose needs h >= 1");
  const Picture base = parse_picture(fixture_text::fig4_left);
  Picture out = base;
  for (std::size_t step = 2; step <= h; ++step) {
    const std::size_t junction = out.rows();
    out = vcat(out, base);
    out.set(junction - 1, 0, sym::a());
    out.set(junction - 1, 5, sym::b());
    out.set(junction, 0, sym::c());
    out.set(junction, 5, sym::d());
  }
  return out;
}

/// Dyck crosswords of every even size up to the bounds whose matching graph is
/// one circuit through all cells, ordered by size then enumeration order.
inline std::vector<Picture> hamiltonian_search(std::size_t max_rows, std::size_t max_cols, int k = 1,
                                               std::size_t budget = kDefaultCensusBudget) {
  std::vector<Picture> out;
  for (std::size_t r = 2; r <= max_rows; r += 2) {
    for (std::size_t c = 2; c <= max_cols; c += 2) {
      if (r * c > budget) {
        throw Error(Errc::budget_exceeded, std::to_string(r) + "x" + std::to_string(c) +
                                               " exceeds the search budget of " +
                                               std::to_string(budget) + " cells");
      }
      for_each_dc(r, c, k, [&out](const Picture& p) {
        if (circuits(matching_graph(p)).size() == 1) out.push_back(p);
      });
    }
  }
  return out;
}

}  // namespace dyck2d
