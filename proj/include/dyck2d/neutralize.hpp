#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include <json.hpp>

#include "dyck2d/crossword.hpp"
#include "dyck2d/error.hpp"
#include "dyck2d/picture.hpp"

namespace dyck2d {

/// A subpicture with a_i, b_i, c_i, d_i at its corners and N everywhere else.
struct Redex {
  Domain domain;
  std::uint16_t index = 1;

  friend constexpr bool operator==(const Redex&, const Redex&) = default;
};

namespace detail {

// The redex whose north-west corner is the a-cell at 0-based (r, c), if any.
// Between a_i and its b_i only N may occur, so the candidate is unique.
inline std::optional<Redex> redex_at(const Picture& p, std::size_t r, std::size_t c) {
  const Symbol nw = p.at(r, c);
  if (nw.role != Role::A) return std::nullopt;
  std::size_t right = c + 1;
  while (right < p.cols() && p.at(r, right).is_neutral()) ++right;
  if (right == p.cols() || p.at(r, right) != sym::b(nw.index)) return std::nullopt;
  std::size_t bottom = r + 1;
  while (bottom < p.rows() && p.at(bottom, c).is_neutral()) ++bottom;
  if (bottom == p.rows() || p.at(bottom, c) != sym::c(nw.index)) return std::nullopt;
  if (p.at(bottom, right) != sym::d(nw.index)) return std::nullopt;
  for (std::size_t i = r; i <= bottom; ++i) {
    for (std::size_t j = c; j <= right; ++j) {
      const bool corner = (i == r || i == bottom) && (j == c || j == right);
      if (!corner && !p.at(i, j).is_neutral()) return std::nullopt;
    }
  }
  return Redex{Domain{r + 1, c + 1, bottom + 1, right + 1}, nw.index};
}

}  // namespace detail

/// All redexes of p, in column-major order of their north-west corner
/// (left to right, then top to bottom within a column).
inline std::vector<Redex> find_redexes(const Picture& p) {
  std::vector<Redex> out;
  for (std::size_t c = 0; c < p.cols(); ++c) {
    for (std::size_t r = 0; r < p.rows(); ++r) {
      if (auto redex = detail::redex_at(p, r, c)) out.push_back(*redex);
    }
  }
  return out;
}

/// Overwrites the redex domain with N. Throws StaleRedex unless `redex` is a
/// current redex of p.
inline Picture apply_step(const Picture& p, const Redex& redex) {
  const Domain& d = redex.domain;
  if (!valid_domain(p, d) || detail::redex_at(p, d.top - 1, d.left - 1) != redex) {
    throw Error(Errc::stale_redex, "domain is not a redex of the picture");
  }
  Picture out = p;
  for (std::size_t r = d.top - 1; r < d.bottom; ++r) {
    for (std::size_t c = d.left - 1; c < d.right; ++c) out.set(r, c, sym::N);
  }
  return out;
}

enum class Strategy { greedy, exhaustive };

struct Decision {
  bool member = false;
  // Steps applied, in order; for exhaustive search the successful path if any.
  std::vector<Redex> trace;
};

namespace detail {

class ExhaustiveNeutralizer {
 public:
  bool solve(const Picture& p) {
    if (p.all_of(Role::Neutral)) return true;
    if (!dead_.insert(p.key()).second) return false;
    for (const Redex& r : find_redexes(p)) {
      trace_.push_back(r);
      if (solve(apply_step(p, r))) return true;
      trace_.pop_back();
    }
    return false;
  }

  std::vector<Redex> take_trace() { return std::move(trace_); }

 private:
  std::unordered_set<std::string> dead_;
  std::vector<Redex> trace_;
};

}  // namespace detail

/// Neutralizability: some non-empty sequence of steps reaches an all-N picture.
///
/// Greedy always applies the first redex of find_redexes() until none is left.
/// Exhaustive backtracks over every redex choice, remembering dead states; it is
/// the completeness oracle for the greedy order.
inline Decision in_DN(const Picture& p, Strategy strategy = Strategy::greedy) {
  Decision out;
  if (p.empty() || p.any_of(Role::Bullet)) return out;
  if (strategy == Strategy::exhaustive) {
    if (p.all_of(Role::Neutral)) return out;
    detail::ExhaustiveNeutralizer search;
    out.member = search.solve(p);
    if (out.member) out.trace = search.take_trace();
    return out;
  }
  Picture cur = p;
  for (;;) {
    auto redexes = find_redexes(cur);
    if (redexes.empty()) break;
    out.trace.push_back(redexes.front());
    cur = apply_step(cur, redexes.front());
  }
  out.member = !out.trace.empty() && cur.all_of(Role::Neutral);
  return out;
}

inline nlohmann::ordered_json trace_to_json(const std::vector<Redex>& trace) {
  using json = nlohmann::ordered_json;
  json out = json::array();
  for (std::size_t i = 0; i < trace.size(); ++i) {
    const Domain& d = trace[i].domain;
    out.push_back(json{{"domain", json::array({d.top, d.left, d.bottom, d.right})},
                       {"index", trace[i].index},
                       {"step_number", i + 1}});
  }
  return out;
}

/// A length-4 circuit of a quaternate picture, named by its north-west node.
struct Rectangle {
  GridPos north_west;
  Domain box;
  std::array<GridPos, 4> corners;
};

/// Priority between the rectangles of a quaternate picture: α → β when one,
/// two or four corners of α lie in β's box, borders included. The precedence
/// relation is the transitive closure of these edges.
class PrecedenceGraph {
 public:
  explicit PrecedenceGraph(std::vector<Rectangle> rects) : rects_(std::move(rects)) {
    const std::size_t n = rects_.size();
    succ_.assign(n, {});
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (a == b) continue;
        std::size_t inside = 0;
        for (const GridPos& v : rects_[a].corners) inside += rects_[b].box.contains(v.row, v.col);
        if (inside == 3) {
          throw Error(Errc::three_corner_anomaly,
                      "rectangle " + node_name(rects_[a].north_west) +
                          " has exactly three corners inside rectangle " +
                          node_name(rects_[b].north_west));
        }
        if (inside > 0) {
          edges_.emplace_back(a, b);
          succ_[a].push_back(b);
        }
      }
    }
    reach_.assign(n, std::vector<char>(n, '\0'));
    for (std::size_t s = 0; s < n; ++s) {
      std::vector<std::size_t> stack(succ_[s].begin(), succ_[s].end());
      while (!stack.empty()) {
        const std::size_t v = stack.back();
        stack.pop_back();
        if (reach_[s][v]) continue;
        reach_[s][v] = '\1';
        stack.insert(stack.end(), succ_[v].begin(), succ_[v].end());
      }
    }
  }

  const std::vector<Rectangle>& rectangles() const noexcept { return rects_; }
  const std::vector<std::pair<std::size_t, std::size_t>>& priority_edges() const noexcept {
    return edges_;
  }

  std::optional<std::size_t> find(GridPos north_west) const {
    for (std::size_t i = 0; i < rects_.size(); ++i) {
      if (rects_[i].north_west == north_west) return i;
    }
    return std::nullopt;
  }

  bool has_priority(GridPos alpha, GridPos beta) const {
    auto a = find(alpha);
    auto b = find(beta);
    if (!a || !b) return false;
    return std::find(succ_[*a].begin(), succ_[*a].end(), *b) != succ_[*a].end();
  }

  // alpha ≺ beta in the transitive closure.
  bool precedes(GridPos alpha, GridPos beta) const {
    auto a = find(alpha);
    auto b = find(beta);
    return a && b && reach_[*a][*b];
  }

  // Kahn's algorithm; nullopt when the relation has a cycle.
  std::optional<std::vector<std::size_t>> topological_order() const {
    const std::size_t n = rects_.size();
    std::vector<std::size_t> in_degree(n, 0);
    for (const auto& e : edges_) ++in_degree[e.second];
    std::vector<std::size_t> ready;
    for (std::size_t v = n; v-- > 0;) {
      if (in_degree[v] == 0) ready.push_back(v);
    }
    std::vector<std::size_t> order;
    while (!ready.empty()) {
      const std::size_t v = ready.back();
      ready.pop_back();
      order.push_back(v);
      for (std::size_t w : succ_[v]) {
        if (--in_degree[w] == 0) ready.push_back(w);
      }
    }
    if (order.size() != n) return std::nullopt;
    return order;
  }

  bool is_acyclic() const { return topological_order().has_value(); }

  std::string to_dot() const {
    std::string out = "digraph precedence {\n";
    for (const Rectangle& r : rects_) out += "  \"" + node_name(r.north_west) + "\";\n";
    for (const auto& [a, b] : edges_) {
      out += "  \"" + node_name(rects_[a].north_west) + "\" -> \"" +
             node_name(rects_[b].north_west) + "\";\n";
    }
    out += "}\n";
    return out;
  }

 private:
  std::vector<Rectangle> rects_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
  std::vector<std::vector<std::size_t>> succ_;
  std::vector<std::vector<char>> reach_;
};

inline PrecedenceGraph priority_graph(const Picture& p) {
  const auto cs = circuits(matching_graph(p));
  std::vector<Rectangle> rects;
  rects.reserve(cs.size());
  for (const Circuit& c : cs) {
    if (c.length() != 4) throw Error(Errc::not_quaternate, "picture has a circuit longer than 4");
    rects.push_back(Rectangle{c.north_west(), c.bounding_box(),
                              {c.nodes[0], c.nodes[1], c.nodes[2], c.nodes[3]}});
  }
  return PrecedenceGraph(std::move(rects));
}

/// Neutralizability of a quaternate picture decided by acyclicity of precedence.
inline bool in_DN_quaternate(const Picture& p) { return priority_graph(p).is_acyclic(); }

}  // namespace dyck2d
