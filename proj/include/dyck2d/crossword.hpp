#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdio>
#include <string>
#include <vector>

#include <json.hpp>

#include "dyck2d/dyck1d.hpp"
#include "dyck2d/error.hpp"
#include "dyck2d/picture.hpp"
#include "dyck2d/text.hpp"

namespace dyck2d {

/// Every row is a non-empty Dyck word under the row pairing and every column
/// under the column pairing.
inline bool in_DC(const Picture& p) {
  if (!p.over_corner_alphabet()) {
    throw Error(Errc::contains_neutral, "Dyck crosswords are over the corner alphabet only");
  }
  if (p.empty()) return false;
  for (std::size_t r = 0; r < p.rows(); ++r) {
    if (!detail::partners(p.row(r), Pairing::row(p.k()))) return false;
  }
  for (std::size_t c = 0; c < p.cols(); ++c) {
    if (!detail::partners(p.column(c), Pairing::col(p.k()))) return false;
  }
  return true;
}

struct GridEdge {
  GridPos from;
  GridPos to;

  friend constexpr auto operator<=>(const GridEdge&, const GridEdge&) = default;
};

/// Matching graph of a Dyck crossword: each cell is joined to its row match
/// and to its column match, so every node has exactly one edge of each kind.
class MatchingGraph {
 public:
  std::size_t rows() const noexcept { return labels_.rows(); }
  std::size_t cols() const noexcept { return labels_.cols(); }
  const Picture& labels() const noexcept { return labels_; }

  GridPos row_mate(GridPos v) const { return pos(row_mate_[flat(v)]); }
  GridPos col_mate(GridPos v) const { return pos(col_mate_[flat(v)]); }
  Symbol label(GridPos v) const { return labels_.at(v.row - 1, v.col - 1); }

  // Sorted by left endpoint; `from` always precedes `to`.
  std::vector<GridEdge> row_edges() const { return edges(row_mate_); }
  std::vector<GridEdge> col_edges() const { return edges(col_mate_); }

 private:
  friend MatchingGraph matching_graph(const Picture& p);

  std::size_t flat(GridPos v) const { return (v.row - 1) * cols() + (v.col - 1); }
  GridPos pos(std::size_t idx) const { return GridPos{idx / cols() + 1, idx % cols() + 1}; }

  std::vector<GridEdge> edges(const std::vector<std::size_t>& mate) const {
    std::vector<GridEdge> out;
    for (std::size_t i = 0; i < mate.size(); ++i) {
      if (i < mate[i]) out.push_back(GridEdge{pos(i), pos(mate[i])});
    }
    return out;
  }

  Picture labels_;
  std::vector<std::size_t> row_mate_;
  std::vector<std::size_t> col_mate_;
};

inline MatchingGraph matching_graph(const Picture& p) {
  if (!in_DC(p)) throw Error(Errc::not_in_dc, "matching graphs exist only for Dyck crosswords");
  MatchingGraph g;
  g.labels_ = p;
  g.row_mate_.assign(p.area(), 0);
  g.col_mate_.assign(p.area(), 0);
  for (std::size_t r = 0; r < p.rows(); ++r) {
    auto mate = *detail::partners(p.row(r), Pairing::row(p.k()));
    for (std::size_t c = 0; c < p.cols(); ++c) g.row_mate_[r * p.cols() + c] = r * p.cols() + mate[c];
  }
  for (std::size_t c = 0; c < p.cols(); ++c) {
    auto mate = *detail::partners(p.column(c), Pairing::col(p.k()));
    for (std::size_t r = 0; r < p.rows(); ++r) g.col_mate_[r * p.cols() + c] = mate[r] * p.cols() + c;
  }
  return g;
}

/// A simple cycle of the matching graph. Nodes are listed in traversal order
/// starting at the row-major smallest a-node: row edge to b, column edge to d,
/// row edge to c, column edge back towards a.
struct Circuit {
  std::vector<GridPos> nodes;
  Word labels;

  std::size_t length() const noexcept { return nodes.size(); }

  // Row-major smallest node; for a rectangle this is its north-west corner.
  GridPos north_west() const { return *std::min_element(nodes.begin(), nodes.end()); }

  Domain bounding_box() const {
    Domain box{nodes.front().row, nodes.front().col, nodes.front().row, nodes.front().col};
    for (const GridPos& v : nodes) {
      box.top = std::min(box.top, v.row);
      box.bottom = std::max(box.bottom, v.row);
      box.left = std::min(box.left, v.col);
      box.right = std::max(box.right, v.col);
    }
    return box;
  }
};

inline std::vector<Circuit> circuits(const MatchingGraph& g) {
  std::vector<char> seen(g.rows() * g.cols(), '\0');
  auto flat = [&g](GridPos v) { return (v.row - 1) * g.cols() + (v.col - 1); };
  static constexpr Role kCycle[4] = {Role::A, Role::B, Role::D, Role::C};

  std::vector<Circuit> out;
  for (std::size_t r = 1; r <= g.rows(); ++r) {
    for (std::size_t c = 1; c <= g.cols(); ++c) {
      const GridPos start{r, c};
      if (seen[flat(start)] || g.label(start).role != Role::A) continue;
      const auto index = g.label(start).index;
      Circuit circuit;
      GridPos v = start;
      // Row edge on even steps, column edge on odd steps.
      for (std::size_t step = 0;; ++step) {
        const Symbol s = g.label(v);
        if (s.role != kCycle[step % 4] || s.index != index || seen[flat(v)]) {
          throw Error(Errc::degree_violation, "matching graph circuit breaks the label law");
        }
        seen[flat(v)] = '\1';
        circuit.nodes.push_back(v);
        circuit.labels.push_back(s);
        v = (step % 2 == 0) ? g.row_mate(v) : g.col_mate(v);
        if (v == start) {
          if (step % 4 != 3) {
            throw Error(Errc::degree_violation, "circuit closed off the a-b-d-c cycle");
          }
          break;
        }
      }
      out.push_back(std::move(circuit));
    }
  }
  if (!std::all_of(seen.begin(), seen.end(), [](char x) { return x != '\0'; })) {
    throw Error(Errc::degree_violation, "some node lies on no circuit");
  }
  return out;
}

inline std::vector<Circuit> circuits(const Picture& p) { return circuits(matching_graph(p)); }

/// Every circuit of the matching graph is a rectangle.
inline bool is_quaternate(const Picture& p) {
  const auto cs = circuits(matching_graph(p));
  return std::all_of(cs.begin(), cs.end(), [](const Circuit& c) { return c.length() == 4; });
}

inline std::string node_name(GridPos v) {
  return std::to_string(v.row) + "," + std::to_string(v.col);
}

/// Graphviz export. Row edges are solid, column edges dashed, one hue per circuit;
/// node positions pin the grid layout for neato.
inline std::string graph_to_dot(const MatchingGraph& g, const std::vector<Circuit>& cs) {
  std::vector<std::size_t> owner(g.rows() * g.cols(), 0);
  for (std::size_t i = 0; i < cs.size(); ++i) {
    for (const GridPos& v : cs[i].nodes) owner[(v.row - 1) * g.cols() + (v.col - 1)] = i;
  }
  auto color = [&cs](std::size_t i) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f 0.800 0.850", static_cast<double>(i) / static_cast<double>(cs.size()));
    return std::string(buf);
  };
  auto color_of = [&](GridPos v) { return color(owner[(v.row - 1) * g.cols() + (v.col - 1)]); };

  std::string out = "graph matching {\n  node [shape=circle, fontname=\"monospace\"];\n";
  for (std::size_t r = 1; r <= g.rows(); ++r) {
    for (std::size_t c = 1; c <= g.cols(); ++c) {
      const GridPos v{r, c};
      out += "  \"" + node_name(v) + "\" [label=\"" +
             symbol_token(g.label(v), g.labels().k() > 1) + "\", pos=\"" + std::to_string(c) +
             "," + std::to_string(g.rows() + 1 - r) + "!\", color=\"" + color_of(v) + "\"];\n";
    }
  }
  for (const GridEdge& e : g.row_edges()) {
    out += "  \"" + node_name(e.from) + "\" -- \"" + node_name(e.to) + "\" [style=solid, color=\"" +
           color_of(e.from) + "\"];\n";
  }
  for (const GridEdge& e : g.col_edges()) {
    out += "  \"" + node_name(e.from) + "\" -- \"" + node_name(e.to) +
           "\" [style=dashed, color=\"" + color_of(e.from) + "\"];\n";
  }
  out += "}\n";
  return out;
}

inline nlohmann::ordered_json graph_to_json(const MatchingGraph& g, const std::vector<Circuit>& cs) {
  using json = nlohmann::ordered_json;
  auto pos = [](GridPos v) { return json::array({v.row, v.col}); };
  const int k = g.labels().k();
  json out;
  out["rows"] = g.rows();
  out["cols"] = g.cols();
  json nodes = json::array();
  for (std::size_t r = 1; r <= g.rows(); ++r) {
    for (std::size_t c = 1; c <= g.cols(); ++c) {
      const GridPos v{r, c};
      nodes.push_back(json{{"pos", pos(v)}, {"label", symbol_token(g.label(v), k > 1)}});
    }
  }
  out["nodes"] = std::move(nodes);
  auto edges = [&pos](const std::vector<GridEdge>& es) {
    json arr = json::array();
    for (const GridEdge& e : es) arr.push_back(json::array({pos(e.from), pos(e.to)}));
    return arr;
  };
  out["row_edges"] = edges(g.row_edges());
  out["col_edges"] = edges(g.col_edges());
  json circ = json::array();
  for (const Circuit& c : cs) {
    json nodes_json = json::array();
    for (const GridPos& v : c.nodes) nodes_json.push_back(pos(v));
    circ.push_back(json{{"length", c.length()}, {"nodes", std::move(nodes_json)},
                        {"label", render_word(c.labels, k)}});
  }
  out["circuits"] = std::move(circ);
  return out;
}

}  // namespace dyck2d
