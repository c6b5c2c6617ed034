#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "dyck2d/picture.hpp"

namespace dyck2d {

namespace detail {

template <class Member>
class PartitionSearch {
 public:
  PartitionSearch(const Picture& p, Member& member)
      : picture_(p), member_(member), covered_(p.area(), '\0') {}

  bool run() { return extend(0); }

  std::vector<Domain> take() {
    std::sort(chosen_.begin(), chosen_.end());
    return std::move(chosen_);
  }

 private:
  bool covered(std::size_t r, std::size_t c) const { return covered_[r * picture_.cols() + c]; }

  void mark(const Domain& d, char value) {
    for (std::size_t r = d.top - 1; r < d.bottom; ++r) {
      for (std::size_t c = d.left - 1; c < d.right; ++c) covered_[r * picture_.cols() + c] = value;
    }
  }

  // `from` is a lower bound on the first uncovered cell in row-major order.
  bool extend(std::size_t from) {
    std::size_t anchor = from;
    while (anchor < covered_.size() && covered_[anchor]) ++anchor;
    if (anchor == covered_.size()) return true;
    if (dead_.count(covered_)) return false;

    const std::size_t r0 = anchor / picture_.cols();
    const std::size_t c0 = anchor % picture_.cols();
    std::size_t max_right = c0;
    while (max_right < picture_.cols() && !covered(r0, max_right)) ++max_right;

    for (std::size_t right = c0; right < max_right; ++right) {
      for (std::size_t bottom = r0; bottom < picture_.rows(); ++bottom) {
        bool free_row = true;
        for (std::size_t c = c0; c <= right; ++c) {
          if (covered(bottom, c)) {
            free_row = false;
            break;
          }
        }
        if (!free_row) break;
        const Domain d{r0 + 1, c0 + 1, bottom + 1, right + 1};
        if (!member_(subpicture(picture_, d))) continue;
        mark(d, '\1');
        chosen_.push_back(d);
        if (extend(anchor + 1)) return true;
        chosen_.pop_back();
        mark(d, '\0');
      }
    }
    dead_.insert(covered_);
    return false;
  }

  const Picture& picture_;
  Member& member_;
  std::string covered_;
  std::vector<Domain> chosen_;
  std::unordered_set<std::string> dead_;
};

}  // namespace detail

/// Searches for a tessellation of `p` into domains whose subpictures satisfy
/// `member`.
///
/// Candidate domains are anchored at the first uncovered cell in row-major order
/// and tried narrowest-first, then shortest-first, with backtracking; covering
/// states known to be dead are remembered. The search is exhaustive, so an empty
/// result proves no tessellation exists. Domains are returned sorted by
/// (top, left).
template <class Member>
std::optional<std::vector<Domain>> simplot_partition(const Picture& p, Member&& member) {
  if (p.empty()) return std::nullopt;
  detail::PartitionSearch<std::remove_reference_t<Member>> search(p, member);
  if (!search.run()) return std::nullopt;
  return search.take();
}

/// Checks that `parts` are pairwise disjoint domains of `p` covering every cell.
inline bool is_partition_of(const Picture& p, const std::vector<Domain>& parts) {
  std::vector<int> hits(p.area(), 0);
  for (const Domain& d : parts) {
    if (!valid_domain(p, d)) return false;
    for (std::size_t r = d.top - 1; r < d.bottom; ++r) {
      for (std::size_t c = d.left - 1; c < d.right; ++c) ++hits[r * p.cols() + c];
    }
  }
  return std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
}

}  // namespace dyck2d
