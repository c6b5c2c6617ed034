#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "dyck2d/error.hpp"
#include "dyck2d/symbol.hpp"

namespace dyck2d {

using Word = std::vector<Symbol>;

enum class PairKind { row, col };

/// Matching discipline over the corner alphabet. Rows pair [a_i,b_i] and
/// [c_i,d_i]; columns pair [a_i,c_i] and [b_i,d_i].
struct Pairing {
  PairKind kind = PairKind::row;
  int k = 1;

  static constexpr Pairing row(int k = 1) { return Pairing{PairKind::row, k}; }
  static constexpr Pairing col(int k = 1) { return Pairing{PairKind::col, k}; }

  constexpr bool is_open(Symbol s) const noexcept {
    return kind == PairKind::row ? (s.role == Role::A || s.role == Role::C)
                                 : (s.role == Role::A || s.role == Role::B);
  }
  constexpr bool is_close(Symbol s) const noexcept { return s.is_corner() && !is_open(s); }

  // The closing partner of an opening symbol.
  constexpr Symbol close_of(Symbol open) const noexcept {
    if (kind == PairKind::row) return Symbol{open.role == Role::A ? Role::B : Role::D, open.index};
    return Symbol{open.role == Role::A ? Role::C : Role::D, open.index};
  }

  constexpr bool matches(Symbol open, Symbol close) const noexcept {
    return is_open(open) && close_of(open) == close;
  }
};

namespace detail {

inline void require_corners(std::span<const Symbol> w) {
  for (Symbol s : w) {
    if (!s.is_corner()) throw Error(Errc::neutral_not_allowed, "word contains a non-corner symbol");
  }
}

// Partner index of every position (0-based), or nullopt if w is not Dyck.
inline std::optional<std::vector<std::size_t>> partners(std::span<const Symbol> w, Pairing pr) {
  std::vector<std::size_t> mate(w.size());
  std::vector<std::size_t> stack;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (pr.is_open(w[i])) {
      stack.push_back(i);
      continue;
    }
    if (stack.empty() || !pr.matches(w[stack.back()], w[i])) return std::nullopt;
    mate[i] = stack.back();
    mate[stack.back()] = i;
    stack.pop_back();
  }
  if (!stack.empty()) return std::nullopt;
  return mate;
}

}  // namespace detail

/// Single left-to-right stack pass; the empty word is Dyck.
inline bool is_dyck(std::span<const Symbol> w, Pairing pr) {
  detail::require_corners(w);
  return detail::partners(w, pr).has_value();
}

/// Matched pairs as 1-based (open, close) positions, listed in closing order.
inline std::vector<std::pair<std::size_t, std::size_t>> match_positions(std::span<const Symbol> w,
                                                                        Pairing pr) {
  detail::require_corners(w);
  auto mate = detail::partners(w, pr);
  if (!mate) throw Error(Errc::not_dyck, "word is not a Dyck word");
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if ((*mate)[i] < i) out.emplace_back((*mate)[i] + 1, i + 1);
  }
  return out;
}

/// Decides w ≈ N^|w| by rewriting an open symbol, a (possibly empty) run of N
/// and its matching close symbol into N's until nothing changes.
inline bool neutralize_word(std::span<const Symbol> w, Pairing pr) {
  Word cur(w.begin(), w.end());
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < cur.size(); ++i) {
      if (!pr.is_open(cur[i])) continue;
      std::size_t j = i + 1;
      while (j < cur.size() && cur[j].is_neutral()) ++j;
      if (j < cur.size() && pr.matches(cur[i], cur[j])) {
        for (std::size_t t = i; t <= j; ++t) cur[t] = sym::N;
        changed = true;
        i = j;
      }
    }
  }
  for (Symbol s : cur) {
    if (!s.is_neutral()) return false;
  }
  return true;
}

/// Splits a Dyck word into its prime factors at the points where the stack empties.
inline std::vector<Word> prime_factorize(std::span<const Symbol> w, Pairing pr) {
  detail::require_corners(w);
  if (!detail::partners(w, pr)) throw Error(Errc::not_dyck, "word is not a Dyck word");
  std::vector<Word> out;
  std::size_t depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (pr.is_open(w[i])) {
      ++depth;
    } else {
      --depth;
    }
    if (depth == 0) {
      out.emplace_back(w.begin() + start, w.begin() + i + 1);
      start = i + 1;
    }
  }
  return out;
}

namespace detail {

inline void enumerate_dyck_rec(std::size_t n, Pairing pr, const std::vector<Symbol>& alphabet,
                               Word& cur, std::vector<std::size_t>& stack, std::vector<Word>& out) {
  if (cur.size() == n) {
    out.push_back(cur);
    return;
  }
  const std::size_t remaining = n - cur.size();
  for (Symbol s : alphabet) {
    if (pr.is_open(s)) {
      if (stack.size() + 1 > remaining - 1) continue;
      stack.push_back(cur.size());
      cur.push_back(s);
      enumerate_dyck_rec(n, pr, alphabet, cur, stack, out);
      cur.pop_back();
      stack.pop_back();
    } else if (!stack.empty() && pr.matches(cur[stack.back()], s)) {
      const std::size_t top = stack.back();
      stack.pop_back();
      cur.push_back(s);
      enumerate_dyck_rec(n, pr, alphabet, cur, stack, out);
      cur.pop_back();
      stack.push_back(top);
    }
  }
}

}  // namespace detail

/// All Dyck words of length n over the pairing, in lexicographic order with
/// a < b < c < d and indices ascending within a role.
inline std::vector<Word> enumerate_dyck(std::size_t n, Pairing pr) {
  if (n % 2 != 0) throw Error(Errc::odd_length, "Dyck words have even length");
  std::vector<Symbol> alphabet;
  for (Role role : {Role::A, Role::B, Role::C, Role::D}) {
    for (int i = 1; i <= pr.k; ++i) alphabet.push_back(Symbol{role, static_cast<std::uint16_t>(i)});
  }
  std::vector<Word> out;
  Word cur;
  std::vector<std::size_t> stack;
  detail::enumerate_dyck_rec(n, pr, alphabet, cur, stack, out);
  return out;
}

}  // namespace dyck2d
