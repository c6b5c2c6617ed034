#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace dyck2d {

// The four corner roles of a quadruple, in the order a=⌜ b=⌝ c=⌞ d=⌟.
// Neutral is the rewriting symbol N; Bullet is the side symbol of Chinese boxes.
enum class Role : std::uint8_t { A, B, C, D, Neutral, Bullet };

struct Symbol {
  Role role = Role::Neutral;
  // 1..k for corners, 0 otherwise.
  std::uint16_t index = 0;

  constexpr bool is_corner() const noexcept { return role <= Role::D; }
  constexpr bool is_neutral() const noexcept { return role == Role::Neutral; }
  constexpr bool is_bullet() const noexcept { return role == Role::Bullet; }

  // Ordering is role-major: a1 < a2 < ... < b1 < ... < d_k < N < bullet.
  friend constexpr auto operator<=>(const Symbol&, const Symbol&) = default;
};

namespace sym {

constexpr Symbol corner(Role role, std::uint16_t index = 1) { return Symbol{role, index}; }
constexpr Symbol a(std::uint16_t i = 1) { return Symbol{Role::A, i}; }
constexpr Symbol b(std::uint16_t i = 1) { return Symbol{Role::B, i}; }
constexpr Symbol c(std::uint16_t i = 1) { return Symbol{Role::C, i}; }
constexpr Symbol d(std::uint16_t i = 1) { return Symbol{Role::D, i}; }
inline constexpr Symbol N{Role::Neutral, 0};
inline constexpr Symbol bullet{Role::Bullet, 0};

}  // namespace sym

constexpr char role_letter(Role role) {
  switch (role) {
    case Role::A: return 'a';
    case Role::B: return 'b';
    case Role::C: return 'c';
    case Role::D: return 'd';
    case Role::Neutral: return 'N';
    case Role::Bullet: return '*';
  }
  return '?';
}

inline const char* role_glyph(Role role) {
  switch (role) {
    case Role::A: return "⌜";
    case Role::B: return "⌝";
    case Role::C: return "⌞";
    case Role::D: return "⌟";
    case Role::Neutral: return "N";
    case Role::Bullet: return "•";
  }
  return "?";
}

// Text token for one cell: a bare letter when `indexed` is false, else letter+index.
inline std::string symbol_token(Symbol s, bool indexed = false, bool glyph = false) {
  std::string out = glyph ? std::string(role_glyph(s.role)) : std::string(1, role_letter(s.role));
  if (indexed && s.is_corner()) out += std::to_string(s.index);
  return out;
}

}  // namespace dyck2d
