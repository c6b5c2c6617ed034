#pragma once

#include <map>
#include <string>
#include <string_view>

#include "dyck2d/picture.hpp"
#include "dyck2d/text.hpp"

namespace dyck2d {

namespace fixture_text {

// Well-nested 4x4: two overlapping inner boxes bounded by an outer one.
inline constexpr std::string_view fig1_left = "aabb\naabb\nccdd\nccdd";
// Chinese-box counterpart of fig1_left.
inline constexpr std::string_view fig1_mid = "a**b\n*ab*\n*cd*\nc**d";
// Quaternate, four rectangles, three nested in the outer one.
inline constexpr std::string_view fig2 = "aabb\nabab\ncdcd\nccdd";
// Circuits of length 12 and 4.
inline constexpr std::string_view fig3_left = "abab\ncabd\nacdb\ncdcd";
// One circuit of length 36 and seven rectangles.
inline constexpr std::string_view fig3_right =
    "abababab\n"
    "cabdcabd\n"
    "acdabcdb\n"
    "cdaabbcd\n"
    "abccddab\n"
    "cabcdabd\n"
    "acdbacdb\n"
    "cdcdcdcd";
// Base of the double-noose family: a 12-circuit and three rectangles.
inline constexpr std::string_view fig4_left = "aaabbb\ncabdab\nacdbcd\ncccddd";
// Quaternate but not neutralizable: (1,1) and (3,3) block each other.
inline constexpr std::string_view fig5_left =
    "aabbaabb\n"
    "abaabbab\n"
    "cdacdbcd\n"
    "cabdcabd\n"
    "acdbacdb\n"
    "abcabdab\n"
    "cdccddcd\n"
    "ccddccdd";
// Quaternate with a precedence cycle of length 4.
inline constexpr std::string_view fig5_right =
    "aababb\n"
    "abacdb\n"
    "cdcabd\n"
    "acdbab\n"
    "cabdcd\n"
    "ccdcdd";
// Neutralizable in six steps.
inline constexpr std::string_view example1 = "aababb\naabcdb\nccdabd\nccdcdd";
// Neutralizable but not well-nested.
inline constexpr std::string_view p_N = "aabb\nccdd";

}  // namespace fixture_text

/// The named reference pictures, keyed by name in sorted order.
inline std::map<std::string, Picture> fixtures() {
  namespace ft = fixture_text;
  std::map<std::string, Picture> out;
  out.emplace("fig1_left", parse_picture(ft::fig1_left));
  out.emplace("fig1_mid", parse_picture(ft::fig1_mid));
  out.emplace("fig2", parse_picture(ft::fig2));
  out.emplace("fig3_left", parse_picture(ft::fig3_left));
  out.emplace("fig3_right", parse_picture(ft::fig3_right));
  out.emplace("fig4_left", parse_picture(ft::fig4_left));
  out.emplace("fig5_left", parse_picture(ft::fig5_left));
  out.emplace("fig5_right", parse_picture(ft::fig5_right));
  out.emplace("example1", parse_picture(ft::example1));
  out.emplace("p_N", parse_picture(ft::p_N));
  return out;
}

inline Picture fixture(const std::string& name) { return fixtures().at(name); }

}  // namespace dyck2d
