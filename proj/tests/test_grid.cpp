#include <gtest/gtest.h>

#include <algorithm>

#include <dyck2d.hpp>

using namespace dyck2d;

namespace {

Picture P(std::string_view text, int k = 1) { return parse_picture(text, k); }

template <class Fn>
Errc error_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no dyck2d::Error thrown";
  return Errc::ragged_rows;
}

}  // namespace

TEST(Symbol, TextFormsForOneQuadruple) {
  EXPECT_EQ(symbol_token(sym::a(1), false, false), "a");
  EXPECT_EQ(symbol_token(sym::d(1), false, false), "d");
  EXPECT_EQ(symbol_token(sym::N, false, false), "N");
  EXPECT_EQ(symbol_token(sym::b(3), true, false), "b3");
  EXPECT_TRUE(sym::c(2).is_corner());
  EXPECT_FALSE(sym::N.is_corner());
  EXPECT_LT(sym::a(2), sym::b(1));  // role-major order
  EXPECT_LT(sym::a(1), sym::a(2));
}

TEST(Parse, SmallestCrossword) {
  const Picture p = P("ab\ncd");
  ASSERT_EQ(p.rows(), 2u);
  ASSERT_EQ(p.cols(), 2u);
  EXPECT_EQ(p.at(0, 0), sym::a(1));
  EXPECT_EQ(p.at(0, 1), sym::b(1));
  EXPECT_EQ(p.at(1, 0), sym::c(1));
  EXPECT_EQ(p.at(1, 1), sym::d(1));
}

TEST(Parse, IndexedTokens) {
  const Picture p = P("a1 b1\nc1 d1", 2);
  EXPECT_EQ(p.k(), 2);
  EXPECT_EQ(p, P("ab\ncd"));
  const Picture q = P("a2 b2\nc2 d2", 2);
  EXPECT_EQ(q.at(1, 1), sym::d(2));
}

TEST(Parse, GlyphAliases) { EXPECT_EQ(P("⌜⌝\n⌞⌟"), P("ab\ncd")); }

TEST(Parse, EmptyInputIsEmptyPicture) {
  EXPECT_TRUE(P("").empty());
  EXPECT_TRUE(P("\n  \n").empty());
  EXPECT_EQ(P("").rows(), 0u);
  EXPECT_EQ(P("").cols(), 0u);
}

TEST(Parse, RaggedRowsReportsPosition) {
  try {
    P("ab\ncdN");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.code(), Errc::ragged_rows);
    EXPECT_EQ(e.line(), 2u);
  }
}

TEST(Parse, UnknownTokenReportsPosition) {
  try {
    P("ab\ncx");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.code(), Errc::unknown_token);
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 2u);
  }
}

TEST(Parse, IndexOutOfRange) {
  EXPECT_EQ(error_of([] { P("a3 b3\nc3 d3", 2); }), Errc::index_out_of_range);
}

TEST(Render, AsciiGlyphAndEmpty) {
  EXPECT_EQ(render_picture(P("ab\ncd")), "ab\ncd");
  EXPECT_EQ(render_picture(P("ab\ncd"), RenderStyle::glyph), "⌜⌝\n⌞⌟");
  EXPECT_EQ(render_picture(Picture{}), "");
}

TEST(Render, RoundTripsThroughParse) {
  for (const auto& [name, p] : fixtures()) {
    EXPECT_EQ(P(render_picture(p)), p) << name;
    EXPECT_EQ(P(render_picture(p, RenderStyle::glyph)), p) << name;
    EXPECT_EQ(picture_from_json(picture_to_json(p)), p) << name;
  }
  const Picture indexed = P("a1 a2 b2 b1\nc1 c2 d2 d1", 2);
  EXPECT_EQ(P(render_picture(indexed), 2), indexed);
}

TEST(Render, JsonSchema) {
  const auto j = picture_to_json(P("aN\ncd"));
  EXPECT_EQ(j.dump(), R"({"rows":2,"cols":2,"k":1,"cells":[["a",1],["N",0],["c",1],["d",1]]})");
}

TEST(Concat, WidthAndHeightDouble) {
  EXPECT_EQ(hcat(P("ab\ncd"), P("ab\ncd")), P("abab\ncdcd"));
  EXPECT_EQ(vcat(P("ab\ncd"), P("ab\ncd")), P("ab\ncd\nab\ncd"));
}

TEST(Concat, SizeMismatch) {
  EXPECT_EQ(error_of([] { hcat(P("ab\ncd"), P("a\nb\nc")); }), Errc::size_mismatch);
  EXPECT_EQ(error_of([] { vcat(P("ab\ncd"), P("abc")); }), Errc::size_mismatch);
}

TEST(Concat, EmptyIsIdentity) {
  const Picture p = fixture("fig3_left");
  EXPECT_EQ(hcat(p, Picture{}), p);
  EXPECT_EQ(hcat(Picture{}, p), p);
  EXPECT_EQ(vcat(p, Picture{}), p);
  EXPECT_EQ(vcat(Picture{}, p), p);
}

TEST(Concat, Associative) {
  const Picture x = P("ab\ncd");
  const Picture y = P("aabb\nccdd");
  const Picture z = P("NN\nNN");
  EXPECT_EQ(hcat(hcat(x, y), z), hcat(x, hcat(y, z)));
  const Picture u = P("abab\ncdcd");
  EXPECT_EQ(vcat(vcat(u, y), u), vcat(u, vcat(y, u)));
}

TEST(Subpicture, InnerRectangleOfFig3Left) {
  EXPECT_EQ(subpicture(fixture("fig3_left"), Domain{2, 2, 3, 3}), P("ab\ncd"));
}

TEST(Subpicture, FullDomainIsIdentity) {
  const Picture p = fixture("fig3_right");
  EXPECT_EQ(subpicture(p, full_domain(p)), p);
}

TEST(Subpicture, OutOfBounds) {
  EXPECT_EQ(error_of([] { subpicture(fixture("fig3_left"), Domain{1, 1, 5, 1}); }),
            Errc::domain_out_of_bounds);
}

TEST(Simplot, SideBySideTiling) {
  const Picture base = P("ab\ncd");
  const auto parts = simplot_partition(P("abab\ncdcd"), [&](const Picture& q) { return q == base; });
  ASSERT_TRUE(parts);
  EXPECT_EQ(*parts, (std::vector<Domain>{{1, 1, 2, 2}, {1, 3, 2, 4}}));
}

TEST(Simplot, SingletonDomains) {
  const auto parts =
      simplot_partition(P("ab\ncd"), [](const Picture& q) { return q.rows() == 1 && q.cols() == 1; });
  ASSERT_TRUE(parts);
  EXPECT_EQ(parts->size(), 4u);
}

TEST(Simplot, MixedTileSizes) {
  const std::vector<Picture> tiles{P("ab"), P("N"), P("a\nc"), P("ab\ncd")};
  const Picture p = P("abNa\naabc\nccdN");
  const auto parts = simplot_partition(p, [&](const Picture& q) {
    return std::find(tiles.begin(), tiles.end(), q) != tiles.end();
  });
  ASSERT_TRUE(parts);
  EXPECT_EQ(*parts, (std::vector<Domain>{{1, 1, 1, 2},
                                         {1, 3, 1, 3},
                                         {1, 4, 2, 4},
                                         {2, 1, 3, 1},
                                         {2, 2, 3, 3},
                                         {3, 4, 3, 4}}));
}

// A 3x3 pinwheel of five tiles around a neutral centre: no straight cut
// crosses the picture, so it is not reachable by concatenation alone.
TEST(Simplot, NonGuillotinePartition) {
  const std::vector<Picture> tiles{P("ab"), P("N"), P("a\nc")};
  const Picture p = P("aba\naNc\ncab");
  const auto parts = simplot_partition(p, [&](const Picture& q) {
    return std::find(tiles.begin(), tiles.end(), q) != tiles.end();
  });
  ASSERT_TRUE(parts);
  EXPECT_TRUE(is_partition_of(p, *parts));
  EXPECT_EQ(*parts, (std::vector<Domain>{{1, 1, 1, 2},
                                         {1, 3, 2, 3},
                                         {2, 1, 3, 1},
                                         {2, 2, 2, 2},
                                         {3, 2, 3, 3}}));
  for (std::size_t cut = 1; cut < p.rows(); ++cut) {
    bool straight = true;
    for (const Domain& d : *parts) straight &= d.bottom <= cut || d.top > cut;
    EXPECT_FALSE(straight) << "horizontal cut after row " << cut;
  }
  for (std::size_t cut = 1; cut < p.cols(); ++cut) {
    bool straight = true;
    for (const Domain& d : *parts) straight &= d.right <= cut || d.left > cut;
    EXPECT_FALSE(straight) << "vertical cut after column " << cut;
  }
}

TEST(Simplot, AbsenceIsAValue) {
  const Picture base = P("ab\ncd");
  EXPECT_FALSE(simplot_partition(P("aabb\nccdd"), [&](const Picture& q) { return q == base; }));
  EXPECT_FALSE(simplot_partition(Picture{}, [](const Picture&) { return true; }));
}

TEST(Simplot, PartitionsAreDisjointAndCovering) {
  const Picture p = fixture("fig3_right");
  const auto parts = simplot_partition(p, [](const Picture& q) { return q.area() <= 2; });
  ASSERT_TRUE(parts);
  EXPECT_TRUE(is_partition_of(p, *parts));
  std::vector<Domain> overlapping = *parts;
  overlapping.push_back(Domain{1, 1, 1, 1});
  EXPECT_FALSE(is_partition_of(p, overlapping));
}
