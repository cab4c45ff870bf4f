#include <gtest/gtest.h>

#include "linepush/direction.hpp"

using namespace linepush;

TEST(Direction, OppositeIsAnInvolution) {
  for (Direction d : all_directions) {
    EXPECT_NE(opposite(d), d);
    EXPECT_EQ(opposite(opposite(d)), d);
  }
}

TEST(Direction, RotationsCycleThroughAllFour) {
  for (Direction d : all_directions) {
    EXPECT_EQ(rotate_cw(rotate_cw(rotate_cw(rotate_cw(d)))), d);
    EXPECT_EQ(rotate_ccw(rotate_cw(d)), d);
    EXPECT_EQ(rotate_cw(rotate_cw(d)), opposite(d));
  }
  EXPECT_EQ(rotate_cw(Direction::left), Direction::up);
}

TEST(Direction, TransposeSwapsAxes) {
  EXPECT_EQ(transpose(Direction::left), Direction::down);
  EXPECT_EQ(transpose(Direction::up), Direction::right);
  for (Direction d : all_directions) {
    EXPECT_EQ(transpose(transpose(d)), d);
    EXPECT_NE(is_horizontal(transpose(d)), is_horizontal(d));
  }
}

TEST(Direction, ParseIgnoresWhitespace) {
  const auto s = parse_sequence("RULD LLD");
  EXPECT_EQ(format_sequence(s), "RULDLLD");
  EXPECT_TRUE(parse_sequence("").empty());
  EXPECT_TRUE(parse_sequence(" \n\t").empty());
}

TEST(Direction, ParseReportsOffset) {
  try {
    parse_sequence("RUxD");
    FAIL() << "expected an error";
  } catch (const sequence_parse_error& e) {
    EXPECT_EQ(e.offset(), 2u);
  }
}

TEST(Direction, SequenceHelpers) {
  EXPECT_EQ(format_sequence(repeat(Direction::left, 3)), "LLL");
  EXPECT_EQ(format_sequence(concat({parse_sequence("RU"), parse_sequence("LD")})), "RULD");
  EXPECT_EQ(format_sequence(transposed(parse_sequence("RULD"))), "URDL");
  PushSequence s = parse_sequence("R");
  append(s, parse_sequence("U"));
  EXPECT_EQ(format_sequence(s), "RU");
}
