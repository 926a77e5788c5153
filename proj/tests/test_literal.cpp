#include <gtest/gtest.h>

#include "ontokit/literal.hpp"

using namespace ontokit;

TEST(Literal, NumbersCompareNumerically) {
  EXPECT_EQ(*Literal::number("1.0"), *Literal::number("1"));
  EXPECT_EQ(*Literal::number("007.500"), *Literal::number("7.5"));
  EXPECT_EQ(*Literal::number("-0.0"), *Literal::number("0"));
  EXPECT_FALSE(*Literal::number("1.01") == *Literal::number("1.1"));
  EXPECT_EQ(Literal::number("1.0")->lexical(), "1.0");
  EXPECT_EQ(Literal::number("-012.340")->numeric(), "-12.34");
}

TEST(Literal, NumberGrammarIsStrictDecimal) {
  for (const char* bad : {"", "-", "1.", ".5", "1e3", "+1", "0x10", "1,5", "nan", "1.2.3"}) {
    EXPECT_FALSE(Literal::number(bad).has_value()) << bad;
  }
  // Arbitrary length stays exact.
  auto big = Literal::number("123456789012345678901234567890.000000000000000000001");
  ASSERT_TRUE(big);
  EXPECT_FALSE(*big == *Literal::number("123456789012345678901234567890"));
}

TEST(Literal, OtherTypesCompareLexically) {
  EXPECT_EQ(*Literal::string("honey balls"), *Literal::string("honey balls"));
  EXPECT_FALSE(*Literal::string("Honey balls") == *Literal::string("honey balls"));
  EXPECT_FALSE(*Literal::string("1") == *Literal::number("1"));
  EXPECT_FALSE(*Literal::datetime("2020-01-01") == *Literal::datetime("2020-01-01T00:00"));
}

TEST(Literal, DateTimeValidation) {
  for (const char* ok : {"2020-02-29", "2021-12-31T23:59:59", "2021-01-01T10:00", "2021-01-01T10:00:00.125Z",
                         "2021-01-01T10:00:00+04:00"}) {
    EXPECT_TRUE(Literal::datetime(ok).has_value()) << ok;
  }
  for (const char* bad : {"2021-02-29", "2021-13-01", "2021-00-10", "2021-1-01", "2021-01-01T24:00",
                          "2021-01-01 10:00", "2021-01-01T10:00:00+4:00", "2021-01-01T10:00:00.", "1900-02-29"}) {
    EXPECT_FALSE(Literal::datetime(bad).has_value()) << bad;
  }
}

TEST(Literal, BooleansAndBareTokens) {
  EXPECT_EQ(Literal::from_bare_token("true")->type(), ValueType::Boolean);
  EXPECT_EQ(Literal::from_bare_token("12")->type(), ValueType::Number);
  EXPECT_EQ(Literal::from_bare_token("2012-05-06")->type(), ValueType::DateTime);
  EXPECT_FALSE(Literal::from_bare_token("True").has_value());
  EXPECT_FALSE(Literal::from_bare_token("Barhee").has_value());
}

TEST(Literal, Conformance) {
  auto n = *Literal::number("3");
  EXPECT_TRUE(n.conforms_to(ValueType::Number));
  EXPECT_FALSE(n.conforms_to(ValueType::String));
  EXPECT_TRUE(n.conforms_to(ValueType::Enumerated));
  EXPECT_TRUE(n.conforms_to(ValueType::LiteralAny));
}

TEST(Literal, ParseAsFollowsDeclaredType) {
  EXPECT_EQ(Literal::parse_as(ValueType::String, "42")->type(), ValueType::String);
  EXPECT_EQ(Literal::parse_as(ValueType::Number, "42")->type(), ValueType::Number);
  EXPECT_FALSE(Literal::parse_as(ValueType::Number, "old").has_value());
  EXPECT_EQ(Literal::parse_as(ValueType::LiteralAny, "old")->type(), ValueType::String);
  EXPECT_EQ(Literal::parse_as(ValueType::Enumerated, "false")->type(), ValueType::Boolean);
}

TEST(Literal, StringsAreSingleLineAndEscaped) {
  EXPECT_FALSE(Literal::string("a\nb").has_value());
  EXPECT_FALSE(Literal::string("a\rb").has_value());
  EXPECT_EQ(Literal::string(R"(say "hi" \ bye)")->to_source(), R"("say \"hi\" \\ bye")");
}
