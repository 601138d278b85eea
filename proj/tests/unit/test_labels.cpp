#include <gtest/gtest.h>

#include <random>

#include "lfdb/arith/character.hpp"
#include "lfdb/error.hpp"
#include "lfdb/labels/labels.hpp"

using namespace lfdb;
using namespace lfdb::labels;

namespace {

// Reference base-26 encoder written as repeated division with a shifted digit.
std::string letters_of(std::uint64_t n) {
  std::string s;
  while (n > 0) {
    --n;
    s.insert(s.begin(), static_cast<char>('a' + n % 26));
    n /= 26;
  }
  return s;
}

Integer random_big(std::mt19937_64& rng, int max_digits) {
  const int digits = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_digits));
  std::string s(1, static_cast<char>('1' + rng() % 9));
  for (int i = 1; i < digits; ++i) s.push_back(static_cast<char>('0' + rng() % 10));
  return Integer(s);
}

}  // namespace

TEST(NumberFieldLabel, PaperExample) {
  const auto l = parse_nf_label("3.1.23.1");
  EXPECT_EQ(l.degree, 3u);
  EXPECT_EQ(l.r1, 1u);
  EXPECT_EQ(l.abs_disc, 23);
  EXPECT_EQ(l.index, 1u);
  EXPECT_EQ(format_nf_label(l), "3.1.23.1");
}

TEST(NumberFieldLabel, Rejects) {
  for (const char* bad : {"3.2.23.1", "3.1.23", "3.1.23.1.1", "3.4.23.1", "03.1.23.1", "3.1.023.1", "3.1.0.1",
                          "3.1.23.0", "3.1.-23.1", "a.1.23.1", "", "3..23.1", "0.0.1.1"}) {
    EXPECT_THROW(parse_nf_label(bad), ParseError) << bad;
  }
}

TEST(NumberFieldLabel, RoundTripProperty) {
  std::mt19937_64 rng(3101);
  for (int i = 0; i < 20000; ++i) {
    NumberFieldLabel l;
    l.degree = 1 + rng() % 40;
    l.r1 = l.degree % 2;
    l.r1 += 2 * (rng() % (l.degree / 2 + 1));
    if (l.r1 > l.degree) l.r1 -= 2;
    l.abs_disc = random_big(rng, 60);
    l.index = 1 + rng() % 1000;
    const auto text = format_nf_label(l);
    EXPECT_EQ(parse_nf_label(text), l);
    EXPECT_EQ(format_nf_label(parse_nf_label(text)), text);
  }
}

TEST(ECLabel, PaperExample) {
  const auto l = parse_ec_label("5077a1");
  EXPECT_EQ(l.conductor, 5077);
  EXPECT_EQ(l.isogeny_class, "a");
  EXPECT_EQ(l.curve_number, 1u);
  EXPECT_EQ(format_ec_label(l, ECLabelStyle::Url), "5077/a/1");
  EXPECT_EQ(format_ec_label(l), "5077a1");
  EXPECT_EQ(parse_ec_label("5077/a/1"), l);
}

TEST(ECLabel, BijectiveBase26) {
  const auto l = parse_ec_label("37bb2");
  EXPECT_EQ(l.conductor, 37);
  EXPECT_EQ(l.isogeny_class, "bb");
  EXPECT_EQ(l.curve_number, 2u);
  EXPECT_EQ(decode_isogeny_class("bb"), 54u);
  EXPECT_EQ(decode_isogeny_class("a"), 1u);
  EXPECT_EQ(decode_isogeny_class("z"), 26u);
  EXPECT_EQ(decode_isogeny_class("aa"), 27u);
  EXPECT_EQ(decode_isogeny_class("ba"), 53u);
  for (std::uint64_t n = 1; n <= 20000; ++n) {
    EXPECT_EQ(encode_isogeny_class(n), letters_of(n));
    EXPECT_EQ(decode_isogeny_class(letters_of(n)), n);
  }
  EXPECT_THROW(encode_isogeny_class(0), DomainError);
}

TEST(ECLabel, Rejects) {
  for (const char* bad : {"5077A1", "5077a", "a1", "5077/a", "5077/A/1", "05077a1", "5077a01", "0a1", "5077a0",
                          "5077/a/1/", "5077-a-1", ""}) {
    EXPECT_THROW(parse_ec_label(bad), ParseError) << bad;
  }
}

TEST(ECLabel, RoundTripProperty) {
  std::mt19937_64 rng(5077);
  for (int i = 0; i < 20000; ++i) {
    ECLabelQ l;
    l.conductor = random_big(rng, 30);
    l.isogeny_class = letters_of(1 + rng() % 100000);
    l.curve_number = 1 + rng() % 50;
    for (auto style : {ECLabelStyle::Compact, ECLabelStyle::Url}) {
      const auto text = format_ec_label(l, style);
      EXPECT_EQ(parse_ec_label(text), l);
      EXPECT_EQ(format_ec_label(parse_ec_label(text), style), text);
    }
  }
}

TEST(CharacterLabel, SmallModuli) {
  EXPECT_EQ(format_character_label(character_label(arith::character_group(7)[0])), "7.1");
  const auto g4 = arith::character_group(4);
  ASSERT_EQ(g4.size(), 2u);
  EXPECT_EQ(format_character_label(character_label(g4[0])), "4.1");
  EXPECT_EQ(format_character_label(character_label(g4[1])), "4.2");
  EXPECT_THROW(lookup_character({4, 3}), NotFoundError);
  EXPECT_THROW(lookup_character({4, 0}), NotFoundError);
  for (const char* bad : {"4", "4.", ".2", "4.02", "04.2", "4.2.1", "4.x", "0.1"}) {
    EXPECT_THROW(parse_character_label(bad), ParseError) << bad;
  }
}

TEST(CharacterLabel, ExhaustiveRoundTrip) {
  for (std::uint64_t N = 1; N <= 50; ++N) {
    const auto group = arith::character_group(N);
    std::set<std::string> seen;
    for (const auto& chi : group) {
      const auto label = character_label(chi);
      const auto text = format_character_label(label);
      EXPECT_TRUE(seen.insert(text).second);
      EXPECT_EQ(parse_character_label(text), label);
      EXPECT_EQ(lookup_character(label), chi);
      EXPECT_GE(label.index, 1u);
      EXPECT_LE(label.index, group.size());
    }
    EXPECT_EQ(format_character_label(character_label(group[0])), std::to_string(N) + ".1");
  }
}
