#include <gtest/gtest.h>

#include "editkit/corpus.hpp"
#include "support.hpp"

namespace editkit {
namespace {

using testing::fixture;
using testing::ScratchDir;
using testing::spit;
using Texts = std::vector<std::string>;

TEST(Tokenize, WhitespaceOnly) {
  EXPECT_EQ(tokenize("Red Joan sounds great").texts(),
            (Texts{"Red", "Joan", "sounds", "great"}));
}

TEST(Tokenize, TrailingQuestionMarkSplits) {
  EXPECT_EQ(tokenize("where do u wanna pick it up at?").texts(),
            (Texts{"where", "do", "u", "wanna", "pick", "it", "up", "at", "?"}));
}

TEST(Tokenize, EmptyAndBlank) {
  EXPECT_TRUE(tokenize("").tokens.empty());
  EXPECT_TRUE(tokenize(" \t\n ").tokens.empty());
}

TEST(Tokenize, PunctuationAtBothEnds) {
  EXPECT_EQ(tokenize("(\"Hello,\" she said.)").texts(),
            (Texts{"(", "\"", "Hello", ",", "\"", "she", "said", ".", ")"}));
  EXPECT_EQ(tokenize("Delhi, India").texts(), (Texts{"Delhi", ",", "India"}));
  EXPECT_EQ(tokenize("this: play").texts(), (Texts{"this", ":", "play"}));
}

TEST(Tokenize, InteriorApostropheStays) {
  EXPECT_EQ(tokenize("don't o'clock").texts(), (Texts{"don't", "o'clock"}));
}

TEST(Tokenize, CliticsAndDottedAbbreviations) {
  EXPECT_EQ(tokenize("I 'll be back").texts(), (Texts{"I", "'ll", "be", "back"}));
  EXPECT_EQ(tokenize("at 9 a.m.").texts(), (Texts{"at", "9", "a.m."}));
  EXPECT_EQ(tokenize("at 9a.m.").texts(), (Texts{"at", "9a.m."}));
  EXPECT_EQ(tokenize("the U.S.").texts(), (Texts{"the", "U.S."}));
  EXPECT_EQ(tokenize("'hello'").texts(), (Texts{"'", "hello", "'"}));
  EXPECT_EQ(tokenize("Atlanta.tomorrow").texts(), (Texts{"Atlanta.tomorrow"}));
}

TEST(Tokenize, OffsetsCountCodePointsAfterNfc) {
  // "e" + combining acute composes to one code point.
  const Sentence s = tokenize("cafe\xCC\x81 ok");
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s.tokens[0].text, "caf\xC3\xA9");
  EXPECT_EQ(s.tokens[0].char_offset, 0u);
  EXPECT_EQ(s.tokens[1].char_offset, 5u);
}

TEST(Tokenize, OffsetsStrictlyIncreasingAndTokensHaveNoSpace) {
  const Sentence s = tokenize("  Hi,  there!  What's  up?  ");
  for (std::size_t i = 0; i < s.size(); ++i) {
    EXPECT_EQ(s.tokens[i].text.find(' '), std::string::npos);
    EXPECT_FALSE(s.tokens[i].text.empty());
    if (i) {
      EXPECT_LT(s.tokens[i - 1].char_offset, s.tokens[i].char_offset);
    }
  }
}

TEST(Tokenize, IdempotentOnJoinedOutput) {
  for (const char* raw : {"What do I have scheduled Tuesday next week?",
                          "I am looking for a unisex salon in SFO.",
                          "Please confirm this: play Are You Ready on TV",
                          "(\"quoted,\" he said...)", "I 'll be at 9 a.m. !",
                          "No I'm leaving on the 3rd from Seattle, WA."}) {
    const Texts once = tokenize(raw).texts();
    EXPECT_EQ(tokenize(join(once)).texts(), once) << raw;
  }
}

TEST(SlotSet, PlaceholdersAreDropped) {
  EXPECT_TRUE(make_slot_set({"--"}).empty());
  EXPECT_TRUE(make_slot_set({"  ", ""}).empty());
  EXPECT_EQ(make_slot_set({" Delhi ", "India", "Delhi"}).slots,
            (Texts{"Delhi", "India", "Delhi"}));
}

TEST(ReadPairs, DialogueFixture) {
  const auto pairs = read_pairs(fixture("dialogue_pairs.jsonl"));
  ASSERT_EQ(pairs.size(), 5u);
  EXPECT_EQ(pairs[0].slots.slots, Texts{"Red Joan"});
  EXPECT_EQ(pairs[1].slots.slots, Texts{"Tuesday next week"});
  EXPECT_TRUE(pairs[4].slots.empty());
  EXPECT_EQ(pairs[4].formal.raw, "Where do you want to pick it up at?");
}

TEST(ReadPairs, OneLine) {
  ScratchDir dir("corpus");
  spit(dir / "p.jsonl", R"({"id":"a","formal":"Hello there.","informal":"hi","slots":["there"]})" "\n");
  const auto pairs = read_pairs(dir / "p.jsonl");
  ASSERT_EQ(pairs.size(), 1u);
  EXPECT_EQ(pairs[0].id, "a");
  EXPECT_EQ(pairs[0].formal.texts(), (Texts{"Hello", "there", "."}));
  EXPECT_EQ(pairs[0].slots.slots, Texts{"there"});
}

TEST(ReadPairs, MissingSlotsFieldMeansEmpty) {
  ScratchDir dir("corpus");
  spit(dir / "p.jsonl", R"({"id":"a","formal":"x","informal":"y"})" "\n");
  EXPECT_TRUE(read_pairs(dir / "p.jsonl")[0].slots.empty());
}

TEST(ReadPairs, DuplicateIdFails) {
  ScratchDir dir("corpus");
  spit(dir / "p.jsonl",
       "{\"id\":\"a\",\"formal\":\"x\",\"informal\":\"y\"}\n"
       "{\"id\":\"a\",\"formal\":\"x\",\"informal\":\"z\"}\n");
  try {
    read_pairs(dir / "p.jsonl");
    FAIL() << "expected InputError";
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find(":2"), std::string::npos) << e.what();
    EXPECT_NE(std::string(e.what()).find("duplicate"), std::string::npos) << e.what();
  }
}

TEST(ReadPairs, MalformedLinesNameLineAndField) {
  ScratchDir dir("corpus");
  spit(dir / "a.jsonl", "{\"id\":\"a\",\"formal\":\"x\",\"informal\":\"y\"}\n{not json\n");
  EXPECT_THROW(read_pairs(dir / "a.jsonl"), InputError);
  spit(dir / "b.jsonl", "{\"id\":\"a\",\"informal\":\"y\"}\n");
  try {
    read_pairs(dir / "b.jsonl");
    FAIL() << "expected InputError";
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("formal"), std::string::npos) << e.what();
    EXPECT_NE(std::string(e.what()).find(":1"), std::string::npos) << e.what();
  }
  spit(dir / "c.jsonl", "{\"id\":\"a\",\"formal\":\"x\",\"informal\":\"y\",\"slots\":\"x\"}\n");
  EXPECT_THROW(read_pairs(dir / "c.jsonl"), InputError);
  EXPECT_THROW(read_pairs(dir / "missing.jsonl"), InputError);
}

TEST(WritePairs, RoundTrip) {
  ScratchDir dir("corpus");
  const auto pairs = read_pairs(fixture("dialogue_pairs.jsonl"));
  write_pairs(pairs, dir / "out.jsonl");
  EXPECT_EQ(read_pairs(dir / "out.jsonl"), pairs);
}

TEST(ReadScores, StoresValidRecord) {
  ScratchDir dir("corpus");
  spit(dir / "s.jsonl", R"({"id":"a","style":0.8,"content":0.76,"fluency":0.76})" "\n");
  const auto scores = read_scores(dir / "s.jsonl");
  ASSERT_EQ(scores.size(), 1u);
  EXPECT_DOUBLE_EQ(scores.at("a").style, 0.8);
  EXPECT_DOUBLE_EQ(scores.at("a").content, 0.76);
  EXPECT_DOUBLE_EQ(scores.at("a").fluency, 0.76);
}

TEST(ReadScores, RejectsOutOfRangeAndMissing) {
  ScratchDir dir("corpus");
  spit(dir / "a.jsonl", R"({"id":"a","style":1.2,"content":0.5,"fluency":0.5})" "\n");
  EXPECT_THROW(read_scores(dir / "a.jsonl"), InputError);
  spit(dir / "b.jsonl", R"({"id":"a","style":0.2,"fluency":0.5})" "\n");
  EXPECT_THROW(read_scores(dir / "b.jsonl"), InputError);
  spit(dir / "c.jsonl", R"({"id":"a","style":"high","content":0.5,"fluency":0.5})" "\n");
  EXPECT_THROW(read_scores(dir / "c.jsonl"), InputError);
}

TEST(ReadScores, EmptyFileGivesEmptyMap) {
  ScratchDir dir("corpus");
  spit(dir / "s.jsonl", "");
  EXPECT_TRUE(read_scores(dir / "s.jsonl").empty());
}

TEST(ReadHypotheses, ReadsAndRejectsDuplicates) {
  const auto hyps = read_hypotheses(fixture("dialogue_rewrites.jsonl"));
  EXPECT_EQ(hyps.size(), 5u);
  EXPECT_EQ(hyps.at("d1"), "red joan is cool");
  ScratchDir dir("corpus");
  spit(dir / "h.jsonl", "{\"id\":\"a\",\"text\":\"x\"}\n{\"id\":\"a\",\"text\":\"y\"}\n");
  EXPECT_THROW(read_hypotheses(dir / "h.jsonl"), InputError);
}

}  // namespace
}  // namespace editkit
