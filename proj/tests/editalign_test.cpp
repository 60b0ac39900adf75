#include <gtest/gtest.h>

#include "editkit/corpus.hpp"
#include "editkit/editalign.hpp"
#include "support.hpp"

namespace editkit {
namespace {

using Texts = std::vector<std::string>;
using Tags = std::vector<EditTag>;
constexpr auto EQ = EditTag::kEqual;
constexpr auto REP = EditTag::kReplace;
constexpr auto DEL = EditTag::kDelete;
constexpr auto INS = EditTag::kInsert;

Texts toks(const char* s) { return tokenize(s).texts(); }

// Turns an end-first operation list from the path enumerator into the
// alignment it denotes.
EditAlignment alignment_from_ops(const Texts& a, const Texts& b, const std::string& ops) {
  EditAlignment out;
  out.source_tags.assign(a.size(), EQ);
  std::size_t i = a.size(), j = b.size();
  std::map<std::size_t, Texts> reversed;
  for (char op : ops) {
    switch (op) {
      case 'M': --i; --j; break;
      case 'S': --i; --j; out.source_tags[i] = REP; out.replacements[i] = {b[j]}; break;
      case 'D': --i; out.source_tags[i] = DEL; break;
      case 'I': --j; reversed[i].push_back(b[j]); break;
    }
  }
  for (auto& [g, v] : reversed) out.insertions[g] = Texts(v.rbegin(), v.rend());
  return out;
}

TEST(Align, ReturningTuesdayPair) {
  const Texts src = toks("I will be returning Tuesday next week.");
  const Texts tgt = toks("I 'll be back Tuesday next week !");
  const auto al = align(src, tgt);
  EXPECT_EQ(al.source_tags, (Tags{EQ, REP, EQ, REP, EQ, EQ, EQ, REP}));
  EXPECT_TRUE(al.insertions.empty());
  EXPECT_EQ(al.replacements.at(1), Texts{"'ll"});
  EXPECT_EQ(al.replacements.at(3), Texts{"back"});
  EXPECT_EQ(al.replacements.at(7), Texts{"!"});
  testing::PathEnumerator oracle{src, tgt, {}};
  EXPECT_EQ(al, alignment_from_ops(src, tgt, oracle.canonical()));
}

TEST(Align, IdentityIsAllEqual) {
  const Texts s = toks("What do I have scheduled Tuesday next week?");
  const auto al = align(s, s);
  EXPECT_EQ(al.source_tags, Tags(s.size(), EQ));
  EXPECT_TRUE(al.insertions.empty());
  EXPECT_EQ(al.cost(), 0u);
}

TEST(Align, InsertionsAfterEachToken) {
  const auto al = align(Texts{"a", "b"}, Texts{"a", "x", "b", "y"});
  EXPECT_EQ(al.source_tags, (Tags{EQ, EQ}));
  EXPECT_EQ(al.insertions.at(1), Texts{"x"});
  EXPECT_EQ(al.insertions.at(2), Texts{"y"});
  EXPECT_EQ(al.insertions.size(), 2u);
  const Texts a{"a", "b"}, b{"a", "x", "b", "y"};
  testing::PathEnumerator oracle{a, b, {}};
  const std::string ops = oracle.canonical();
  std::size_t minimal = 0;
  for (const auto& p : oracle.paths) minimal += testing::PathEnumerator::cost(p) == 2;
  EXPECT_EQ(minimal, 1u) << "only one minimal script exists";
  EXPECT_EQ(al, alignment_from_ops(a, b, ops));
}

TEST(Align, EmptySides) {
  const auto ins = align(Texts{}, Texts{"x", "y"});
  EXPECT_TRUE(ins.source_tags.empty());
  EXPECT_EQ(ins.insertions.at(0), (Texts{"x", "y"}));
  const auto del = align(Texts{"x", "y"}, Texts{});
  EXPECT_EQ(del.source_tags, (Tags{DEL, DEL}));
  EXPECT_TRUE(apply_edits(Texts{"x", "y"}, del).empty());
  EXPECT_EQ(align(Texts{}, Texts{}).cost(), 0u);
}

TEST(Align, CaseSensitive) {
  const auto al = align(Texts{"Tuesday"}, Texts{"tUESDAY"});
  EXPECT_EQ(al.source_tags, Tags{REP});
}

TEST(Align, MatchesCanonicalOracleOnSmallRandomPairs) {
  const auto corpus = testing::mutation_corpus(600, 7);
  std::size_t checked = 0;
  for (const auto& p : corpus) {
    if (p.source.size() > 7 || p.target.size() > 7) continue;
    testing::PathEnumerator oracle{p.source, p.target, {}};
    const auto expected = alignment_from_ops(p.source, p.target, oracle.canonical());
    EXPECT_EQ(align(p.source, p.target), expected)
        << join(p.source) << " => " << join(p.target);
    ++checked;
  }
  EXPECT_GT(checked, 100u);
}

TEST(Align, RoundTripAndMinimalCost) {
  for (const auto& p : testing::mutation_corpus(2000, 11)) {
    const auto al = align(p.source, p.target);
    ASSERT_EQ(apply_edits(p.source, al), p.target);
    ASSERT_EQ(al.cost(), testing::levenshtein_distance(p.source, p.target));
  }
}

TEST(Align, Deterministic) {
  const Texts a = toks("Do you have any preference in city and type of events?");
  const Texts b = toks("do you like city or music or Sports something like that?");
  EXPECT_EQ(align(a, b), align(a, b));
}

TEST(ApplyEdits, ReturningPairReconstructsTarget) {
  const Sentence src = tokenize("I will be returning Tuesday next week.");
  const Sentence tgt = tokenize("I 'll be back Tuesday next week !");
  EXPECT_EQ(apply_edits(src, align(src, tgt)), tgt.texts());
}

TEST(ApplyEdits, IdentityReturnsSource) {
  const Texts s{"a", "b", "c"};
  EXPECT_EQ(apply_edits(s, align(s, s)), s);
}

TEST(ApplyEdits, RejectsBadIndices) {
  EditAlignment al;
  al.source_tags = {EQ};
  al.insertions[5] = {"x"};
  EXPECT_THROW(apply_edits(Texts{"a"}, al), InputError);
  EditAlignment rep;
  rep.source_tags = {EQ};
  rep.replacements[3] = {"x"};
  EXPECT_THROW(apply_edits(Texts{"a"}, rep), InputError);
  EditAlignment short_tags;
  EXPECT_THROW(apply_edits(Texts{"a"}, short_tags), InputError);
  EditAlignment missing;
  missing.source_tags = {REP};
  EXPECT_THROW(apply_edits(Texts{"a"}, missing), InputError);
}

TEST(TaggerExample, AllEqual) {
  const Texts s{"a", "b"};
  const auto ex = to_tagger_example(align(s, s), s);
  EXPECT_EQ(ex.labels, (Tags{EQ, EQ}));
  EXPECT_EQ(ex.bos_label, EQ);
  EXPECT_EQ(ex.tokens, s);
}

TEST(TaggerExample, InsertionFoldsOntoPrecedingEqual) {
  const Texts s{"a", "b"};
  const auto ex = to_tagger_example(align(s, Texts{"a", "x", "b"}), s);
  EXPECT_EQ(ex.labels, (Tags{INS, EQ}));
}

TEST(TaggerExample, SingleSubstitution) {
  const auto ex = to_tagger_example(align(Texts{"a"}, Texts{"b"}), Texts{"a"});
  EXPECT_EQ(ex.labels, Tags{REP});
}

TEST(TaggerExample, ReplaceDominatesFollowingInsertion) {
  // "a" -> "x y": REPLACE plus an insertion in the next gap.
  const auto al = align(Texts{"a"}, Texts{"x", "y"});
  EXPECT_EQ(al.source_tags, Tags{REP});
  const auto ex = to_tagger_example(al, Texts{"a"});
  EXPECT_EQ(ex.labels, Tags{REP});
}

TEST(TaggerExample, SentenceInitialInsertionSetsBos) {
  const Texts s{"confirm", "this"};
  const auto ex = to_tagger_example(align(s, Texts{"plz", "confirm", "this"}), s);
  EXPECT_EQ(ex.bos_label, INS);
  EXPECT_EQ(ex.labels, (Tags{EQ, EQ}));
}

TEST(TaggerExample, LabelsMatchTokenCount) {
  for (const auto& p : testing::mutation_corpus(300, 3)) {
    const auto ex = to_tagger_example(align(p.source, p.target), p.source);
    ASSERT_EQ(ex.labels.size(), p.source.size());
  }
}

TEST(TagDistribution, SingleAllEqualSentence) {
  const auto d = tag_distribution(std::vector<Tags>{{EQ, EQ, EQ, EQ}});
  ASSERT_EQ(d.size(), 1u);
  EXPECT_DOUBLE_EQ(d.at(EQ), 1.0);
}

TEST(TagDistribution, HalfAndHalf) {
  const auto d = tag_distribution(std::vector<Tags>{{REP, EQ}, {REP, EQ}});
  EXPECT_DOUBLE_EQ(d.at(REP), 0.5);
  EXPECT_DOUBLE_EQ(d.at(EQ), 0.5);
}

TEST(TagDistribution, SumsToOne) {
  std::vector<TaggerExample> exs;
  for (const auto& p : testing::mutation_corpus(500, 5)) {
    exs.push_back(to_tagger_example(align(p.source, p.target), p.source));
  }
  double sum = 0.0;
  for (const auto& [t, f] : tag_distribution(exs)) sum += f;
  EXPECT_NEAR(sum, 1.0, 1e-9);
}

TEST(TagDistribution, EmptyFails) {
  EXPECT_THROW(tag_distribution(std::vector<Tags>{}), InputError);
  EXPECT_THROW(tag_distribution(std::vector<Tags>{{}, {}}), InputError);
}

TEST(EditTagNames, RoundTrip) {
  for (auto t : {EQ, REP, DEL, INS}) EXPECT_EQ(parse_edit_tag(to_string(t)), t);
  EXPECT_FALSE(parse_edit_tag("KEEP").has_value());
}

TEST(TaggerJson, RoundTripThroughFile) {
  testing::ScratchDir dir("editalign");
  const Sentence src = tokenize("I will be returning Tuesday next week.");
  const auto ex = to_tagger_example(align(src, tokenize("I 'll be back Tuesday next week !")), src);
  {
    std::ofstream out(dir / "tags.jsonl");
    jsonl::write_line(out, to_json("e3", ex));
  }
  const auto back = read_tagger_examples(dir / "tags.jsonl");
  ASSERT_EQ(back.size(), 1u);
  EXPECT_EQ(back[0].id, "e3");
  EXPECT_EQ(back[0].example, ex);
}

TEST(TaggerJson, RejectsLengthMismatchAndUnknownLabel) {
  testing::ScratchDir dir("editalign");
  testing::spit(dir / "a.jsonl",
                R"({"id":"a","tokens":["x","y"],"labels":["EQUAL"],"bos_label":"EQUAL"})" "\n");
  EXPECT_THROW(read_tagger_examples(dir / "a.jsonl"), InputError);
  testing::spit(dir / "b.jsonl",
                R"({"id":"a","tokens":["x"],"labels":["KEEP"],"bos_label":"EQUAL"})" "\n");
  EXPECT_THROW(read_tagger_examples(dir / "b.jsonl"), InputError);
}

}  // namespace
}  // namespace editkit
