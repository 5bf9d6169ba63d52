#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "termcomp/bilex.hpp"

using namespace termcomp;

namespace {

TermhoodTable worked_termhood() {
  return termhood_table(make_corpus("d", {{"a", "a", "a", "b", "b", "c"}}),
                        make_corpus("b", {{"c", "c", "c", "b", "a"}}));
}

ContextVector cv(std::string term, SparseVector w) { return {std::move(term), std::move(w)}; }

}  // namespace

TEST(SelectCandidateTerms, OrderedByTermhood) {
  const auto th = worked_termhood();
  const auto f = count_frequencies(make_corpus("d", {{"a", "a", "a", "b", "b", "c"}}));
  EXPECT_EQ(select_candidate_terms(th, f, 1, 2), (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(select_candidate_terms(th, f, 1, 99), (std::vector<std::string>{"a", "b", "c"}));
  EXPECT_EQ(select_candidate_terms(th, f, 2, 99), (std::vector<std::string>{"a", "b"}));
  EXPECT_TRUE(select_candidate_terms(th, f, 4, 99).empty());
  EXPECT_THROW(select_candidate_terms(th, f, 0, 1), Error);
  EXPECT_THROW(select_candidate_terms(th, f, 1, 0), Error);
}

TEST(BuildContextVectors, CountsBothOccurrences) {
  const auto vs = build_context_vectors(make_corpus("c", {{"a", "b", "a", "c"}}), {"a"}, 1);
  const auto& w = vs.at("a").weights;
  // counts {b:2, c:1}
  EXPECT_DOUBLE_EQ(w.at("b"), 2.0 / std::sqrt(5.0));
  EXPECT_DOUBLE_EQ(w.at("c"), 1.0 / std::sqrt(5.0));
  EXPECT_EQ(w.size(), 2u);
}

TEST(BuildContextVectors, EmptyCases) {
  const auto vs = build_context_vectors(make_corpus("c", {{"a"}, {"x", "y"}}), {"a", "zz"}, 3);
  EXPECT_TRUE(vs.at("a").empty());
  EXPECT_TRUE(vs.at("zz").empty());
  EXPECT_THROW(build_context_vectors(make_corpus("c", {{"a"}}), {"a"}, 0), Error);
}

TEST(BuildContextVectors, WindowStaysInsideDocument) {
  const auto vs =
      build_context_vectors(make_corpus("c", {{"x", "a"}, {"y", "z"}}), {"a"}, 5);
  EXPECT_EQ(vs.at("a").weights, (SparseVector{{"x", 1.0}}));
}

TEST(BuildContextVectors, UnitNormInvariant) {
  std::mt19937_64 rng(17);
  const auto tokens = oracle::random_tokens(rng, 30, 500);
  const auto vs = build_context_vectors(make_corpus("c", {tokens}), {"w0", "w1", "w29", "nope"}, 3);
  for (const auto& [t, v] : vs) {
    if (v.empty()) continue;
    EXPECT_NEAR(squared_norm(v.weights), 1.0, 1e-12) << t;
    for (const auto& [_, w] : v.weights) EXPECT_GT(w, 0.0);
  }
}

TEST(TranslateContextVector, Examples) {
  BilingualDictionary d;
  d.add("好", "good");
  d.add("好", "nice");
  auto t = translate_context_vector(cv("s", {{"好", 1.0}}), d);
  EXPECT_DOUBLE_EQ(t.weights.at("good"), 1.0 / std::sqrt(2.0));
  EXPECT_DOUBLE_EQ(t.weights.at("nice"), 1.0 / std::sqrt(2.0));
  EXPECT_TRUE(translate_context_vector(cv("s", {}), d).empty());

  BilingualDictionary d2;
  d2.add("好", "good");
  t = translate_context_vector(cv("s", {{"好", 0.8}, {"猫", 0.6}}), d2);
  EXPECT_EQ(t.weights, (SparseVector{{"good", 1.0}}));
}

TEST(MatchTerms, Examples) {
  ContextVectors src{{"s", cv("s", {{"good", 1.0}})}};
  ContextVectors tgt{{"cand1", cv("cand1", {{"good", 1 / std::sqrt(2.0)}, {"nice", 1 / std::sqrt(2.0)}})},
                     {"cand2", cv("cand2", {{"book", 1.0}})},
                     {"planted", cv("planted", {{"good", 1.0}})}};
  auto pairs = match_terms(src, tgt, 0.0, 10);
  ASSERT_EQ(pairs.size(), 2u);
  EXPECT_EQ(pairs[0].target_term, "planted");
  EXPECT_DOUBLE_EQ(pairs[0].similarity, 1.0);
  EXPECT_EQ(pairs[0].rank, 1u);
  EXPECT_EQ(pairs[1].target_term, "cand1");
  EXPECT_NEAR(pairs[1].similarity, 0.70711, 1e-5);

  EXPECT_TRUE(match_terms(src, tgt, 1.0, 10).empty());
  EXPECT_EQ(match_terms(src, tgt, 0.0, 1).size(), 1u);
  EXPECT_THROW(match_terms(src, tgt, 1.5, 10), Error);
  EXPECT_THROW(match_terms(src, tgt, 0.5, 0), Error);
}

TEST(MatchTerms, SortedThresholdedAndCapped) {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  ContextVectors src, tgt;
  for (int i = 0; i < 15; ++i) {
    for (auto* side : {&src, &tgt}) {
      SparseVector w;
      for (int k = 0; k < 6; ++k) w["c" + std::to_string(rng() % 10)] = u(rng);
      normalize_l2(w);
      const std::string name = (side == &src ? "s" : "t") + std::to_string(i);
      side->emplace(name, cv(name, w));
    }
  }
  const auto pairs = match_terms(src, tgt, 0.3, 4);
  std::map<std::string, std::vector<const TermPair*>> by_src;
  for (const auto& p : pairs) {
    EXPECT_GT(p.similarity, 0.3);
    by_src[p.source_term].push_back(&p);
  }
  for (const auto& [s, ps] : by_src) {
    EXPECT_LE(ps.size(), 4u);
    for (std::size_t i = 1; i < ps.size(); ++i) {
      EXPECT_GE(ps[i - 1]->similarity, ps[i]->similarity);
      EXPECT_EQ(ps[i]->rank, i + 1);
    }
  }
}

TEST(Dice, Examples) {
  using V = std::vector<std::string>;
  EXPECT_EQ(dice(V{"a", "b"}, V{"a", "b"}), 1.0);
  EXPECT_EQ(dice(V{"a"}, V{"b", "c"}), 0.0);
  EXPECT_EQ(dice(V{"information", "retrieval", "system"}, V{"information", "retrieval"}), 0.8);
  EXPECT_EQ(dice(V{"a", "a", "b"}, V{"a", "b", "b"}), 2.0 * 2 / 6);  // multiset overlap
  EXPECT_EQ(dice(V{}, V{"a"}), 0.0);
  try {
    dice(V{}, V{});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::empty_input);
  }
}

TEST(Dice, SymmetricBoundedMatchesOracle) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 500; ++trial) {
    const auto a = oracle::random_tokens(rng, 6, 1 + rng() % 8);
    const auto b = oracle::random_tokens(rng, 6, rng() % 8);
    const double d = dice(a, b);
    EXPECT_EQ(d, dice(b, a));
    EXPECT_GE(d, 0.0);
    EXPECT_LE(d, 1.0);
    EXPECT_DOUBLE_EQ(d, oracle::dice(a, b));
    EXPECT_EQ(d == 1.0, oracle::recount(a) == oracle::recount(b));
  }
}

TEST(Evaluate, TopAtNHitWithinN) {
  BilingualDictionary gold;
  gold.add("s1", "t1");
  const std::vector<TermPair> pairs{{"s1", "t5", 0.9, 1}, {"s1", "t1", 0.5, 2}, {"s1", "t9", 0.1, 3}};
  auto r = evaluate(pairs, gold, 10);
  EXPECT_EQ(r.top_at_n, 1.0);
  EXPECT_EQ(r.mean_dice, 1.0);
  EXPECT_DOUBLE_EQ(r.mean_similarity, 0.5);
  EXPECT_EQ(r.pair_count, 3u);
  r = evaluate(pairs, gold, 1);
  EXPECT_EQ(r.top_at_n, 0.0);
  EXPECT_EQ(r.mean_dice, 0.0);
}

TEST(Evaluate, PartialMatchUsesDice) {
  BilingualDictionary gold;
  gold.add("信息检索", "information retrieval");
  const std::vector<TermPair> pairs{{"信息检索", "information retrieval system", 0.7, 1}};
  const auto r = evaluate(pairs, gold, 10);
  EXPECT_EQ(r.top_at_n, 0.0);
  EXPECT_DOUBLE_EQ(r.mean_dice, 0.8);
}

TEST(Evaluate, EmptyAndNoOverlap) {
  BilingualDictionary gold;
  gold.add("s", "t");
  const auto empty = evaluate({}, gold, 10);
  EXPECT_EQ(empty.pair_count, 0u);
  EXPECT_EQ(empty.top_at_n, 0.0);
  EXPECT_EQ(empty.mean_dice, 0.0);
  EXPECT_EQ(empty.mean_similarity, 0.0);

  const auto miss = evaluate({{"s", "u", 0.4, 1}, {"q", "t", 0.2, 1}}, gold, 10);
  EXPECT_EQ(miss.top_at_n, 0.0);
  EXPECT_EQ(miss.mean_dice, 0.0);
  EXPECT_EQ(miss.source_terms, 2u);
  EXPECT_THROW(evaluate({}, gold, 0), Error);
}

TEST(Evaluate, TopAtNMonotoneInN) {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<TermPair> pairs;
    BilingualDictionary gold;
    for (int s = 0; s < 8; ++s) {
      gold.add("s" + std::to_string(s), "t" + std::to_string(rng() % 12));
      for (int k = 0; k < 12; ++k) {
        pairs.push_back({"s" + std::to_string(s), "t" + std::to_string(k), u(rng), 0});
      }
    }
    double prev = 0;
    for (std::size_t n = 1; n <= 12; ++n) {
      const double v = evaluate(pairs, gold, n).top_at_n;
      EXPECT_GE(v, prev);
      prev = v;
    }
    EXPECT_EQ(prev, 1.0);
  }
}
