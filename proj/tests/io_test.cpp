#include <gtest/gtest.h>

#include <random>

#include "termcomp/io.hpp"
#include "test_util.hpp"

using namespace termcomp;

TEST(FormatNumber, ShortestRoundTrip) {
  EXPECT_EQ(format_number(0.5), "0.5");
  EXPECT_EQ(format_number(2.0), "2");
  EXPECT_EQ(format_number(1.5), "1.5");
  EXPECT_EQ(format_number(-0.0), "0");
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    const double v = u(rng);
    EXPECT_EQ(std::stod(format_number(v)), v);
  }
}

TEST(StatsTsv, SortedByRankDescending) {
  const auto f = count_frequencies(make_corpus("c", {{"a", "a", "b"}}));
  EXPECT_EQ(stats_tsv(f, rank_by_frequency(f)), "word\tcount\trank\na\t2\t2\nb\t1\t1\n");
}

TEST(TermhoodTsv, WorkedPair) {
  const auto t = termhood_table(make_corpus("d", {{"a", "a", "a", "b", "b", "c"}}),
                                make_corpus("b", {{"c", "c", "c", "b", "a"}}));
  const auto text = termhood_tsv(t);
  EXPECT_TRUE(text.starts_with("word\tdomain_rank\tbackground_rank\ttermhood\na\t3\t1.5\t0.5\nb\t2\t1.5\t0.1666"));
  EXPECT_NE(text.find("\nc\t1\t3\t-0.6666"), std::string::npos);
}

TEST(ReportText, RecordsAreJsonLines) {
  ComparabilityReport r;
  r.corpus_a = "x";
  r.corpus_b = "y";
  r.cells = {{WeightMethod::termhood, 100, 0.25, 1.0}};
  r.metadata = {{"tokenizer", "whitespace"}};
  const auto text = report_text({r}, OutputFormat::records);
  const auto nl = text.find('\n');
  const auto meta = nlohmann::json::parse(text.substr(0, nl));
  EXPECT_EQ(meta["type"], "meta");
  EXPECT_EQ(meta["tokenizer"], "whitespace");
  const auto cell = nlohmann::json::parse(text.substr(nl + 1, text.size() - nl - 2));
  EXPECT_EQ(cell["method"], "termhood");
  EXPECT_EQ(cell["top_n"], 100);
  EXPECT_EQ(cell["score"], 0.25);

  EXPECT_EQ(report_text({r}, OutputFormat::tsv),
            "# tokenizer=whitespace\ncorpus_a\tcorpus_b\tmethod\ttop_n\tscore\tcoverage\n"
            "x\ty\ttermhood\t100\t0.25\t1\n");
}

TEST(Pairs, TsvRoundTrip) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<TermPair> pairs;
  for (int i = 0; i < 50; ++i) {
    pairs.push_back({"源" + std::to_string(i % 7), "tgt term " + std::to_string(i), u(rng),
                     static_cast<std::size_t>(i % 10 + 1)});
  }
  const auto back = parse_pairs_tsv(pairs_tsv(pairs), "mem");
  ASSERT_EQ(back.size(), pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    EXPECT_EQ(back[i].source_term, pairs[i].source_term);
    EXPECT_EQ(back[i].target_term, pairs[i].target_term);
    EXPECT_EQ(back[i].similarity, pairs[i].similarity);
    EXPECT_EQ(back[i].rank, pairs[i].rank);
  }
  EXPECT_THROW(parse_pairs_tsv("a\tb\tnot-a-number\n", "mem"), Error);
  EXPECT_THROW(parse_pairs_tsv("a\tb\n", "mem"), Error);
}

TEST(Dictionary, LoadAndNormalize) {
  testutil::TempDir dir;
  const auto d = load_dictionary(dir.write("d.tsv", "好\tGood\n好\tnice\n\n书\tbook\n"));
  EXPECT_EQ(d.size(), 2u);
  EXPECT_TRUE(d.contains("好", "good"));
  EXPECT_EQ(d.lookup("好")->size(), 2u);
  EXPECT_EQ(d.lookup("猫"), nullptr);
  EXPECT_THROW(load_dictionary(dir.write("bad.tsv", "only-one-field\n")), Error);
  EXPECT_THROW(load_dictionary(dir.write("bad2.tsv", "x\t\n")), Error);
}

TEST(WriteFileAtomic, WritesAndLeavesNoTemp) {
  testutil::TempDir dir;
  const auto p = dir.path() / "out.tsv";
  write_file_atomic(p, "hello\n");
  EXPECT_EQ(testutil::slurp(p), "hello\n");
  EXPECT_FALSE(std::filesystem::exists(dir.path() / "out.tsv.tmp"));
  EXPECT_THROW(write_file_atomic(dir.path() / "no-such-dir" / "x", "y"), Error);
}
