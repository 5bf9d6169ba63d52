#pragma once

// Zipf-distributed synthetic corpora: a parallel / comparable /
// non-comparable triple measured against one general background.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "termcomp/corpus.hpp"

namespace termcomp::synthetic {

/// Inverse-CDF Zipf sampler over ranks 0..size-1. Uses raw engine bits so
/// the stream is identical across standard library implementations.
class ZipfSampler {
 public:
  ZipfSampler(std::size_t size, double exponent) : cdf_(size) {
    double acc = 0;
    for (std::size_t k = 0; k < size; ++k) {
      acc += 1.0 / std::pow(static_cast<double>(k + 1), exponent);
      cdf_[k] = acc;
    }
    for (auto& c : cdf_) c /= acc;
  }

  std::size_t operator()(std::mt19937_64& rng) const {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
    return it == cdf_.end() ? cdf_.size() - 1 : static_cast<std::size_t>(it - cdf_.begin());
  }

 private:
  std::vector<double> cdf_;
};

struct TripleParams {
  std::uint64_t seed = 1;
  std::size_t tokens = 10000;            // per domain corpus
  std::size_t topic_vocab = 400;         // per domain corpus
  std::size_t general_vocab = 1000;
  std::size_t background_tokens = 20000;
  double topic_leak = 0.05;              // share of background tokens drawn from topic words
  double exponent = 1.0;
  std::size_t doc_length = 100;
};

struct CorpusPair {
  Corpus a;
  Corpus b;
};

struct Triple {
  CorpusPair parallel;
  CorpusPair comparable;
  CorpusPair non_comparable;
  Corpus background;
};

namespace detail {

inline Corpus sample_corpus(std::string name, const std::vector<std::string>& vocab,
                            std::size_t tokens, double exponent, std::size_t doc_length,
                            std::mt19937_64& rng) {
  const ZipfSampler zipf(vocab.size(), exponent);
  Corpus c;
  c.name = std::move(name);
  for (std::size_t i = 0; i < tokens; ++i) {
    if (i % doc_length == 0) {
      c.documents.push_back({"d" + std::to_string(c.documents.size()), {}});
    }
    c.documents.back().tokens.push_back(vocab[zipf(rng)]);
  }
  return c;
}

}  // namespace detail

/// Side A is shared by all three pairs. The comparable side B ranks shared
/// topic words at the same Zipf positions as A (every second position) and
/// fills the rest with its own words; the non-comparable side B has a
/// disjoint vocabulary.
inline Triple make_triple(const TripleParams& p) {
  std::mt19937_64 rng(p.seed);

  std::vector<std::string> vocab_a, vocab_b, vocab_z, general;
  for (std::size_t k = 0; k < p.topic_vocab; ++k) {
    const std::string idx = std::to_string(k / 2);
    if (k % 2 == 0) {
      vocab_a.push_back("shared" + idx);
      vocab_b.push_back("shared" + idx);
    } else {
      vocab_a.push_back("alpha" + idx);
      vocab_b.push_back("beta" + idx);
    }
    vocab_z.push_back("zeta" + std::to_string(k));
  }
  for (std::size_t k = 0; k < p.general_vocab; ++k) general.push_back("gen" + std::to_string(k));

  Triple t;
  Corpus side_a = detail::sample_corpus("side-a", vocab_a, p.tokens, p.exponent, p.doc_length, rng);
  Corpus side_b = detail::sample_corpus("side-b", vocab_b, p.tokens, p.exponent, p.doc_length, rng);
  Corpus side_z = detail::sample_corpus("side-z", vocab_z, p.tokens, p.exponent, p.doc_length, rng);

  t.parallel = {side_a, side_a};
  t.parallel.a.name = "parallel-a";
  t.parallel.b.name = "parallel-b";
  t.comparable = {side_a, std::move(side_b)};
  t.comparable.a.name = "comparable-a";
  t.comparable.b.name = "comparable-b";
  t.non_comparable = {std::move(side_a), std::move(side_z)};
  t.non_comparable.a.name = "non-comparable-a";
  t.non_comparable.b.name = "non-comparable-b";

  std::vector<std::string> topics;
  for (const auto* v : {&vocab_a, &vocab_b, &vocab_z}) topics.insert(topics.end(), v->begin(), v->end());
  std::sort(topics.begin(), topics.end());
  topics.erase(std::unique(topics.begin(), topics.end()), topics.end());

  t.background = detail::sample_corpus("background", general, p.background_tokens, p.exponent,
                                       p.doc_length, rng);
  const std::size_t leak = static_cast<std::size_t>(
      std::llround(p.topic_leak * static_cast<double>(p.background_tokens)));
  std::vector<std::string> leaked;
  for (std::size_t i = 0; i < leak; ++i) {
    leaked.push_back(topics[static_cast<std::size_t>(rng() % topics.size())]);
  }
  t.background.documents.push_back({"leak", std::move(leaked)});
  return t;
}

}  // namespace termcomp::synthetic
