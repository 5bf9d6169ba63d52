#pragma once

// Context-vector bilingual term extraction and its dictionary-based
// evaluation (Top@N accuracy, Dice matching degree, mean similarity).

#include <algorithm>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "termcomp/corpus.hpp"
#include "termcomp/dictionary.hpp"
#include "termcomp/error.hpp"
#include "termcomp/sparse.hpp"
#include "termcomp/termhood.hpp"

namespace termcomp {

struct ExtractionParams {
  std::size_t window = 5;
  std::uint64_t min_freq = 1;
  std::size_t top_k = 1000;
  double threshold = 0.0;
  std::size_t candidates_per_term = 10;
};

/// Unit-length (or empty) co-occurrence profile of a term.
struct ContextVector {
  std::string term;
  SparseVector weights;

  bool empty() const { return weights.empty(); }
};

using ContextVectors = std::map<std::string, ContextVector, std::less<>>;

struct TermPair {
  std::string source_term;
  std::string target_term;
  double similarity = 0;
  std::size_t rank = 0;  // 1-based position among this source term's candidates
};

/// Words with frequency >= min_freq ordered by termhood descending
/// (lexicographic tie-break), truncated to top_k.
inline std::vector<std::string> select_candidate_terms(const TermhoodTable& th,
                                                       const FrequencyTable& freq,
                                                       std::uint64_t min_freq,
                                                       std::size_t top_k) {
  if (min_freq == 0) throw Error(ErrorKind::config, "min-freq must be at least 1");
  if (top_k == 0) throw Error(ErrorKind::config, "top-k must be at least 1");
  std::vector<std::string> out;
  for (auto& w : th.ranked_words()) {
    if (out.size() >= top_k) break;
    if (freq.count(w) >= min_freq) out.push_back(std::move(w));
  }
  return out;
}

/// Counts every token within +-window of each term occurrence (same document,
/// the occurrence itself excluded), then scales to unit length.
inline ContextVectors build_context_vectors(const Corpus& corpus,
                                            const std::vector<std::string>& terms,
                                            std::size_t window) {
  if (window == 0) throw Error(ErrorKind::config, "window must be at least 1");
  ContextVectors out;
  for (const auto& t : terms) out.emplace(t, ContextVector{t, {}});

  for (const auto& doc : corpus.documents) {
    const auto& toks = doc.tokens;
    for (std::size_t i = 0; i < toks.size(); ++i) {
      auto it = out.find(toks[i]);
      if (it == out.end()) continue;
      const std::size_t lo = i >= window ? i - window : 0;
      const std::size_t hi = std::min(toks.size() - 1, i + window);
      for (std::size_t j = lo; j <= hi; ++j) {
        if (j != i) it->second.weights[toks[j]] += 1.0;
      }
    }
  }
  for (auto& [_, cv] : out) normalize_l2(cv.weights);
  return out;
}

/// Projects a context vector through the dictionary (equal split among
/// translations, misses dropped) and renormalizes.
inline ContextVector translate_context_vector(const ContextVector& v,
                                              const BilingualDictionary& dict) {
  ContextVector out{v.term, {}};
  for (const auto& [word, w] : v.weights) {
    const auto* targets = dict.lookup(word);
    if (targets == nullptr) continue;
    const double share = w / static_cast<double>(targets->size());
    for (const auto& t : *targets) out.weights[t] += share;
  }
  normalize_l2(out.weights);
  return out;
}

inline ContextVectors translate_context_vectors(const ContextVectors& vs,
                                                const BilingualDictionary& dict) {
  ContextVectors out;
  for (const auto& [term, v] : vs) out.emplace(term, translate_context_vector(v, dict));
  return out;
}

/// For each source term (in lexicographic order), the best
/// `candidates_per_term` target terms with similarity strictly above
/// `threshold`, by similarity descending then target lexicographic.
inline std::vector<TermPair> match_terms(const ContextVectors& source,
                                         const ContextVectors& target, double threshold,
                                         std::size_t candidates_per_term) {
  if (threshold < 0.0 || threshold > 1.0) {
    throw Error(ErrorKind::config, "threshold must lie in [0, 1]");
  }
  if (candidates_per_term == 0) throw Error(ErrorKind::config, "candidates must be at least 1");

  std::vector<TermPair> pairs;
  std::vector<TermPair> scored;
  for (const auto& [s, sv] : source) {
    scored.clear();
    for (const auto& [t, tv] : target) {
      const double sim = cosine(sv.weights, tv.weights);
      if (sim > threshold) scored.push_back({s, t, sim, 0});
    }
    std::stable_sort(scored.begin(), scored.end(),
                     [](const auto& a, const auto& b) { return a.similarity > b.similarity; });
    for (std::size_t i = 0; i < scored.size() && i < candidates_per_term; ++i) {
      scored[i].rank = i + 1;
      pairs.push_back(std::move(scored[i]));
    }
  }
  return pairs;
}

/// 2 * |multiset overlap| / (|a| + |b|).
template <class RangeA, class RangeB>
double dice(const RangeA& a, const RangeB& b) {
  const std::size_t total = std::size(a) + std::size(b);
  if (total == 0) throw Error(ErrorKind::empty_input, "dice of two empty sequences");
  std::map<std::string_view, long> counts;
  for (const auto& t : a) ++counts[std::string_view(t)];
  std::size_t overlap = 0;
  for (const auto& t : b) {
    auto it = counts.find(std::string_view(t));
    if (it != counts.end() && it->second > 0) {
      --it->second;
      ++overlap;
    }
  }
  return 2.0 * static_cast<double>(overlap) / static_cast<double>(total);
}

inline std::vector<std::string> term_tokens(std::string_view term) {
  return tokenize(term, TokenizerId::passthrough);
}

struct EvalReport {
  double mean_similarity = 0;
  double top_at_n = 0;
  std::size_t n = 10;
  double mean_dice = 0;
  std::size_t pair_count = 0;
  std::size_t source_terms = 0;
};

/// Scores extracted pairs against a gold dictionary. Each source term's
/// candidates are its pairs ordered by similarity (then target); the first
/// `n` of them are judged.
inline EvalReport evaluate(const std::vector<TermPair>& pairs, const BilingualDictionary& gold,
                           std::size_t n) {
  if (n == 0) throw Error(ErrorKind::config, "Top@N needs n >= 1");
  EvalReport r;
  r.n = n;
  r.pair_count = pairs.size();
  if (pairs.empty()) return r;

  std::map<std::string_view, std::vector<const TermPair*>> by_source;
  double sim_sum = 0;
  for (const auto& p : pairs) {
    sim_sum += p.similarity;
    by_source[p.source_term].push_back(&p);
  }
  r.mean_similarity = sim_sum / static_cast<double>(pairs.size());
  r.source_terms = by_source.size();

  std::size_t hits = 0;
  double dice_sum = 0;
  for (auto& [source, cands] : by_source) {
    std::stable_sort(cands.begin(), cands.end(), [](const TermPair* a, const TermPair* b) {
      if (a->similarity != b->similarity) return a->similarity > b->similarity;
      return a->target_term < b->target_term;
    });
    const auto* gold_targets = gold.lookup(source);
    if (gold_targets == nullptr) continue;
    bool hit = false;
    double best = 0;
    for (std::size_t i = 0; i < cands.size() && i < n; ++i) {
      if (gold_targets->contains(cands[i]->target_term)) hit = true;
      const auto cand_tokens = term_tokens(cands[i]->target_term);
      for (const auto& g : *gold_targets) {
        const auto gold_tokens = term_tokens(g);
        if (cand_tokens.empty() && gold_tokens.empty()) continue;
        best = std::max(best, dice(cand_tokens, gold_tokens));
      }
    }
    hits += hit ? 1 : 0;
    dice_sum += best;
  }
  r.top_at_n = static_cast<double>(hits) / static_cast<double>(r.source_terms);
  r.mean_dice = dice_sum / static_cast<double>(r.source_terms);
  return r;
}

/// Full extraction pipeline: termhood-ranked candidates on each side,
/// context vectors, source vectors translated into the target space, matching.
inline std::vector<TermPair> extract_term_pairs(const Corpus& source, const Corpus& source_bg,
                                                const Corpus& target, const Corpus& target_bg,
                                                const BilingualDictionary& dict,
                                                const ExtractionParams& p) {
  const auto src_freq = count_frequencies(source);
  const auto tgt_freq = count_frequencies(target);
  const auto src_th = termhood_table(rank_by_frequency(src_freq),
                                     rank_by_frequency(count_frequencies(source_bg)));
  const auto tgt_th = termhood_table(rank_by_frequency(tgt_freq),
                                     rank_by_frequency(count_frequencies(target_bg)));
  const auto src_terms = select_candidate_terms(src_th, src_freq, p.min_freq, p.top_k);
  const auto tgt_terms = select_candidate_terms(tgt_th, tgt_freq, p.min_freq, p.top_k);
  if (src_terms.empty() || tgt_terms.empty()) return {};
  const auto src_vectors =
      translate_context_vectors(build_context_vectors(source, src_terms, p.window), dict);
  const auto tgt_vectors = build_context_vectors(target, tgt_terms, p.window);
  return match_terms(src_vectors, tgt_vectors, p.threshold, p.candidates_per_term);
}

}  // namespace termcomp
