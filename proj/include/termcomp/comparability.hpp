#pragma once

// Top-N weighted word vectors and cosine comparability of corpus pairs.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "termcomp/corpus.hpp"
#include "termcomp/dictionary.hpp"
#include "termcomp/error.hpp"
#include "termcomp/sparse.hpp"
#include "termcomp/termhood.hpp"

namespace termcomp {

enum class WeightMethod { frequency, termhood };

inline WeightMethod parse_method(std::string_view name) {
  if (name == "frequency" || name == "freq") return WeightMethod::frequency;
  if (name == "termhood") return WeightMethod::termhood;
  throw Error(ErrorKind::config, "unknown method '" + std::string(name) + "'");
}

inline std::string_view to_string(WeightMethod m) {
  return m == WeightMethod::frequency ? "frequency" : "termhood";
}

inline const std::vector<std::size_t>& default_top_ns() {
  static const std::vector<std::size_t> sizes{100, 200, 500, 1000, 2000, 5000};
  return sizes;
}

struct TermWeightVector {
  SparseVector weights;
  WeightMethod method = WeightMethod::frequency;
  std::size_t top_n = 0;
};

/// Frequency: the top_n most frequent words weighted by relative frequency.
/// Termhood: the top_n highest-termhood words weighted by their raw score
/// (negative scores kept). Ties at the cut go to the lexicographically
/// smaller word; zero weights are never stored.
inline TermWeightVector build_weight_vector(WeightMethod method, const FrequencyTable& freq,
                                            const TermhoodTable* th, std::size_t top_n) {
  if (top_n == 0) throw Error(ErrorKind::config, "top-N must be positive");
  if (freq.empty()) throw Error(ErrorKind::empty_input, "empty frequency table");

  TermWeightVector v{{}, method, top_n};
  if (method == WeightMethod::frequency) {
    std::vector<std::pair<std::uint64_t, const std::string*>> order;
    order.reserve(freq.counts.size());
    for (const auto& [w, c] : freq.counts) order.emplace_back(c, &w);
    std::stable_sort(order.begin(), order.end(),
                     [](const auto& a, const auto& b) { return a.first > b.first; });
    const auto total = static_cast<double>(freq.total_tokens);
    for (std::size_t i = 0; i < order.size() && i < top_n; ++i) {
      v.weights.emplace(*order[i].second, static_cast<double>(order[i].first) / total);
    }
    return v;
  }

  if (th == nullptr) throw Error(ErrorKind::config, "termhood method needs a termhood table");
  const auto words = th->ranked_words();
  for (std::size_t i = 0; i < words.size() && i < top_n; ++i) {
    const double s = th->score(words[i]);
    if (s != 0.0) v.weights.emplace(words[i], s);
  }
  return v;
}

struct MappedVector {
  TermWeightVector vector;
  double coverage = 0;  // share of source entries with a dictionary translation
};

/// Projects a vector into the dictionary's target space. Each weight is split
/// equally among the word's translations; untranslatable words are dropped.
inline MappedVector map_vector(const TermWeightVector& v, const BilingualDictionary& dict) {
  if (dict.empty()) throw Error(ErrorKind::config, "bilingual dictionary is empty");
  MappedVector out{{{}, v.method, v.top_n}, 0.0};
  std::size_t hits = 0;
  for (const auto& [word, w] : v.weights) {
    const auto* targets = dict.lookup(word);
    if (targets == nullptr) continue;
    ++hits;
    const double share = w / static_cast<double>(targets->size());
    for (const auto& t : *targets) out.vector.weights[t] += share;
  }
  std::erase_if(out.vector.weights, [](const auto& kv) { return kv.second == 0.0; });
  if (!v.weights.empty()) {
    out.coverage = static_cast<double>(hits) / static_cast<double>(v.weights.size());
  }
  return out;
}

inline double cosine(const TermWeightVector& a, const TermWeightVector& b) {
  return cosine(a.weights, b.weights);
}

struct ComparabilityCell {
  WeightMethod method;
  std::size_t top_n;
  double score;
  double coverage;  // 1 in same-language mode
};

struct ComparabilityReport {
  std::string corpus_a;
  std::string corpus_b;
  std::vector<ComparabilityCell> cells;
  std::map<std::string, std::string> metadata;

  std::optional<double> score(WeightMethod m, std::size_t n) const {
    for (const auto& c : cells) {
      if (c.method == m && c.top_n == n) return c.score;
    }
    return std::nullopt;
  }
};

struct SweepInputs {
  const Corpus& a;
  const Corpus& b;
  const Corpus* background_a = nullptr;
  const Corpus* background_b = nullptr;  // bilingual mode; defaults to background_a otherwise
  const BilingualDictionary* dict = nullptr;  // maps side-B words into side-A's language
};

inline bool is_bilingual(const Corpus& a, const Corpus& b) { return a.language != b.language; }

/// One cell per (method, N), methods in the order given, N in the order given.
inline ComparabilityReport comparability_sweep(const SweepInputs& in,
                                               const std::vector<WeightMethod>& methods,
                                               const std::vector<std::size_t>& top_ns) {
  if (top_ns.empty()) throw Error(ErrorKind::config, "top-N list is empty");
  for (auto n : top_ns) {
    if (n == 0) throw Error(ErrorKind::config, "top-N values must be positive");
  }
  if (methods.empty()) throw Error(ErrorKind::config, "no metric method requested");

  const bool bilingual = is_bilingual(in.a, in.b);
  if (bilingual && (in.dict == nullptr || in.dict->empty())) {
    throw Error(ErrorKind::config, "corpora have different languages ('" + in.a.language +
                                       "', '" + in.b.language + "') but no dictionary was given");
  }

  const bool need_termhood =
      std::find(methods.begin(), methods.end(), WeightMethod::termhood) != methods.end();
  const Corpus* bg_a = in.background_a;
  const Corpus* bg_b = bilingual ? in.background_b : (in.background_b ? in.background_b : bg_a);
  if (need_termhood && bg_a == nullptr) {
    throw Error(ErrorKind::config, "termhood method needs a background corpus");
  }
  if (need_termhood && bg_b == nullptr) {
    throw Error(ErrorKind::config, "bilingual termhood comparison needs a second background");
  }

  const FrequencyTable freq_a = count_frequencies(in.a);
  const FrequencyTable freq_b = count_frequencies(in.b);
  std::optional<TermhoodTable> th_a, th_b;
  if (need_termhood) {
    const auto ranks_bg_a = rank_by_frequency(count_frequencies(*bg_a));
    th_a = termhood_table(rank_by_frequency(freq_a), ranks_bg_a);
    th_b = termhood_table(rank_by_frequency(freq_b),
                          bg_b == bg_a ? ranks_bg_a : rank_by_frequency(count_frequencies(*bg_b)));
  }

  ComparabilityReport report;
  report.corpus_a = in.a.name;
  report.corpus_b = in.b.name;
  for (auto method : methods) {
    const TermhoodTable* ta = th_a ? &*th_a : nullptr;
    const TermhoodTable* tb = th_b ? &*th_b : nullptr;
    for (auto n : top_ns) {
      const auto va = build_weight_vector(method, freq_a, ta, n);
      auto vb = build_weight_vector(method, freq_b, tb, n);
      double coverage = 1.0;
      if (bilingual) {
        auto mapped = map_vector(vb, *in.dict);
        vb = std::move(mapped.vector);
        coverage = mapped.coverage;
      }
      report.cells.push_back({method, n, cosine(va, vb), coverage});
    }
  }
  return report;
}

}  // namespace termcomp
