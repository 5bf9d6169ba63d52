#pragma once

// Mono-word termhood as the difference of normalized frequency ranks in a
// domain corpus and a background corpus:
//
//   termhood(w) = r_D(w) / |V_D|  -  r_B(w) / |V_B|
//
// with r_B(w) = 0 for words the background never saw.

#include <algorithm>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "termcomp/corpus.hpp"
#include "termcomp/error.hpp"

namespace termcomp {

inline double termhood_of(std::string_view word, const RankedVocabulary& domain,
                          const RankedVocabulary& background) {
  if (background.vocab_size == 0) {
    throw Error(ErrorKind::empty_input, "background vocabulary is empty");
  }
  const auto rd = domain.rank(word);
  if (!rd) {
    throw Error(ErrorKind::unknown_word,
                "word '" + std::string(word) + "' is not in the domain vocabulary");
  }
  const double rb = background.rank(word).value_or(0.0);
  return *rd / static_cast<double>(domain.vocab_size) -
         rb / static_cast<double>(background.vocab_size);
}

struct TermhoodEntry {
  double domain_rank = 0;
  double background_rank = 0;  // 0 when absent from the background
  double score = 0;
};

struct TermhoodTable {
  std::map<std::string, TermhoodEntry, std::less<>> entries;
  std::size_t domain_vocab_size = 0;
  std::size_t background_vocab_size = 0;

  double score(std::string_view word) const {
    auto it = entries.find(word);
    if (it == entries.end()) {
      throw Error(ErrorKind::unknown_word, "no termhood for '" + std::string(word) + "'");
    }
    return it->second.score;
  }

  /// Words ordered by termhood descending, ties broken lexicographically.
  std::vector<std::string> ranked_words() const {
    std::vector<std::pair<double, const std::string*>> order;
    order.reserve(entries.size());
    for (const auto& [w, e] : entries) order.emplace_back(e.score, &w);
    // entries iterate in lexicographic order, so a stable sort keeps the tie-break
    std::stable_sort(order.begin(), order.end(),
                     [](const auto& a, const auto& b) { return a.first > b.first; });
    std::vector<std::string> words;
    words.reserve(order.size());
    for (const auto& [_, w] : order) words.push_back(*w);
    return words;
  }
};

/// Scores every domain word. Background-only words are not scored.
inline TermhoodTable termhood_table(const RankedVocabulary& domain,
                                    const RankedVocabulary& background) {
  if (domain.vocab_size == 0) throw Error(ErrorKind::empty_input, "domain vocabulary is empty");
  if (background.vocab_size == 0) {
    throw Error(ErrorKind::empty_input, "background vocabulary is empty");
  }
  TermhoodTable table;
  table.domain_vocab_size = domain.vocab_size;
  table.background_vocab_size = background.vocab_size;
  for (const auto& [word, rank] : domain.ranks) {
    TermhoodEntry e;
    e.domain_rank = rank;
    e.background_rank = background.rank(word).value_or(0.0);
    e.score = termhood_of(word, domain, background);
    table.entries.emplace_hint(table.entries.end(), word, e);
  }
  return table;
}

inline TermhoodTable termhood_table(const Corpus& domain, const Corpus& background) {
  return termhood_table(rank_by_frequency(count_frequencies(domain)),
                        rank_by_frequency(count_frequencies(background)));
}

}  // namespace termcomp
