#pragma once

// Corpus loading, frequency counting and tie-averaged frequency ranking.

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "termcomp/error.hpp"
#include "termcomp/text.hpp"

namespace termcomp {

enum class CorpusMode { full_text, keyword_list };

inline CorpusMode parse_mode(std::string_view name) {
  if (name == "full-text" || name == "fulltext") return CorpusMode::full_text;
  if (name == "keyword-list" || name == "keywords") return CorpusMode::keyword_list;
  throw Error(ErrorKind::config, "unknown corpus mode '" + std::string(name) + "'");
}

inline std::string_view to_string(CorpusMode mode) {
  return mode == CorpusMode::full_text ? "full-text" : "keyword-list";
}

struct Document {
  std::string id;
  std::vector<std::string> tokens;
};

struct Corpus {
  std::string name;
  std::string language = "und";
  CorpusMode mode = CorpusMode::full_text;
  std::vector<Document> documents;

  std::size_t total_tokens() const {
    std::size_t n = 0;
    for (const auto& d : documents) n += d.tokens.size();
    return n;
  }
};

using StopwordSet = std::set<std::string, std::less<>>;

struct LoadOptions {
  CorpusMode mode = CorpusMode::full_text;
  TokenizerId tokenizer = TokenizerId::whitespace;
  const StopwordSet* stopwords = nullptr;
  // Treat a plain file as line-delimited `id<TAB>text` records instead of a
  // single document. Ignored for directories and keyword lists.
  bool records = false;
  std::string language = "und";
};

namespace detail {

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::io, "cannot read '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw Error(ErrorKind::io, "read failure on '" + path.string() + "'");
  std::string data = ss.str();
  if (!utf8::valid(data)) {
    throw Error(ErrorKind::decode, "'" + path.string() + "' is not valid UTF-8");
  }
  return data;
}

inline std::vector<std::string_view> split_lines(std::string_view data) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= data.size()) {
    auto end = data.find('\n', start);
    if (end == std::string_view::npos) end = data.size();
    auto line = data.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  if (!lines.empty() && lines.back().empty()) lines.pop_back();
  return lines;
}

inline void drop_stopwords(std::vector<std::string>& tokens, const StopwordSet* stopwords) {
  if (stopwords == nullptr || stopwords->empty()) return;
  std::erase_if(tokens, [&](const std::string& t) { return stopwords->contains(t); });
}

inline std::vector<std::string> keyword_tokens(std::string_view data, const LoadOptions& opt,
                                               const std::string& where) {
  std::vector<std::string> tokens;
  std::size_t line_no = 0;
  for (auto line : split_lines(data)) {
    ++line_no;
    if (trim(line).empty()) continue;
    std::string_view keyword = line;
    std::uint64_t count = 1;
    if (auto tab = line.find('\t'); tab != std::string_view::npos) {
      keyword = line.substr(0, tab);
      auto field = trim(line.substr(tab + 1));
      auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), count);
      if (ec != std::errc() || ptr != field.data() + field.size() || count == 0) {
        throw Error(ErrorKind::malformed, where + ":" + std::to_string(line_no) +
                                              ": keyword count must be a positive integer");
      }
    }
    keyword = trim(keyword);
    if (keyword.empty()) {
      throw Error(ErrorKind::malformed,
                  where + ":" + std::to_string(line_no) + ": missing keyword field");
    }
    std::string token = normalize_token(keyword, opt.tokenizer);
    if (opt.stopwords != nullptr && opt.stopwords->contains(token)) continue;
    tokens.insert(tokens.end(), count, token);
  }
  return tokens;
}

inline Document make_document(std::string id, std::string_view data, const LoadOptions& opt,
                              const std::string& where) {
  Document doc{std::move(id), {}};
  if (opt.mode == CorpusMode::keyword_list) {
    doc.tokens = keyword_tokens(data, opt, where);
  } else {
    doc.tokens = tokenize(data, opt.tokenizer);
    drop_stopwords(doc.tokens, opt.stopwords);
  }
  return doc;
}

}  // namespace detail

/// Reads a stopword file: one word per line, blank lines ignored. Entries are
/// normalized like corpus tokens so they match after folding.
inline StopwordSet load_stopwords(const std::filesystem::path& path,
                                  TokenizerId tokenizer = TokenizerId::whitespace) {
  StopwordSet words;
  const std::string data = detail::read_file(path);
  for (auto line : detail::split_lines(data)) {
    auto w = trim(line);
    if (!w.empty()) words.insert(normalize_token(w, tokenizer));
  }
  return words;
}

/// Loads a corpus from a file or a directory.
///
/// A directory contributes one document per regular file (sorted by name,
/// hidden files skipped). A file is one document, or one document per line
/// when `records` is set (full-text) with `id<TAB>text` fields. Keyword lists
/// hold one keyword per line with an optional TAB-separated repeat count.
inline Corpus load_corpus(const std::filesystem::path& path, const LoadOptions& opt = {}) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (!fs::exists(path, ec)) throw Error(ErrorKind::io, "no such path '" + path.string() + "'");

  Corpus corpus;
  corpus.name = path.filename().empty() ? path.parent_path().filename().string()
                                        : path.filename().string();
  corpus.language = opt.language;
  corpus.mode = opt.mode;

  if (fs::is_directory(path, ec)) {
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(path)) {
      if (!entry.is_regular_file()) continue;
      if (entry.path().filename().string().starts_with('.')) continue;
      files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    for (const auto& f : files) {
      corpus.documents.push_back(
          detail::make_document(f.filename().string(), detail::read_file(f), opt, f.string()));
    }
    return corpus;
  }

  const std::string data = detail::read_file(path);
  if (opt.records && opt.mode == CorpusMode::full_text) {
    std::set<std::string, std::less<>> seen;
    std::size_t line_no = 0;
    for (auto line : detail::split_lines(data)) {
      ++line_no;
      if (trim(line).empty()) continue;
      const auto tab = line.find('\t');
      const std::string where = path.string() + ":" + std::to_string(line_no);
      if (tab == std::string_view::npos) {
        throw Error(ErrorKind::malformed, where + ": expected 'id<TAB>text'");
      }
      std::string id(trim(line.substr(0, tab)));
      if (id.empty()) throw Error(ErrorKind::malformed, where + ": empty document id");
      if (!seen.insert(id).second) {
        throw Error(ErrorKind::malformed, where + ": duplicate document id '" + id + "'");
      }
      corpus.documents.push_back(
          detail::make_document(std::move(id), line.substr(tab + 1), opt, where));
    }
    return corpus;
  }

  corpus.documents.push_back(
      detail::make_document(path.stem().string(), data, opt, path.string()));
  return corpus;
}

/// Builds an in-memory corpus from already tokenized documents.
inline Corpus make_corpus(std::string name, std::vector<std::vector<std::string>> docs,
                          std::string language = "und",
                          CorpusMode mode = CorpusMode::full_text) {
  Corpus c{std::move(name), std::move(language), mode, {}};
  for (std::size_t i = 0; i < docs.size(); ++i) {
    c.documents.push_back({"doc" + std::to_string(i), std::move(docs[i])});
  }
  return c;
}

struct FrequencyTable {
  std::map<std::string, std::uint64_t, std::less<>> counts;
  std::uint64_t total_tokens = 0;

  std::size_t vocab_size() const { return counts.size(); }
  bool empty() const { return counts.empty(); }

  std::uint64_t count(std::string_view word) const {
    auto it = counts.find(word);
    return it == counts.end() ? 0 : it->second;
  }
};

inline FrequencyTable count_frequencies(const Corpus& corpus) {
  FrequencyTable table;
  for (const auto& doc : corpus.documents) {
    for (const auto& tok : doc.tokens) ++table.counts[tok];
    table.total_tokens += doc.tokens.size();
  }
  if (table.total_tokens == 0) {
    throw Error(ErrorKind::empty_input, "corpus '" + corpus.name + "' has no tokens");
  }
  return table;
}

/// Word ranks in ascending frequency order: the rarest word has rank 1 and
/// the most frequent has rank |V|. Equal counts share the mean of the rank
/// positions they occupy.
struct RankedVocabulary {
  std::map<std::string, double, std::less<>> ranks;
  std::size_t vocab_size = 0;

  std::optional<double> rank(std::string_view word) const {
    auto it = ranks.find(word);
    if (it == ranks.end()) return std::nullopt;
    return it->second;
  }
  bool contains(std::string_view word) const { return ranks.find(word) != ranks.end(); }
};

inline RankedVocabulary rank_by_frequency(const FrequencyTable& table) {
  if (table.empty()) throw Error(ErrorKind::empty_input, "empty vocabulary");

  std::vector<std::pair<std::uint64_t, const std::string*>> order;
  order.reserve(table.counts.size());
  for (const auto& [word, count] : table.counts) order.emplace_back(count, &word);
  std::stable_sort(order.begin(), order.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });

  RankedVocabulary vocab;
  vocab.vocab_size = order.size();
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i;
    while (j < order.size() && order[j].first == order[i].first) ++j;
    // positions i+1 .. j, mean = (i+1+j)/2
    const double rank = static_cast<double>(i + 1 + j) / 2.0;
    for (std::size_t k = i; k < j; ++k) vocab.ranks.emplace(*order[k].second, rank);
    i = j;
  }
  return vocab;
}

}  // namespace termcomp
