#pragma once

// Text exports: frequency/rank and termhood TSVs, comparability reports,
// term-pair files and evaluation reports.

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <map>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include <nlohmann/json.hpp>

#include "termcomp/bilex.hpp"
#include "termcomp/comparability.hpp"
#include "termcomp/corpus.hpp"
#include "termcomp/error.hpp"
#include "termcomp/termhood.hpp"

namespace termcomp {

enum class OutputFormat { tsv, records };

inline OutputFormat parse_format(std::string_view name) {
  if (name == "tsv") return OutputFormat::tsv;
  if (name == "records" || name == "jsonl") return OutputFormat::records;
  throw Error(ErrorKind::config, "unknown output format '" + std::string(name) + "'");
}

/// Shortest decimal text that round-trips to the same double.
inline std::string format_number(double v) {
  if (v == 0.0) return "0";  // folds -0
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

inline std::string stats_tsv(const FrequencyTable& freq, const RankedVocabulary& ranks) {
  std::vector<std::pair<double, const std::string*>> rows;
  for (const auto& [w, r] : ranks.ranks) rows.emplace_back(r, &w);
  std::stable_sort(rows.begin(), rows.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });
  std::string out = "word\tcount\trank\n";
  for (const auto& [r, w] : rows) {
    out += *w + '\t' + std::to_string(freq.count(*w)) + '\t' + format_number(r) + '\n';
  }
  return out;
}

inline std::string termhood_tsv(const TermhoodTable& table) {
  std::string out = "word\tdomain_rank\tbackground_rank\ttermhood\n";
  for (const auto& w : table.ranked_words()) {
    const auto& e = table.entries.find(w)->second;
    out += w + '\t' + format_number(e.domain_rank) + '\t' + format_number(e.background_rank) +
           '\t' + format_number(e.score) + '\n';
  }
  return out;
}

inline std::string report_text(const std::vector<ComparabilityReport>& reports,
                               OutputFormat format) {
  std::string out;
  const std::map<std::string, std::string> none;
  const auto& meta = reports.empty() ? none : reports.front().metadata;
  if (format == OutputFormat::records) {
    nlohmann::ordered_json m{{"type", "meta"}};
    for (const auto& [k, v] : meta) m[k] = v;
    out += m.dump() + '\n';
    for (const auto& r : reports) {
      for (const auto& c : r.cells) {
        nlohmann::ordered_json rec{{"type", "cell"},          {"corpus_a", r.corpus_a},
                                   {"corpus_b", r.corpus_b},  {"method", to_string(c.method)},
                                   {"top_n", c.top_n},        {"score", c.score},
                                   {"coverage", c.coverage}};
        out += rec.dump() + '\n';
      }
    }
    return out;
  }
  for (const auto& [k, v] : meta) out += "# " + k + '=' + v + '\n';
  out += "corpus_a\tcorpus_b\tmethod\ttop_n\tscore\tcoverage\n";
  for (const auto& r : reports) {
    for (const auto& c : r.cells) {
      out += r.corpus_a + '\t' + r.corpus_b + '\t' + std::string(to_string(c.method)) + '\t' +
             std::to_string(c.top_n) + '\t' + format_number(c.score) + '\t' +
             format_number(c.coverage) + '\n';
    }
  }
  return out;
}

inline std::string pairs_tsv(const std::vector<TermPair>& pairs) {
  std::string out = "source_term\ttarget_term\tsimilarity\trank\n";
  for (const auto& p : pairs) {
    out += p.source_term + '\t' + p.target_term + '\t' + format_number(p.similarity) + '\t' +
           std::to_string(p.rank) + '\n';
  }
  return out;
}

inline std::vector<TermPair> parse_pairs_tsv(std::string_view data, const std::string& where) {
  std::vector<TermPair> pairs;
  std::size_t line_no = 0;
  for (auto line : detail::split_lines(data)) {
    ++line_no;
    if (trim(line).empty() || line.starts_with('#')) continue;
    if (line_no == 1 && line.starts_with("source_term\t")) continue;
    std::vector<std::string_view> f;
    std::size_t start = 0;
    while (true) {
      auto tab = line.find('\t', start);
      f.push_back(line.substr(start, tab == std::string_view::npos ? tab : tab - start));
      if (tab == std::string_view::npos) break;
      start = tab + 1;
    }
    const std::string loc = where + ":" + std::to_string(line_no);
    if (f.size() < 3 || f[0].empty() || f[1].empty()) {
      throw Error(ErrorKind::malformed, loc + ": expected source, target, similarity[, rank]");
    }
    TermPair p{std::string(f[0]), std::string(f[1]), 0.0, 0};
    auto [ptr, ec] = std::from_chars(f[2].data(), f[2].data() + f[2].size(), p.similarity);
    if (ec != std::errc() || ptr != f[2].data() + f[2].size()) {
      throw Error(ErrorKind::malformed, loc + ": bad similarity '" + std::string(f[2]) + "'");
    }
    if (f.size() > 3 && !f[3].empty()) {
      auto [p2, ec2] = std::from_chars(f[3].data(), f[3].data() + f[3].size(), p.rank);
      if (ec2 != std::errc() || p2 != f[3].data() + f[3].size()) {
        throw Error(ErrorKind::malformed, loc + ": bad rank '" + std::string(f[3]) + "'");
      }
    }
    pairs.push_back(std::move(p));
  }
  return pairs;
}

inline std::vector<TermPair> load_pairs(const std::filesystem::path& path) {
  return parse_pairs_tsv(detail::read_file(path), path.string());
}

inline std::string eval_text(const EvalReport& r, OutputFormat format) {
  if (format == OutputFormat::records) {
    nlohmann::ordered_json rec{{"type", "evaluation"},
                               {"mean_similarity", r.mean_similarity},
                               {"top_at_n", r.top_at_n},
                               {"n", r.n},
                               {"mean_dice", r.mean_dice},
                               {"pair_count", r.pair_count},
                               {"source_terms", r.source_terms}};
    return rec.dump() + '\n';
  }
  return "mean_similarity\ttop_at_n\tn\tmean_dice\tpair_count\tsource_terms\n" +
         format_number(r.mean_similarity) + '\t' + format_number(r.top_at_n) + '\t' +
         std::to_string(r.n) + '\t' + format_number(r.mean_dice) + '\t' +
         std::to_string(r.pair_count) + '\t' + std::to_string(r.source_terms) + '\n';
}

/// Writes through a sibling temporary and renames, so a failed run never
/// leaves a partial file at `path`.
inline void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorKind::io, "cannot write '" + path.string() + "'");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) {
      std::error_code ec;
      std::filesystem::remove(tmp, ec);
      throw Error(ErrorKind::io, "write failure on '" + path.string() + "'");
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw Error(ErrorKind::io, "cannot move output into '" + path.string() + "'");
  }
}

}  // namespace termcomp
