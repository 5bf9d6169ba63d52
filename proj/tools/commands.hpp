#pragma once

// Subcommand implementations behind the termcomp CLI. Each command validates
// and loads everything before producing output, and returns a process exit
// code: 0 ok, 2 config error, 3 I/O error, 4 empty input.

#include <chrono>
#include <ctime>
#include <iostream>
#include <optional>
#include <string>
#include <type_traits>
#include <vector>

#include "termcomp/termcomp.hpp"

namespace termcomp::cli {

enum ExitCode : int { ok = 0, config_error = 2, io_error = 3, empty_input_error = 4 };

struct RunConfig {
  std::vector<std::string> inputs;       // positional corpus / pair files
  std::string mode = "full-text";
  std::string background_mode = "full-text";
  std::vector<std::string> backgrounds;  // one shared, or one per side
  std::vector<std::string> languages;    // optional tag per side
  std::string tokenizer = "whitespace";
  std::string stopwords;
  std::string dict;
  std::string gold;
  bool records_input = false;
  std::vector<std::string> methods{"frequency", "termhood"};
  std::vector<std::size_t> top_ns;  // empty -> command default
  std::size_t window = 5;
  std::uint64_t min_freq = 1;
  std::size_t top_k = 1000;
  double threshold = 0.0;
  std::size_t candidates = 10;
  std::size_t eval_n = 10;
  std::string output;  // empty -> stdout
  std::string format = "tsv";
  bool no_timestamp = false;
  std::uint64_t seed = 1;
};

inline int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::config:
    case ErrorKind::unknown_word: return config_error;
    case ErrorKind::io:
    case ErrorKind::decode:
    case ErrorKind::malformed: return io_error;
    case ErrorKind::empty_input: return empty_input_error;
  }
  return config_error;
}

namespace detail {

inline void require(bool cond, const std::string& message) {
  if (!cond) throw Error(ErrorKind::config, message);
}

struct Loader {
  const RunConfig& cfg;
  TokenizerId tokenizer;
  CorpusMode mode;
  CorpusMode background_mode;
  std::optional<StopwordSet> stopwords;

  explicit Loader(const RunConfig& c)
      : cfg(c),
        tokenizer(parse_tokenizer(c.tokenizer)),
        mode(parse_mode(c.mode)),
        background_mode(parse_mode(c.background_mode)) {
    if (!c.stopwords.empty()) stopwords = load_stopwords(c.stopwords, tokenizer);
  }

  Corpus corpus(const std::string& path, std::size_t side) const {
    LoadOptions opt;
    opt.mode = mode;
    opt.tokenizer = tokenizer;
    opt.stopwords = stopwords ? &*stopwords : nullptr;
    opt.records = cfg.records_input;
    if (side < cfg.languages.size()) opt.language = cfg.languages[side];
    return load_corpus(path, opt);
  }

  Corpus background(const std::string& path, std::size_t side) const {
    LoadOptions opt;
    opt.mode = background_mode;
    opt.tokenizer = tokenizer;
    opt.stopwords = stopwords ? &*stopwords : nullptr;
    opt.records = cfg.records_input;
    if (side < cfg.languages.size()) opt.language = cfg.languages[side];
    return load_corpus(path, opt);
  }
};

inline std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

inline std::vector<WeightMethod> methods(const RunConfig& cfg) {
  std::vector<WeightMethod> out;
  for (const auto& m : cfg.methods) {
    const auto parsed = parse_method(m);
    if (std::find(out.begin(), out.end(), parsed) == out.end()) out.push_back(parsed);
  }
  require(!out.empty(), "no metric method requested");
  return out;
}

inline std::vector<std::size_t> top_ns(const RunConfig& cfg,
                                       const std::vector<std::size_t>& fallback) {
  const auto& ns = cfg.top_ns.empty() ? fallback : cfg.top_ns;
  for (auto n : ns) require(n > 0, "--top-n values must be positive");
  return ns;
}

inline void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.output.empty() || cfg.output == "-") {
    out << text;
    out.flush();
  } else {
    write_file_atomic(cfg.output, text);
  }
}

}  // namespace detail

inline void cmd_stats(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  detail::require(cfg.inputs.size() == 1, "stats takes exactly one corpus path");
  const detail::Loader load(cfg);
  const auto freq = count_frequencies(load.corpus(cfg.inputs[0], 0));
  detail::emit(cfg, stats_tsv(freq, rank_by_frequency(freq)), out);
}

inline void cmd_termhood(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  detail::require(cfg.inputs.size() == 1, "termhood takes exactly one domain corpus path");
  detail::require(cfg.backgrounds.size() == 1, "termhood needs exactly one --background");
  const detail::Loader load(cfg);
  const auto domain = load.corpus(cfg.inputs[0], 0);
  const auto background = load.background(cfg.backgrounds[0], 0);
  detail::emit(cfg, termhood_tsv(termhood_table(domain, background)), out);
}

inline void cmd_compare(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  detail::require(cfg.inputs.size() == 2, "compare takes exactly two corpus paths");
  detail::require(cfg.backgrounds.size() <= 2, "at most two --background paths");
  detail::require(cfg.languages.size() <= 2, "at most two --lang tags");
  const auto methods = detail::methods(cfg);
  const auto ns = detail::top_ns(cfg, default_top_ns());
  const auto format = parse_format(cfg.format);

  RunConfig effective = cfg;
  if (!cfg.dict.empty() && (cfg.languages.size() < 2 || cfg.languages[0] == cfg.languages[1])) {
    // a dictionary implies two languages even when tags were not given
    effective.languages = {"source", "target"};
  }
  const bool bilingual = effective.languages.size() == 2 &&
                         effective.languages[0] != effective.languages[1];
  detail::require(!bilingual || !cfg.dict.empty(),
                  "corpora are in different languages; --dict is required");
  const bool need_termhood =
      std::find(methods.begin(), methods.end(), WeightMethod::termhood) != methods.end();
  detail::require(!need_termhood || !cfg.backgrounds.empty(),
                  "termhood method needs --background");
  detail::require(!need_termhood || !bilingual || cfg.backgrounds.size() == 2,
                  "bilingual termhood comparison needs two --background paths");

  const detail::Loader load(effective);
  const auto a = load.corpus(cfg.inputs[0], 0);
  const auto b = load.corpus(cfg.inputs[1], 1);
  std::optional<Corpus> bg_a, bg_b;
  if (!cfg.backgrounds.empty()) bg_a = load.background(cfg.backgrounds[0], 0);
  if (cfg.backgrounds.size() == 2) bg_b = load.background(cfg.backgrounds[1], 1);
  std::optional<BilingualDictionary> dict;
  if (!cfg.dict.empty()) dict = load_dictionary(cfg.dict, load.tokenizer);

  SweepInputs in{a, b, bg_a ? &*bg_a : nullptr, bg_b ? &*bg_b : nullptr,
                 dict ? &*dict : nullptr};
  auto report = comparability_sweep(in, methods, ns);
  report.metadata["tokenizer"] = cfg.tokenizer;
  report.metadata["mode"] = cfg.mode;
  std::string bgs;
  for (const auto& bg : {bg_a, bg_b}) {
    if (!bg) continue;
    if (!bgs.empty()) bgs += ',';
    bgs += bg->name;
  }
  report.metadata["backgrounds"] = bgs;
  if (!cfg.no_timestamp) report.metadata["timestamp"] = detail::utc_timestamp();
  detail::emit(cfg, report_text({report}, format), out);
}

inline void cmd_extract(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  detail::require(cfg.inputs.size() == 2, "extract takes a source and a target corpus path");
  detail::require(!cfg.dict.empty(), "extract needs --dict");
  detail::require(cfg.backgrounds.size() == 1 || cfg.backgrounds.size() == 2,
                  "extract needs one or two --background paths");
  detail::require(cfg.threshold >= 0.0 && cfg.threshold <= 1.0, "--threshold must be in [0, 1]");
  detail::require(cfg.window >= 1, "--window must be at least 1");
  detail::require(cfg.min_freq >= 1, "--min-freq must be at least 1");
  detail::require(cfg.top_k >= 1, "--top-k must be at least 1");
  detail::require(cfg.candidates >= 1, "--candidates must be at least 1");

  const detail::Loader load(cfg);
  const auto source = load.corpus(cfg.inputs[0], 0);
  const auto target = load.corpus(cfg.inputs[1], 1);
  const auto source_bg = load.background(cfg.backgrounds[0], 0);
  const auto target_bg =
      cfg.backgrounds.size() == 2 ? load.background(cfg.backgrounds[1], 1) : source_bg;
  const auto dict = load_dictionary(cfg.dict, load.tokenizer);
  detail::require(!dict.empty(), "dictionary '" + cfg.dict + "' is empty");

  ExtractionParams p;
  p.window = cfg.window;
  p.min_freq = cfg.min_freq;
  p.top_k = cfg.top_k;
  p.threshold = cfg.threshold;
  p.candidates_per_term = cfg.candidates;
  const auto pairs = extract_term_pairs(source, source_bg, target, target_bg, dict, p);
  if (pairs.empty()) err << R"({"type":"warning","message":"no term pairs extracted"})" << '\n';
  detail::emit(cfg, pairs_tsv(pairs), out);
}

inline void cmd_evaluate(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  detail::require(cfg.inputs.size() == 1, "evaluate takes exactly one pair file");
  detail::require(!cfg.gold.empty(), "evaluate needs --gold");
  detail::require(cfg.eval_n >= 1, "--eval-n must be at least 1");
  const auto format = parse_format(cfg.format);
  const auto pairs = load_pairs(cfg.inputs[0]);
  const auto gold = load_dictionary(cfg.gold, parse_tokenizer(cfg.tokenizer));
  detail::emit(cfg, eval_text(evaluate(pairs, gold, cfg.eval_n), format), out);
}

inline const std::vector<std::size_t>& demo_top_ns() {
  static const std::vector<std::size_t> ns{10, 20, 50, 100, 200};
  return ns;
}

/// Builds the synthetic parallel / comparable / non-comparable triple and
/// sweeps each pair against the shared background.
inline std::vector<ComparabilityReport> run_demo(std::uint64_t seed,
                                                 const std::vector<WeightMethod>& methods,
                                                 const std::vector<std::size_t>& ns) {
  synthetic::TripleParams params;
  params.seed = seed;
  const auto triple = synthetic::make_triple(params);
  std::vector<ComparabilityReport> reports;
  for (const auto* pair : {&triple.parallel, &triple.comparable, &triple.non_comparable}) {
    reports.push_back(
        comparability_sweep({pair->a, pair->b, &triple.background}, methods, ns));
  }
  return reports;
}

inline void cmd_demo(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  detail::require(cfg.inputs.empty(), "demo takes no positional arguments");
  const auto methods = detail::methods(cfg);
  const auto ns = detail::top_ns(cfg, demo_top_ns());
  const auto format = parse_format(cfg.format);
  auto reports = run_demo(cfg.seed, methods, ns);
  auto& meta = reports.front().metadata;
  meta["generator"] = "zipf-triple";
  meta["seed"] = std::to_string(cfg.seed);
  meta["backgrounds"] = "background";
  if (!cfg.no_timestamp) meta["timestamp"] = detail::utc_timestamp();
  detail::emit(cfg, report_text(reports, format), out);
}

/// Serializes every setting as key=value lines readable by `--config`.
inline std::string config_text(const RunConfig& cfg, const std::string& command) {
  const auto q = [](const std::string& s) { return nlohmann::json(s).dump(); };
  const auto list = [&](const auto& xs) {
    std::string out = "[";
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (i) out += ", ";
      if constexpr (std::is_same_v<std::decay_t<decltype(xs[i])>, std::string>) {
        out += q(xs[i]);
      } else {
        out += std::to_string(xs[i]);
      }
    }
    return out + "]";
  };
  std::string out;
  const auto put = [&](const std::string& key, const std::string& value) {
    out += key + '=' + value + '\n';
  };
  put("tokenizer", q(cfg.tokenizer));
  put("mode", q(cfg.mode));
  put("background-mode", q(cfg.background_mode));
  put("records", cfg.records_input ? "true" : "false");
  if (!cfg.stopwords.empty()) put("stopwords", q(cfg.stopwords));
  if (!cfg.dict.empty()) put("dict", q(cfg.dict));
  if (!cfg.gold.empty()) put("gold", q(cfg.gold));
  if (!cfg.backgrounds.empty()) put("background", list(cfg.backgrounds));
  if (!cfg.languages.empty()) put("lang", list(cfg.languages));
  put("method", list(cfg.methods));
  if (!cfg.top_ns.empty()) put("top-n", list(cfg.top_ns));
  put("window", std::to_string(cfg.window));
  put("min-freq", std::to_string(cfg.min_freq));
  put("top-k", std::to_string(cfg.top_k));
  put("threshold", format_number(cfg.threshold));
  put("candidates", std::to_string(cfg.candidates));
  put("eval-n", std::to_string(cfg.eval_n));
  if (!cfg.output.empty()) put("output", q(cfg.output));
  put("format", q(cfg.format));
  put("no-timestamp", cfg.no_timestamp ? "true" : "false");
  put("seed", std::to_string(cfg.seed));
  if (!cfg.inputs.empty()) put(command + ".inputs", list(cfg.inputs));
  return out;
}

/// Runs one subcommand, mapping failures to exit codes.
inline int run(const std::string& command, const RunConfig& cfg, std::ostream& out,
               std::ostream& err) {
  try {
    if (command == "stats") cmd_stats(cfg, out, err);
    else if (command == "termhood") cmd_termhood(cfg, out, err);
    else if (command == "compare") cmd_compare(cfg, out, err);
    else if (command == "extract") cmd_extract(cfg, out, err);
    else if (command == "evaluate") cmd_evaluate(cfg, out, err);
    else if (command == "demo") cmd_demo(cfg, out, err);
    else throw Error(ErrorKind::config, "unknown command '" + command + "'");
  } catch (const Error& e) {
    err << "termcomp " << command << ": " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::filesystem::filesystem_error& e) {
    err << "termcomp " << command << ": " << e.what() << '\n';
    return io_error;
  }
  return ok;
}

}  // namespace termcomp::cli
