// termcomp: corpus comparability and bilingual term extraction from the
// command line.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"

using termcomp::cli::RunConfig;

int main(int argc, char** argv) {
  CLI::App app{"termcomp - termhood-based corpus comparability toolkit"};
  app.require_subcommand(1);
  app.set_config("--config", "", "key=value configuration file; flags override its values");
  std::string save_config;
  app.add_option("--save-config", save_config,
                 "write the fully resolved configuration to this file");

  RunConfig cfg;
  app.add_option("--tokenizer", cfg.tokenizer, "whitespace | character-unigram | passthrough")
      ->capture_default_str();
  app.add_option("--mode", cfg.mode, "full-text | keyword-list")->capture_default_str();
  app.add_option("--background-mode", cfg.background_mode, "mode for background corpora")
      ->capture_default_str();
  app.add_flag("--records", cfg.records_input, "plain files hold one 'id<TAB>text' document per line");
  app.add_option("--stopwords", cfg.stopwords, "stopword file, one word per line");
  app.add_option("--dict", cfg.dict, "bilingual dictionary TSV (source<TAB>target)");
  app.add_option("--gold", cfg.gold, "gold translation dictionary TSV");
  app.add_option("--background", cfg.backgrounds, "background corpus (one shared or one per side)");
  app.add_option("--lang", cfg.languages, "language tag per corpus side");
  app.add_option("--method", cfg.methods, "frequency and/or termhood")->capture_default_str();
  app.add_option("--top-n", cfg.top_ns, "Top-N sizes (default 100 200 500 1000 2000 5000)");
  app.add_option("--window", cfg.window, "context window radius")->capture_default_str();
  app.add_option("--min-freq", cfg.min_freq, "minimum candidate term frequency")
      ->capture_default_str();
  app.add_option("--top-k", cfg.top_k, "candidate terms kept per side")->capture_default_str();
  app.add_option("--threshold", cfg.threshold, "similarity must exceed this to emit a pair")
      ->capture_default_str();
  app.add_option("--candidates", cfg.candidates, "target candidates kept per source term")
      ->capture_default_str();
  app.add_option("--eval-n", cfg.eval_n, "N for Top@N accuracy")->capture_default_str();
  app.add_option("--output,-o", cfg.output, "output file (default stdout)");
  app.add_option("--format", cfg.format, "tsv | records")->capture_default_str();
  app.add_flag("--no-timestamp", cfg.no_timestamp, "omit the timestamp from reports");
  app.add_option("--seed", cfg.seed, "demo generator seed")->capture_default_str();

  struct Sub {
    const char* name;
    const char* help;
    const char* inputs_help;
  };
  const Sub subs[] = {
      {"stats", "word counts and frequency ranks of a corpus", "corpus"},
      {"termhood", "termhood of domain words against --background", "domain corpus"},
      {"compare", "comparability sweep of two corpora", "corpus A and corpus B"},
      {"extract", "bilingual term pairs by context-vector matching", "source and target corpus"},
      {"evaluate", "Top@N, Dice and similarity of an extracted pair file", "pair TSV"},
      {"demo", "synthetic parallel/comparable/non-comparable sweep", ""},
  };
  for (const auto& s : subs) {
    auto* sub = app.add_subcommand(s.name, s.help);
    sub->fallthrough();
    if (std::string(s.inputs_help).empty()) continue;
    sub->add_option("inputs", cfg.inputs, s.inputs_help)->required();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : termcomp::cli::config_error;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  if (!save_config.empty()) {
    try {
      termcomp::write_file_atomic(save_config, termcomp::cli::config_text(cfg, command));
    } catch (const termcomp::Error& e) {
      std::cerr << "termcomp: " << e.what() << '\n';
      return termcomp::cli::io_error;
    }
  }

  return termcomp::cli::run(command, cfg, std::cout, std::cerr);
}
