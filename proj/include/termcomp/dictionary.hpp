#pragma once

#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <string_view>

#include "termcomp/corpus.hpp"
#include "termcomp/error.hpp"
#include "termcomp/text.hpp"

namespace termcomp {

/// Source word -> non-empty set of target words.
class BilingualDictionary {
 public:
  using TargetSet = std::set<std::string, std::less<>>;

  void add(std::string source, std::string target) {
    entries_[std::move(source)].insert(std::move(target));
  }

  const TargetSet* lookup(std::string_view source) const {
    auto it = entries_.find(source);
    return it == entries_.end() ? nullptr : &it->second;
  }

  bool contains(std::string_view source, std::string_view target) const {
    const auto* t = lookup(source);
    return t != nullptr && t->contains(target);
  }

  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  const auto& entries() const { return entries_; }

 private:
  std::map<std::string, TargetSet, std::less<>> entries_;
};

/// Reads `source<TAB>target` lines; repeated sources accumulate translations.
/// Both sides get the same normalization as corpus tokens.
inline BilingualDictionary load_dictionary(const std::filesystem::path& path,
                                           TokenizerId tokenizer = TokenizerId::whitespace) {
  BilingualDictionary dict;
  const std::string data = detail::read_file(path);
  std::size_t line_no = 0;
  for (auto line : detail::split_lines(data)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto tab = line.find('\t');
    auto src = tab == std::string_view::npos ? std::string_view{} : trim(line.substr(0, tab));
    auto tgt = tab == std::string_view::npos ? std::string_view{} : trim(line.substr(tab + 1));
    if (src.empty() || tgt.empty()) {
      throw Error(ErrorKind::malformed, path.string() + ":" + std::to_string(line_no) +
                                            ": expected 'source<TAB>target'");
    }
    dict.add(normalize_token(src, tokenizer), normalize_token(tgt, tokenizer));
  }
  return dict;
}

}  // namespace termcomp
