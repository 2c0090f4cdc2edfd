#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "genfer/normalizer.hpp"

namespace genfer {

// Category dictionary: words (or trailing-'*' stems) mapped to one or more
// named categories. Category order in the file is the feature order.
struct Lexicon {
  std::vector<std::string> categories;
  std::unordered_map<std::string, std::vector<int>> literals;  // word -> cats
  std::unordered_map<std::string, std::vector<int>> stems;     // prefix -> cats
  std::size_t max_stem_len = 0;
};

// File layout: optional leading '%', then "index<TAB>category" header lines,
// a '%' separator, then "word_or_stem<TAB>index[,index...]" entry lines.
Lexicon load_lexicon(const std::string& path);

// Union of the literal match and every matching stem; sorted, deduplicated.
// The word must already be lowercase.
std::vector<int> lookup(std::string_view word, const Lexicon& lex);

// Per-category hit counts over a token list; a token in k categories
// increments k counters.
std::vector<std::int64_t> category_counts(const std::vector<Token>& tokens,
                                          const Lexicon& lex);

}  // namespace genfer
