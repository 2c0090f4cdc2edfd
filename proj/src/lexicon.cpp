#include "genfer/lexicon.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>
#include <unordered_set>

#include "genfer/utf8.hpp"

namespace genfer {

namespace {

std::vector<int> parse_indices(const std::string& field,
                               const std::unordered_map<int, int>& index_map,
                               std::size_t lineno) {
  std::vector<int> cats;
  std::size_t start = 0;
  while (start <= field.size()) {
    std::size_t end = field.find(',', start);
    if (end == std::string::npos) end = field.size();
    const std::string part = field.substr(start, end - start);
    if (part.empty())
      throw std::runtime_error("empty category index at lexicon line " +
                               std::to_string(lineno));
    int idx;
    try {
      idx = std::stoi(part);
    } catch (const std::exception&) {
      throw std::runtime_error("bad category index '" + part +
                               "' at lexicon line " + std::to_string(lineno));
    }
    auto it = index_map.find(idx);
    if (it == index_map.end())
      throw std::runtime_error("unknown category index " + part +
                               " at lexicon line " + std::to_string(lineno));
    cats.push_back(it->second);
    start = end + 1;
    if (start > field.size()) break;
  }
  std::sort(cats.begin(), cats.end());
  cats.erase(std::unique(cats.begin(), cats.end()), cats.end());
  return cats;
}

}  // namespace

Lexicon load_lexicon(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open lexicon file: " + path);

  Lexicon lex;
  std::unordered_map<int, int> index_map;  // file index -> position
  std::unordered_set<std::string> seen_names;

  std::string line;
  std::size_t lineno = 0;
  bool in_header = true;
  bool leading_percent_allowed = true;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;

    if (line == "%") {
      if (leading_percent_allowed && lex.categories.empty()) {
        leading_percent_allowed = false;
        continue;
      }
      if (!in_header)
        throw std::runtime_error("unexpected '%' at lexicon line " +
                                 std::to_string(lineno));
      in_header = false;
      continue;
    }
    leading_percent_allowed = false;

    const std::size_t tab = line.find('\t');
    if (tab == std::string::npos || tab == 0 || tab + 1 >= line.size())
      throw std::runtime_error("malformed lexicon line " + std::to_string(lineno));
    const std::string left = line.substr(0, tab);
    const std::string right = line.substr(tab + 1);

    if (in_header) {
      int idx;
      try {
        idx = std::stoi(left);
      } catch (const std::exception&) {
        throw std::runtime_error("bad category index at lexicon line " +
                                 std::to_string(lineno));
      }
      if (!seen_names.insert(right).second)
        throw std::runtime_error("duplicate category name '" + right +
                                 "' at lexicon line " + std::to_string(lineno));
      if (!index_map.emplace(idx, static_cast<int>(lex.categories.size())).second)
        throw std::runtime_error("duplicate category index at lexicon line " +
                                 std::to_string(lineno));
      lex.categories.push_back(right);
      continue;
    }

    std::string key = ascii_lower(left);
    const bool is_stem = !key.empty() && key.back() == '*';
    if (is_stem) key.pop_back();
    if (key.empty())
      throw std::runtime_error("empty entry at lexicon line " +
                               std::to_string(lineno));
    if (key.find('*') != std::string::npos)
      throw std::runtime_error("malformed stem (internal '*') at lexicon line " +
                               std::to_string(lineno));

    std::vector<int> cats = parse_indices(right, index_map, lineno);
    auto& table = is_stem ? lex.stems : lex.literals;
    if (!table.emplace(key, std::move(cats)).second)
      throw std::runtime_error("duplicate lexicon entry '" + left +
                               "' at line " + std::to_string(lineno));
    if ((is_stem ? lex.literals : lex.stems).count(key))
      throw std::runtime_error("entry '" + key +
                               "' is both a literal and a stem (line " +
                               std::to_string(lineno) + ")");
    if (is_stem) lex.max_stem_len = std::max(lex.max_stem_len, key.size());
  }

  if (lex.categories.empty())
    throw std::runtime_error("no categories in lexicon file: " + path);
  if (in_header)
    throw std::runtime_error("lexicon file has no '%' separator: " + path);
  return lex;
}

std::vector<int> lookup(std::string_view word, const Lexicon& lex) {
  std::vector<int> out;
  const std::string w(word);
  if (auto it = lex.literals.find(w); it != lex.literals.end())
    out = it->second;
  // Every prefix can be a stem; union semantics, no shadowing.
  const std::size_t limit = std::min(w.size(), lex.max_stem_len);
  for (std::size_t len = 1; len <= limit; ++len) {
    auto it = lex.stems.find(w.substr(0, len));
    if (it != lex.stems.end())
      out.insert(out.end(), it->second.begin(), it->second.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::int64_t> category_counts(const std::vector<Token>& tokens,
                                          const Lexicon& lex) {
  std::vector<std::int64_t> counts(lex.categories.size(), 0);
  for (const auto& t : tokens) {
    for (int cat : lookup(ascii_lower(t.surface), lex)) ++counts[cat];
  }
  return counts;
}

}  // namespace genfer
