#include "genfer/normalizer.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "genfer/utf8.hpp"

namespace genfer {

const char* token_kind_name(TokenKind kind) {
  switch (kind) {
    case TokenKind::Word: return "word";
    case TokenKind::Hashtag: return "hashtag";
    case TokenKind::Mention: return "mention";
    case TokenKind::Url: return "url";
    case TokenKind::Emoticon: return "emoticon";
    case TokenKind::Number: return "number";
    case TokenKind::Punct: return "punct";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// EmoticonTable

EmoticonTable::EmoticonTable(std::vector<std::string> entries) {
  std::sort(entries.begin(), entries.end());
  entries.erase(std::unique(entries.begin(), entries.end()), entries.end());
  std::stable_sort(entries.begin(), entries.end(),
                   [](const std::string& a, const std::string& b) {
                     return a.size() > b.size();
                   });
  for (auto& e : entries) {
    if (e.empty()) continue;
    lookup_.insert(e);
    entries_.push_back(e);
  }
}

EmoticonTable EmoticonTable::builtin() {
  return EmoticonTable({":-)", ":)", ":-(", ":(", ";-)", ";)", ":-D", ":D",
                        ":-P", ":P", ":-/", ":/", ":-|", ":'(", ":o", ":O",
                        "<3", "</3", "^_^", "-_-", "o_O", "xD", "XD", "=)",
                        "=(", ":3"});
}

EmoticonTable EmoticonTable::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open emoticon file: " + path);
  std::vector<std::string> entries;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) entries.push_back(line);
  }
  return EmoticonTable(std::move(entries));
}

bool EmoticonTable::contains(std::string_view s) const {
  return lookup_.count(std::string(s)) > 0;
}

std::size_t EmoticonTable::match_prefix(std::string_view s) const {
  for (const auto& e : entries_) {
    if (e.size() <= s.size() && s.substr(0, e.size()) == e) return e.size();
  }
  return 0;
}

// ---------------------------------------------------------------------------
// Tokenizer

namespace {

bool is_ascii_alnum(char c) { return is_ascii_alpha(c) || is_ascii_digit(c); }

bool is_ascii_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

// Letters of any script count as word bytes; so do digits and apostrophes.
bool is_word_byte(char c) {
  return is_ascii_alnum(c) || c == '\'' ||
         static_cast<unsigned char>(c) >= 0x80;
}

bool is_tag_byte(char c) {
  return is_ascii_alnum(c) || c == '_' ||
         static_cast<unsigned char>(c) >= 0x80;
}

bool has_letter(std::string_view s) {
  for (char c : s)
    if (is_ascii_alpha(c) || static_cast<unsigned char>(c) >= 0x80) return true;
  return false;
}

bool ci_starts_with(std::string_view s, std::string_view prefix) {
  if (s.size() < prefix.size()) return false;
  for (std::size_t i = 0; i < prefix.size(); ++i)
    if (ascii_lower(s[i]) != prefix[i]) return false;
  return true;
}

// An emoticon with an alphanumeric edge only matches at a word boundary,
// so "xD" is an emoticon on its own but stays inside a word like "taxD".
std::size_t boundary_emoticon_match(std::string_view text, std::size_t pos,
                                    const EmoticonTable& emoticons) {
  std::size_t len = emoticons.match_prefix(text.substr(pos));
  if (len == 0) return 0;
  const std::string_view m = text.substr(pos, len);
  if (is_ascii_alnum(m.front()) && pos > 0 && is_ascii_alnum(text[pos - 1]))
    return 0;
  if (is_ascii_alnum(m.back()) && pos + len < text.size() &&
      is_ascii_alnum(text[pos + len]))
    return 0;
  return len;
}

}  // namespace

std::vector<Token> tokenize(std::string_view text, const EmoticonTable& emoticons) {
  std::vector<Token> out;
  std::size_t i = 0;
  const std::size_t n = text.size();

  while (i < n) {
    const char c = text[i];
    if (is_ascii_space(c)) {
      ++i;
      continue;
    }

    if (std::size_t len = boundary_emoticon_match(text, i, emoticons)) {
      out.push_back({std::string(text.substr(i, len)), TokenKind::Emoticon});
      i += len;
      continue;
    }

    if (ci_starts_with(text.substr(i), "http://") ||
        ci_starts_with(text.substr(i), "https://") ||
        ci_starts_with(text.substr(i), "www.")) {
      std::size_t j = i;
      while (j < n && !is_ascii_space(text[j])) ++j;
      out.push_back({std::string(text.substr(i, j - i)), TokenKind::Url});
      i = j;
      continue;
    }

    if (c == '#' || c == '@') {
      std::size_t j = i + 1;
      while (j < n && is_tag_byte(text[j])) ++j;
      if (j > i + 1) {
        out.push_back({std::string(text.substr(i, j - i)),
                       c == '#' ? TokenKind::Hashtag : TokenKind::Mention});
        i = j;
        continue;
      }
      out.push_back({std::string(1, c), TokenKind::Punct});
      ++i;
      continue;
    }

    if (is_word_byte(c)) {
      std::size_t j = i;
      while (j < n && is_word_byte(text[j])) {
        if (j > i && boundary_emoticon_match(text, j, emoticons)) break;
        ++j;
      }
      std::string_view run = text.substr(i, j - i);
      // Peel boundary apostrophes: they are quotes, not word content.
      std::size_t lead = 0;
      while (lead < run.size() && run[lead] == '\'') ++lead;
      for (std::size_t k = 0; k < lead; ++k)
        out.push_back({"'", TokenKind::Punct});
      run.remove_prefix(lead);
      std::size_t trail = 0;
      while (trail < run.size() && run[run.size() - 1 - trail] == '\'') ++trail;
      std::string_view core = run.substr(0, run.size() - trail);
      if (!core.empty())
        out.push_back({std::string(core),
                       has_letter(core) ? TokenKind::Word : TokenKind::Number});
      for (std::size_t k = 0; k < trail; ++k)
        out.push_back({"'", TokenKind::Punct});
      i = j;
      continue;
    }

    out.push_back({std::string(1, c), TokenKind::Punct});
    ++i;
  }

  return out;
}

std::vector<Token> tokenize(std::string_view text) {
  static const EmoticonTable table = EmoticonTable::builtin();
  return tokenize(text, table);
}

std::vector<std::string> extract_hashtags(std::string_view text) {
  std::vector<std::string> tags;
  for (const auto& t : tokenize(text)) {
    if (t.kind == TokenKind::Hashtag) tags.push_back(t.surface.substr(1));
  }
  return tags;
}

// ---------------------------------------------------------------------------
// Edit distance (Levenshtein over code points)

int edit_distance(std::string_view a, std::string_view b) {
  const std::vector<char32_t> ua = utf8_decode(a);
  const std::vector<char32_t> ub = utf8_decode(b);
  const std::size_t n = ua.size(), m = ub.size();
  if (n == 0) return static_cast<int>(m);
  if (m == 0) return static_cast<int>(n);

  std::vector<int> prev(m + 1), cur(m + 1);
  for (std::size_t j = 0; j <= m; ++j) prev[j] = static_cast<int>(j);
  for (std::size_t i = 1; i <= n; ++i) {
    cur[0] = static_cast<int>(i);
    for (std::size_t j = 1; j <= m; ++j) {
      const int sub = prev[j - 1] + (ua[i - 1] == ub[j - 1] ? 0 : 1);
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
    }
    std::swap(prev, cur);
  }
  return prev[m];
}

// ---------------------------------------------------------------------------
// Hashtag camel-case splitting

std::string split_camelcase(std::string_view hashtag) {
  if (hashtag.empty() || hashtag.front() != '#')
    throw std::invalid_argument("split_camelcase: input must start with '#'");
  const std::string_view body = hashtag.substr(1);

  std::string out;
  const auto is_upper = [](char c) { return c >= 'A' && c <= 'Z'; };
  const auto is_lower = [](char c) { return c >= 'a' && c <= 'z'; };
  for (std::size_t i = 0; i < body.size(); ++i) {
    const char c = body[i];
    if (c == '_') {
      if (!out.empty() && out.back() != ' ') out += ' ';
      continue;
    }
    if (is_upper(c) && i > 0) {
      const char prev = body[i - 1];
      const bool after_lower = is_lower(prev) || is_ascii_digit(prev);
      const bool run_end = is_upper(prev) && i + 1 < body.size() &&
                           is_lower(body[i + 1]);
      if ((after_lower || run_end) && !out.empty() && out.back() != ' ')
        out += ' ';
    }
    out += c;
  }
  while (!out.empty() && out.back() == ' ') out.pop_back();
  return out;
}

// ---------------------------------------------------------------------------
// Spell correction

std::string spell_correct(std::string_view word, const SpellDictionaries& dicts,
                          int max_edit) {
  if (max_edit < 1)
    throw std::invalid_argument("spell_correct: max_edit must be >= 1");
  if (utf8_length(word) <= 3) return std::string(word);

  const std::string lower = ascii_lower(word);
  if (dicts.english_words.count(lower)) return std::string(word);
  if (!is_all_ascii_alpha(lower)) return std::string(word);

  const auto bucket = dicts.metaphone_index.find(metaphone(lower));
  if (bucket == dicts.metaphone_index.end()) return std::string(word);

  const std::string* best = nullptr;
  int best_dist = max_edit + 1;
  std::uint64_t best_freq = 0;
  for (const std::string& cand : bucket->second) {
    // Never correct into a shorthand key: the result must be stable under a
    // second normalization pass.
    if (dicts.shorthand.count(cand)) continue;
    const int d = edit_distance(lower, cand);
    if (d > max_edit) continue;
    const std::uint64_t freq = dicts.english_words.at(cand);
    if (d < best_dist || (d == best_dist && freq > best_freq) ||
        (d == best_dist && freq == best_freq && best && cand < *best)) {
      best = &cand;
      best_dist = d;
      best_freq = freq;
    }
  }
  return best ? *best : std::string(word);
}

// ---------------------------------------------------------------------------
// Dictionaries

void SpellDictionaries::rebuild_index() {
  metaphone_index.clear();
  for (const auto& [word, freq] : english_words) {
    (void)freq;
    if (!is_all_ascii_alpha(word)) continue;
    metaphone_index[metaphone(word)].push_back(word);
  }
  for (auto& [code, words] : metaphone_index) {
    (void)code;
    std::sort(words.begin(), words.end());
  }
}

bool SpellDictionaries::index_consistent() const {
  SpellDictionaries tmp;
  tmp.english_words = english_words;
  tmp.rebuild_index();
  return tmp.metaphone_index == metaphone_index;
}

SpellDictionaries SpellDictionaries::load(const std::string& wordlist_path,
                                          const std::string& shorthand_path,
                                          const std::string& emoticons_path) {
  SpellDictionaries d;

  std::ifstream words(wordlist_path);
  if (!words) throw std::runtime_error("cannot open word list: " + wordlist_path);
  std::string line;
  while (std::getline(words, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream ss(line);
    std::string word;
    if (!(ss >> word)) continue;
    std::uint64_t freq = 0;
    ss >> freq;
    word = ascii_lower(word);
    auto [it, inserted] = d.english_words.emplace(word, freq);
    if (!inserted) it->second = std::max(it->second, freq);
  }
  if (d.english_words.empty())
    throw std::runtime_error("word list is empty: " + wordlist_path);

  std::ifstream sh(shorthand_path);
  if (!sh) throw std::runtime_error("cannot open shorthand file: " + shorthand_path);
  std::size_t lineno = 0;
  while (std::getline(sh, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::size_t tab = line.find('\t');
    if (tab == std::string::npos || tab == 0 || tab + 1 >= line.size())
      throw std::runtime_error("malformed shorthand line " +
                               std::to_string(lineno) + " in " + shorthand_path);
    const std::string key = ascii_lower(std::string_view(line).substr(0, tab));
    const std::string expansion = line.substr(tab + 1);
    if (!d.shorthand.emplace(key, expansion).second)
      throw std::runtime_error("duplicate shorthand '" + key + "' at line " +
                               std::to_string(lineno) + " in " + shorthand_path);
  }

  d.emoticons = EmoticonTable::load(emoticons_path);
  d.rebuild_index();
  return d;
}

// ---------------------------------------------------------------------------
// Normalization pipeline

namespace {

void append_retokenized(std::string_view phrase, const SpellDictionaries& dicts,
                        std::vector<Token>& out) {
  for (auto& t : tokenize(phrase, dicts.emoticons)) out.push_back(std::move(t));
}

}  // namespace

std::vector<Token> normalize_tokens(std::string_view text,
                                    const SpellDictionaries& dicts,
                                    NormalizeStats* stats) {
  NormalizeStats local;
  NormalizeStats& st = stats ? *stats : local;

  // Stage 1: tokenize, expand shorthand (whole token, case-insensitive).
  std::vector<Token> expanded;
  for (auto& t : tokenize(text, dicts.emoticons)) {
    if (t.kind == TokenKind::Word) {
      auto it = dicts.shorthand.find(ascii_lower(t.surface));
      if (it != dicts.shorthand.end()) {
        ++st.expanded;
        append_retokenized(it->second, dicts, expanded);
        continue;
      }
    }
    expanded.push_back(std::move(t));
  }

  // Stage 2: split camel-cased hashtags into words. Words produced here get
  // the same shorthand treatment so a second pass has nothing left to do.
  std::vector<Token> split;
  for (auto& t : expanded) {
    if (t.kind != TokenKind::Hashtag) {
      split.push_back(std::move(t));
      continue;
    }
    const std::string cleaned = split_camelcase(t.surface);
    std::size_t words = 0;
    std::size_t start = 0;
    while (start < cleaned.size()) {
      std::size_t end = cleaned.find(' ', start);
      if (end == std::string::npos) end = cleaned.size();
      if (end > start) {
        const std::string piece = cleaned.substr(start, end - start);
        ++words;
        auto it = dicts.shorthand.find(ascii_lower(piece));
        if (it != dicts.shorthand.end()) {
          ++st.expanded;
          append_retokenized(it->second, dicts, split);
        } else {
          split.push_back({piece, TokenKind::Word});
        }
      }
      start = end + 1;
    }
    if (words > 1) ++st.hashtags_split;
  }

  // Stage 3: spell-correct Word tokens.
  for (auto& t : split) {
    if (t.kind != TokenKind::Word) continue;
    std::string corrected = spell_correct(t.surface, dicts);
    if (corrected != t.surface) {
      ++st.corrected;
      t.surface = std::move(corrected);
    }
  }

  return split;
}

std::string normalize_tweet(std::string_view text, const SpellDictionaries& dicts,
                            NormalizeStats* stats) {
  std::string out;
  for (const auto& t : normalize_tokens(text, dicts, stats)) {
    if (!out.empty()) out += ' ';
    out += t.surface;
  }
  return out;
}

}  // namespace genfer
