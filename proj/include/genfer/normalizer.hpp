#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace genfer {

enum class TokenKind { Word, Hashtag, Mention, Url, Emoticon, Number, Punct };

struct Token {
  std::string surface;
  TokenKind kind = TokenKind::Word;

  bool operator==(const Token&) const = default;
};

const char* token_kind_name(TokenKind kind);

// Emoticon inventory used by the tokenizer. Entries are matched greedily
// (longest first) at each scan position.
class EmoticonTable {
 public:
  EmoticonTable() = default;
  explicit EmoticonTable(std::vector<std::string> entries);

  static EmoticonTable builtin();
  static EmoticonTable load(const std::string& path);

  bool contains(std::string_view s) const;
  // Longest entry matching a prefix of s, or 0 if none matches.
  std::size_t match_prefix(std::string_view s) const;
  const std::vector<std::string>& entries() const { return entries_; }

 private:
  std::vector<std::string> entries_;         // unique, longest first
  std::unordered_set<std::string> lookup_;
};

struct SpellDictionaries {
  // word -> frequency (0 when the word list carries no counts)
  std::unordered_map<std::string, std::uint64_t> english_words;
  // lowercase shorthand -> replacement phrase
  std::unordered_map<std::string, std::string> shorthand;
  // metaphone code -> all purely alphabetic dictionary words with that code
  std::unordered_map<std::string, std::vector<std::string>> metaphone_index;
  EmoticonTable emoticons = EmoticonTable::builtin();

  static SpellDictionaries load(const std::string& wordlist_path,
                                const std::string& shorthand_path,
                                const std::string& emoticons_path);

  // Rebuilds the metaphone grouping from english_words.
  void rebuild_index();
  // True iff metaphone_index equals the grouping of english_words.
  bool index_consistent() const;
};

std::vector<Token> tokenize(std::string_view text, const EmoticonTable& emoticons);
std::vector<Token> tokenize(std::string_view text);

// '#'-prefixed tokens found by the tokenizer, '#' stripped.
std::vector<std::string> extract_hashtags(std::string_view text);

// Original Metaphone code (Philips). Input must be non-empty and purely
// alphabetic (ASCII) after lowercasing; throws std::invalid_argument otherwise.
std::string metaphone(std::string_view word);

// Levenshtein distance over code points, unit costs.
int edit_distance(std::string_view a, std::string_view b);

// "#BestDayEver" -> "Best Day Ever". Input must start with '#'.
std::string split_camelcase(std::string_view hashtag);

// Phonetic-bucket candidates re-ranked by edit distance; see spell.cpp notes.
std::string spell_correct(std::string_view word, const SpellDictionaries& dicts,
                          int max_edit = 2);

struct NormalizeStats {
  std::size_t corrected = 0;
  std::size_t expanded = 0;
  std::size_t hashtags_split = 0;
};

// Full cleaning pipeline, token form: tokenize, expand shorthand, split
// camel-case hashtags, spell-correct Word tokens.
std::vector<Token> normalize_tokens(std::string_view text,
                                    const SpellDictionaries& dicts,
                                    NormalizeStats* stats = nullptr);

// Same pipeline, surfaces rejoined with single spaces. Idempotent.
std::string normalize_tweet(std::string_view text, const SpellDictionaries& dicts,
                            NormalizeStats* stats = nullptr);

}  // namespace genfer
