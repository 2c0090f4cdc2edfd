#include "genfer/normalizer.hpp"

#include <stdexcept>

#include "genfer/utf8.hpp"

namespace genfer {
namespace {

// Lawrence Philips' original Metaphone, ported from the widely used
// reference implementation (the PHP / natural / words-metaphone lineage).
// Output alphabet: B F H J K L M N P R S T W Y X('sh') 0('th') and vowels
// only in initial position.

bool is_vowel(char c) {
  return c == 'A' || c == 'E' || c == 'I' || c == 'O' || c == 'U';
}

// E, I, Y soften a preceding C or G.
bool is_soft(char c) { return c == 'E' || c == 'I' || c == 'Y'; }

// After these, an H is part of a digraph and stays silent.
bool is_digraph_h(char c) {
  return c == 'C' || c == 'G' || c == 'P' || c == 'S' || c == 'T';
}

// B, D, H before -GH- keep it from becoming F.
bool blocks_gh_to_f(char c) { return c == 'B' || c == 'D' || c == 'H'; }

std::string metaphone_upper(const std::string& w) {
  const auto at = [&](std::ptrdiff_t i) -> char {
    return (i >= 0 && i < static_cast<std::ptrdiff_t>(w.size())) ? w[i] : '\0';
  };

  std::string code;
  std::ptrdiff_t i = 0;

  // Initial-letter exceptions.
  switch (at(0)) {
    case 'A':
      if (at(1) == 'E') {
        code += 'E';
        i += 2;
      } else {
        code += 'A';
        ++i;
      }
      break;
    case 'G':
    case 'K':
    case 'P':
      if (at(1) == 'N') {
        code += 'N';
        i += 2;
      }
      break;
    case 'W':
      if (at(1) == 'R') {
        code += 'R';
        i += 2;
      } else if (at(1) == 'H') {
        code += 'W';
        i += 2;
      } else if (is_vowel(at(1))) {
        code += 'W';
        i += 2;
      }
      break;
    case 'X':
      code += 'S';
      ++i;
      break;
    case 'E':
    case 'I':
    case 'O':
    case 'U':
      code += at(0);
      ++i;
      break;
    default:
      break;
  }

  while (at(i) != '\0') {
    std::ptrdiff_t skip = 1;
    const char c = at(i);
    const char prev = at(i - 1);
    const char next = at(i + 1);

    // Collapse doubled letters except C.
    if (c == prev && c != 'C') {
      ++i;
      continue;
    }

    switch (c) {
      case 'B':
        if (prev != 'M') code += 'B';
        break;
      case 'C':
        if (is_soft(next)) {
          if (next == 'I' && at(i + 2) == 'A') {
            code += 'X';
          } else if (prev != 'S') {
            code += 'S';
          }
        } else if (next == 'H') {
          code += 'X';
          ++skip;
        } else {
          code += 'K';
        }
        break;
      case 'D':
        if (next == 'G' && is_soft(at(i + 2))) {
          code += 'J';
          ++skip;
        } else {
          code += 'T';
        }
        break;
      case 'G':
        if (next == 'H') {
          if (!(blocks_gh_to_f(at(i - 3)) || at(i - 4) == 'H')) {
            code += 'F';
            ++skip;
          }
        } else if (next == 'N') {
          // Silent in final -GN and in -GNED.
          if (!(at(i + 2) == '\0' || (at(i + 2) == 'E' && at(i + 3) == 'D')))
            code += 'K';
        } else if (is_soft(next) && prev != 'G') {
          code += 'J';
        } else {
          code += 'K';
        }
        break;
      case 'H':
        if (is_vowel(next) && !is_digraph_h(prev)) code += 'H';
        break;
      case 'K':
        if (prev != 'C') code += 'K';
        break;
      case 'P':
        code += (next == 'H') ? 'F' : 'P';
        break;
      case 'Q':
        code += 'K';
        break;
      case 'S':
        if (next == 'I' && (at(i + 2) == 'O' || at(i + 2) == 'A')) {
          code += 'X';
        } else if (next == 'H') {
          code += 'X';
          ++skip;
        } else {
          code += 'S';
        }
        break;
      case 'T':
        if (next == 'I' && (at(i + 2) == 'O' || at(i + 2) == 'A')) {
          code += 'X';
        } else if (next == 'H') {
          code += '0';
          ++skip;
        } else if (!(next == 'C' && at(i + 2) == 'H')) {
          code += 'T';
        }
        break;
      case 'V':
        code += 'F';
        break;
      case 'W':
        if (is_vowel(next)) code += 'W';
        break;
      case 'X':
        code += "KS";
        break;
      case 'Y':
        if (is_vowel(next)) code += 'Y';
        break;
      case 'Z':
        code += 'S';
        break;
      case 'F':
      case 'J':
      case 'L':
      case 'M':
      case 'N':
      case 'R':
        code += c;
        break;
      default:
        break;  // vowels past the first letter
    }

    i += skip;
  }

  return code;
}

}  // namespace

std::string metaphone(std::string_view word) {
  if (word.empty())
    throw std::invalid_argument("metaphone: empty input");
  std::string upper;
  upper.reserve(word.size());
  for (char c : word) {
    if (!is_ascii_alpha(c))
      throw std::invalid_argument("metaphone: non-alphabetic input: " +
                                  std::string(word));
    upper += static_cast<char>(ascii_lower(c) - 'a' + 'A');
  }
  return metaphone_upper(upper);
}

}  // namespace genfer
