#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace rtqa {

// A word token with its character offsets into the source string, [begin, end).
struct Token {
  std::string text;
  std::size_t begin = 0;
  std::size_t end = 0;

  bool operator==(const Token&) const = default;
};

// Splits text into words with punctuation as separate single-char tokens.
// Internal '-', '.', ',' and '\'' between alphanumerics stay inside a word,
// so "80-yard", "1,000" and "53.2" are single tokens while a final "?" is not.
std::vector<Token> tokenize_words(std::string_view text);

// Token texts only, for callers that do not need offsets.
std::vector<std::string> tokenize_word_strings(std::string_view text);

// Joins words with single spaces; sentence punctuation (. , ? ! ; : % ...)
// attaches to the preceding word, opening brackets to the following one.
std::string detokenize(const std::vector<std::string>& words);

std::string to_lower(std::string_view s);

// True when the first three words of `text` equal `trigram` case-insensitively.
// `trigram` is given as three space-separated words, e.g. "how many more".
bool starts_with_trigram(std::string_view text, std::string_view trigram);

}  // namespace rtqa
