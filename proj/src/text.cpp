#include "rtqa/text.hpp"

#include <algorithm>
#include <cctype>

namespace rtqa {

namespace {

bool is_word_char(unsigned char c) { return std::isalnum(c) != 0; }

bool is_space(unsigned char c) { return std::isspace(c) != 0; }

// '-', '.', ',' and apostrophe glue two alphanumerics into one word.
bool is_joiner(char c) { return c == '-' || c == '.' || c == ',' || c == '\''; }

}  // namespace

std::vector<Token> tokenize_words(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    const unsigned char c = static_cast<unsigned char>(text[i]);
    if (is_space(c)) {
      ++i;
      continue;
    }
    if (is_word_char(c)) {
      std::size_t j = i + 1;
      while (j < n) {
        const unsigned char cj = static_cast<unsigned char>(text[j]);
        if (is_word_char(cj)) {
          ++j;
        } else if (is_joiner(text[j]) && j + 1 < n &&
                   is_word_char(static_cast<unsigned char>(text[j + 1]))) {
          j += 2;
        } else {
          break;
        }
      }
      out.push_back({std::string(text.substr(i, j - i)), i, j});
      i = j;
    } else {
      // Multi-byte UTF-8 runs stay together as one token.
      std::size_t j = i + 1;
      if (c >= 0x80) {
        while (j < n && (static_cast<unsigned char>(text[j]) & 0xC0) == 0x80) ++j;
      }
      out.push_back({std::string(text.substr(i, j - i)), i, j});
      i = j;
    }
  }
  return out;
}

std::vector<std::string> tokenize_word_strings(std::string_view text) {
  std::vector<std::string> out;
  for (auto& t : tokenize_words(text)) out.push_back(std::move(t.text));
  return out;
}

std::string detokenize(const std::vector<std::string>& words) {
  static const std::string no_space_before = ".,?!;:%)]}";
  static const std::string no_space_after = "([{$";
  std::string out;
  bool suppress_space = false;
  for (const auto& w : words) {
    if (w.empty()) continue;
    const bool attach =
        w.size() == 1 && no_space_before.find(w[0]) != std::string::npos;
    if (!out.empty() && !attach && !suppress_space) out += ' ';
    out += w;
    suppress_space =
        w.size() == 1 && no_space_after.find(w[0]) != std::string::npos;
  }
  return out;
}

std::string to_lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

bool starts_with_trigram(std::string_view text, std::string_view trigram) {
  const auto words = tokenize_word_strings(text);
  std::vector<std::string> want;
  for (auto& w : tokenize_word_strings(trigram)) want.push_back(to_lower(w));
  if (words.size() < want.size()) return false;
  for (std::size_t i = 0; i < want.size(); ++i) {
    if (to_lower(words[i]) != want[i]) return false;
  }
  return true;
}

}  // namespace rtqa
