#include "rtqa/annotate.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "rtqa/text.hpp"

namespace rtqa {

bool is_comparative_tag(const std::string& tag) {
  return tag == "JJR" || tag == "RBR";
}

ScriptedParse::ScriptedParse(std::vector<std::string> tags,
                             std::vector<std::optional<std::size_t>> parents)
    : tags_(std::move(tags)), parents_(std::move(parents)) {
  if (tags_.size() != parents_.size())
    throw std::invalid_argument("ScriptedParse: tags/parents size mismatch");
  for (std::size_t i = 0; i < parents_.size(); ++i) {
    if (parents_[i] && (*parents_[i] >= parents_.size() || *parents_[i] == i))
      throw std::invalid_argument("ScriptedParse: bad parent index");
  }
}

std::string ScriptedParse::pos_tag(std::size_t word) const {
  return tags_.at(word);
}

std::optional<std::size_t> ScriptedParse::parent(std::size_t word) const {
  return parents_.at(word);
}

std::size_t ScriptedParse::head_of_span(const WordRange& range) const {
  for (std::size_t i = range.start; i <= range.end && i < tags_.size(); ++i) {
    const auto p = parents_[i];
    if (!p || !range.contains(*p)) return i;
  }
  return std::min(range.end, tags_.size() - 1);
}

namespace {

const std::unordered_set<std::string>& comparative_adjectives() {
  static const std::unordered_set<std::string> set = {
      "more",    "fewer",   "less",    "greater", "higher",  "lower",
      "larger",  "bigger",  "smaller", "longer",  "shorter", "older",
      "younger", "farther", "further", "faster",  "slower",  "heavier",
      "lighter", "wider",   "narrower", "deeper", "stronger", "weaker",
      "closer",  "nearer",  "taller",  "cheaper", "richer",  "poorer",
      "better",  "worse",   "steeper", "sharper", "warmer",  "cooler",
      "colder",  "hotter",  "darker",  "brighter", "thicker", "thinner",
      "tougher", "newer",   "elder"};
  return set;
}

const std::unordered_set<std::string>& comparative_adverbs() {
  static const std::unordered_set<std::string> set = {"earlier", "later",
                                                      "sooner"};
  return set;
}

// Base adjectives backing the guarded "-er" rule, so "steeper" tags JJR while
// "other", "number" or "quarter" stay nouns.
const std::unordered_set<std::string>& gradable_bases() {
  static const std::unordered_set<std::string> set = {
      "long",  "short", "high", "low",    "large", "big",    "small", "great",
      "old",   "young", "late", "early",  "far",   "fast",   "slow",  "heavy",
      "light", "wide",  "narrow", "deep", "strong", "weak",  "close", "near",
      "tall",  "cheap", "rich", "poor",   "new",   "few",    "warm",  "cool",
      "cold",  "hot",   "dark", "bright", "thick", "thin",   "safe",  "wet",
      "dry",   "hard",  "soft", "loud",   "quiet", "rare",   "tough", "steep",
      "sharp", "flat",  "full", "busy",   "easy",  "happy",  "wealthy"};
  return set;
}

const std::unordered_map<std::string, std::string>& closed_class_tags() {
  static const std::unordered_map<std::string, std::string> map = {
      {"how", "WRB"},     {"when", "WRB"},    {"where", "WRB"},
      {"why", "WRB"},     {"which", "WDT"},   {"what", "WDT"},
      {"who", "WP"},      {"whom", "WP"},     {"the", "DT"},
      {"a", "DT"},        {"an", "DT"},       {"this", "DT"},
      {"that", "DT"},     {"these", "DT"},    {"those", "DT"},
      {"some", "DT"},     {"any", "DT"},      {"no", "DT"},
      {"each", "DT"},     {"every", "DT"},    {"all", "DT"},
      {"both", "DT"},     {"many", "JJ"},     {"much", "JJ"},
      {"of", "IN"},       {"in", "IN"},       {"on", "IN"},
      {"at", "IN"},       {"by", "IN"},       {"for", "IN"},
      {"with", "IN"},     {"from", "IN"},     {"than", "IN"},
      {"as", "IN"},       {"after", "IN"},    {"before", "IN"},
      {"during", "IN"},   {"between", "IN"},  {"against", "IN"},
      {"over", "IN"},     {"under", "IN"},    {"about", "IN"},
      {"through", "IN"},  {"compared", "IN"}, {"to", "TO"},
      {"there", "EX"},    {"and", "CC"},      {"or", "CC"},
      {"but", "CC"},      {"nor", "CC"},      {"not", "RB"},
      {"only", "RB"},     {"also", "RB"},     {"together", "RB"},
      {"he", "PRP"},      {"she", "PRP"},     {"it", "PRP"},
      {"they", "PRP"},    {"we", "PRP"},      {"you", "PRP"},
      {"i", "PRP"},       {"them", "PRP"},    {"him", "PRP"},
      {"her", "PRP"},     {"us", "PRP"},      {"their", "PRP$"},
      {"his", "PRP$"},    {"its", "PRP$"},    {"is", "VBZ"},
      {"are", "VBP"},     {"was", "VBD"},     {"were", "VBD"},
      {"am", "VBP"},      {"be", "VB"},       {"been", "VBN"},
      {"being", "VBG"},   {"do", "VBP"},      {"does", "VBZ"},
      {"did", "VBD"},     {"have", "VBP"},    {"has", "VBZ"},
      {"had", "VBD"},     {"can", "MD"},      {"could", "MD"},
      {"will", "MD"},     {"would", "MD"},    {"should", "MD"},
      {"may", "MD"},      {"might", "MD"},    {"must", "MD"},
      {"score", "VB"},    {"scored", "VBD"},  {"win", "VB"},
      {"won", "VBD"},     {"lose", "VB"},     {"lost", "VBD"},
      {"throw", "VB"},    {"threw", "VBD"},   {"kick", "VB"},
      {"kicked", "VBD"},  {"catch", "VB"},    {"caught", "VBD"},
      {"make", "VB"},     {"made", "VBD"},    {"live", "VB"},
      {"lived", "VBD"}};
  return map;
}

bool all_digit_shape(const std::string& w) {
  bool has_digit = false;
  for (char c : w) {
    if (std::isdigit(static_cast<unsigned char>(c)))
      has_digit = true;
    else if (c != ',' && c != '.' && c != '-')
      return false;
  }
  return has_digit;
}

bool is_punct_token(const std::string& w) {
  return w.size() == 1 && !std::isalnum(static_cast<unsigned char>(w[0]));
}

std::string tag_word(const std::string& raw) {
  if (raw.empty()) return "NN";
  if (is_punct_token(raw)) {
    if (raw == "." || raw == "?" || raw == "!") return ".";
    if (raw == ",") return ",";
    return ":";
  }
  const std::string w = to_lower(raw);
  if (all_digit_shape(w)) return "CD";
  if (comparative_adjectives().count(w)) return "JJR";
  if (comparative_adverbs().count(w)) return "RBR";
  if (auto it = closed_class_tags().find(w); it != closed_class_tags().end())
    return it->second;
  if (w.size() >= 4 && w.ends_with("er")) {
    const std::string stem = w.substr(0, w.size() - 2);
    const auto& bases = gradable_bases();
    if (bases.count(stem)) return "JJR";
    if (bases.count(stem + "e")) return "JJR";                   // larg -> large
    if (stem.size() >= 2 && stem[stem.size() - 1] == stem[stem.size() - 2] &&
        bases.count(stem.substr(0, stem.size() - 1)))
      return "JJR";                                              // bigg -> big
    if (w.ends_with("ier") && bases.count(w.substr(0, w.size() - 3) + "y"))
      return "JJR";                                              // happi -> happy
  }
  if (w.size() > 4 && w.ends_with("ing")) return "VBG";
  if (w.size() > 3 && w.ends_with("ed")) return "VBN";
  if (w.size() > 3 && w.ends_with("ly")) return "RB";
  if (w.ends_with("s")) return "NNS";
  return "NN";
}

bool is_verb_tag(const std::string& t) {
  return t == "VB" || t == "VBZ" || t == "VBP" || t == "VBD" || t == "MD";
}

bool is_verbish_tag(const std::string& t) {
  return is_verb_tag(t) || t == "VBG" || t == "VBN";
}

bool is_noun_tag(const std::string& t) {
  return t == "NN" || t == "NNS" || t == "NNP" || t == "NNPS" || t == "PRP" ||
         t == "CD" || t == "EX";
}

bool is_np_member_tag(const std::string& t) {
  return t == "DT" || t == "JJ" || t == "JJR" || t == "CD" || t == "NN" ||
         t == "NNS" || t == "NNP" || t == "NNPS" || t == "VBN" || t == "PRP$";
}

// Parse produced by HeuristicAnnotator.
class HeuristicParse final : public ParseView {
 public:
  HeuristicParse(std::vector<std::string> tags,
                 std::vector<std::optional<std::size_t>> parents)
      : tags_(std::move(tags)), parents_(std::move(parents)) {}

  std::size_t size() const override { return tags_.size(); }
  std::string pos_tag(std::size_t word) const override { return tags_.at(word); }
  std::optional<std::size_t> parent(std::size_t word) const override {
    return parents_.at(word);
  }
  std::size_t head_of_span(const WordRange& range) const override {
    for (std::size_t i = range.start; i <= range.end && i < tags_.size(); ++i) {
      const auto p = parents_[i];
      if (!p || !range.contains(*p)) return i;
    }
    return std::min(range.end, tags_.size() - 1);
  }

 private:
  std::vector<std::string> tags_;
  std::vector<std::optional<std::size_t>> parents_;
};

}  // namespace

std::vector<std::string> HeuristicAnnotator::pos_tags(
    const std::vector<std::string>& words) const {
  std::vector<std::string> tags;
  tags.reserve(words.size());
  for (const auto& w : words) tags.push_back(tag_word(w));
  return tags;
}

std::shared_ptr<const ParseView> HeuristicAnnotator::parse(
    const std::vector<std::string>& words) const {
  const std::size_t n = words.size();
  std::vector<std::string> tags = pos_tags(words);
  std::vector<std::optional<std::size_t>> parents(n);
  if (n == 0) return std::make_shared<HeuristicParse>(tags, parents);

  // Root: first finite verb, else first verb-like token, else last word.
  std::size_t root = n - 1;
  bool found = false;
  for (std::size_t i = 0; i < n && !found; ++i)
    if (is_verb_tag(tags[i])) {
      root = i;
      found = true;
    }
  for (std::size_t i = 0; i < n && !found; ++i)
    if (is_verbish_tag(tags[i])) {
      root = i;
      found = true;
    }

  // Noun-phrase runs; the head of a run is its last noun.
  std::vector<std::size_t> np_head(n);
  for (std::size_t i = 0; i < n; ++i) np_head[i] = i;
  std::size_t i = 0;
  while (i < n) {
    if (!is_np_member_tag(tags[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j + 1 < n && is_np_member_tag(tags[j + 1])) ++j;
    std::size_t head = j;
    for (std::size_t k = i; k <= j; ++k)
      if (is_noun_tag(tags[k])) head = k;
    for (std::size_t k = i; k <= j; ++k) np_head[k] = head;
    i = j + 1;
  }

  auto nearest_preceding = [&](std::size_t from,
                               auto&& pred) -> std::optional<std::size_t> {
    for (std::size_t k = from; k-- > 0;)
      if (pred(k)) return k;
    return std::nullopt;
  };

  for (std::size_t w = 0; w < n; ++w) {
    if (w == root) continue;
    const std::string& t = tags[w];
    if (t == "." || t == "," || t == ":") {
      parents[w] = root;
    } else if (t == "WRB" || t == "WDT" || t == "WP") {
      // "How" leans on the following modifier or phrase head.
      if (w + 1 < n && (tags[w + 1] == "JJ" || tags[w + 1] == "JJR" ||
                        tags[w + 1] == "RB"))
        parents[w] = w + 1;
      else if (w + 1 < n)
        parents[w] = np_head[w + 1];
      else
        parents[w] = root;
    } else if (is_np_member_tag(t) && np_head[w] != w) {
      parents[w] = np_head[w];
    } else if (is_np_member_tag(t)) {
      // Phrase head: hang off the nearest preceding preposition if one comes
      // before any verb; otherwise off the root verb.
      std::optional<std::size_t> attach;
      for (std::size_t k = w; k-- > 0;) {
        if (tags[k] == "IN" || tags[k] == "TO") {
          attach = k;
          break;
        }
        if (is_verbish_tag(tags[k]) || (is_np_member_tag(tags[k]) && np_head[k] != np_head[w]))
          break;
      }
      parents[w] = attach ? *attach : root;
    } else if (t == "IN" || t == "TO") {
      auto v = nearest_preceding(w, [&](std::size_t k) { return is_verbish_tag(tags[k]); });
      parents[w] = v ? *v : root;
    } else if (t == "EX" || t == "RB" || t == "RBR") {
      auto v = nearest_preceding(w, [&](std::size_t k) { return is_verbish_tag(tags[k]); });
      parents[w] = v ? *v : root;
    } else if (t == "VBG" || t == "VBN") {
      // Trailing participle modifies the noun phrase to its left.
      auto nphead = nearest_preceding(w, [&](std::size_t k) {
        return is_noun_tag(tags[k]) && np_head[k] == k;
      });
      parents[w] = nphead ? *nphead : root;
    } else {
      parents[w] = root;
    }
  }
  parents[root] = std::nullopt;

  // Break any accidental cycle by re-rooting the word where it closes.
  for (std::size_t w = 0; w < n; ++w) {
    std::vector<bool> seen(n, false);
    std::size_t cur = w;
    while (parents[cur] && !seen[cur]) {
      seen[cur] = true;
      cur = *parents[cur];
    }
    if (parents[cur] && seen[cur]) parents[cur] = root;
  }

  return std::make_shared<HeuristicParse>(std::move(tags), std::move(parents));
}

}  // namespace rtqa
