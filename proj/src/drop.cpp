#include "rtqa/drop.hpp"

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "rtqa/errors.hpp"
#include "rtqa/text.hpp"

namespace rtqa {

namespace {

using ordered_json = nlohmann::ordered_json;
using nlohmann::json;

std::string json_string_or(const json& j, const char* key) {
  if (!j.contains(key) || j[key].is_null()) return {};
  const auto& v = j[key];
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  if (v.is_number()) {
    std::ostringstream os;
    os << v.get<double>();
    return os.str();
  }
  return {};
}

AnswerValue parse_answer(const json& j) {
  AnswerValue a;
  a.number = json_string_or(j, "number");
  if (j.contains("spans") && j["spans"].is_array()) {
    for (const auto& s : j["spans"])
      if (s.is_string()) a.spans.push_back(s.get<std::string>());
  }
  if (j.contains("date") && j["date"].is_object()) {
    const auto& d = j["date"];
    a.date_day = json_string_or(d, "day");
    a.date_month = json_string_or(d, "month");
    a.date_year = json_string_or(d, "year");
  }
  return a;
}

json answer_to_json(const AnswerValue& a) {
  json j;
  j["number"] = a.number;
  j["spans"] = a.spans;
  j["date"] = {{"day", a.date_day}, {"month", a.date_month}, {"year", a.date_year}};
  return j;
}

}  // namespace

const std::string& QuestionSet::passage_text(const std::string& passage_id) const {
  static const std::string empty;
  auto it = passages.find(passage_id);
  return it == passages.end() ? empty : it->second;
}

QuestionSet QuestionSet::filtered(
    const std::string& filter_name,
    const std::function<bool(const Question&)>& keep) const {
  QuestionSet out;
  out.provenance = provenance;
  out.provenance.push_back(filter_name);
  for (const auto& q : items)
    if (keep(q)) out.items.push_back(q);
  std::set<std::string> referenced;
  for (const auto& q : out.items) referenced.insert(q.passage_id);
  for (const auto& id : referenced) {
    auto it = passages.find(id);
    if (it != passages.end()) out.passages[id] = it->second;
  }
  return out;
}

QuestionSet load_drop(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open DROP file: " + path);
  ordered_json root;
  try {
    in >> root;
  } catch (const ordered_json::parse_error& e) {
    throw ParseError("malformed DROP JSON in " + path + ": " + e.what());
  }
  if (!root.is_object())
    throw ParseError("DROP file must be a JSON object of passages: " + path);

  QuestionSet qs;
  for (auto it = root.begin(); it != root.end(); ++it) {
    const std::string& pid = it.key();
    const auto& entry = it.value();
    if (!entry.is_object() || !entry.contains("qa_pairs") ||
        !entry["qa_pairs"].is_array())
      throw ParseError("passage '" + pid + "' has no qa_pairs array");
    qs.passages[pid] = entry.contains("passage") && entry["passage"].is_string()
                           ? entry["passage"].get<std::string>()
                           : std::string();
    for (const auto& qa : entry["qa_pairs"]) {
      Question q;
      q.passage_id = pid;
      q.id = qa.contains("query_id") && qa["query_id"].is_string()
                 ? qa["query_id"].get<std::string>()
                 : pid + "#" + std::to_string(qs.items.size());
      if (!qa.contains("question") || !qa["question"].is_string())
        throw ParseError("passage '" + pid + "' has a qa_pair without a question");
      q.text = qa["question"].get<std::string>();
      if (qa.contains("answer") && qa["answer"].is_object()) {
        q.gold_answer = parse_answer(qa["answer"]);
      } else {
        std::cerr << "warning: question " << q.id
                  << " has no answer field; kept with empty gold answer\n";
      }
      qs.items.push_back(std::move(q));
    }
  }
  return qs;
}

void save_question_set(const QuestionSet& qs, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write question set: " + path);
  for (const auto& q : qs.items) {
    json line;
    line["id"] = q.id;
    line["question"] = q.text;
    line["passage_id"] = q.passage_id;
    line["passage"] = qs.passage_text(q.passage_id);
    line["answer"] = answer_to_json(q.gold_answer);
    line["provenance"] = qs.provenance;
    out << line.dump() << "\n";
  }
}

QuestionSet load_question_set(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open question set: " + path);
  QuestionSet qs;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::parse_error& e) {
      throw ParseError("bad question-set line " + std::to_string(lineno) + ": " +
                       e.what());
    }
    Question q;
    q.id = json_string_or(j, "id");
    q.text = json_string_or(j, "question");
    q.passage_id = json_string_or(j, "passage_id");
    if (j.contains("answer")) q.gold_answer = parse_answer(j["answer"]);
    if (j.contains("passage") && j["passage"].is_string())
      qs.passages[q.passage_id] = j["passage"].get<std::string>();
    if (qs.provenance.empty() && j.contains("provenance") &&
        j["provenance"].is_array())
      for (const auto& p : j["provenance"])
        if (p.is_string()) qs.provenance.push_back(p.get<std::string>());
    qs.items.push_back(std::move(q));
  }
  return qs;
}

QuestionSet filter_number_answers(const QuestionSet& qs) {
  return qs.filtered("number_answers",
                     [](const Question& q) { return q.gold_answer.has_number(); });
}

QuestionSet filter_comparative(const QuestionSet& qs, const Annotator& tagger) {
  // Step 1: keep questions with a JJR/RBR token.
  QuestionSet with_comparative =
      qs.filtered("jjr_rbr", [&](const Question& q) {
        try {
          const auto words = tokenize_word_strings(q.text);
          for (const auto& tag : tagger.pos_tags(words))
            if (is_comparative_tag(tag)) return true;
          return false;
        } catch (const std::exception& e) {
          std::cerr << "warning: tagger failed on question " << q.id << ": "
                    << e.what() << "; item dropped\n";
          return false;
        }
      });
  // Step 2: drop questions where every comparative follows an "or".
  return with_comparative.filtered("or_refinement", [&](const Question& q) {
    try {
      const auto words = tokenize_word_strings(q.text);
      const auto tags = tagger.pos_tags(words);
      for (std::size_t i = 0; i < tags.size(); ++i) {
        if (!is_comparative_tag(tags[i])) continue;
        if (i == 0 || to_lower(words[i - 1]) != "or") return true;
      }
      return false;
    } catch (const std::exception& e) {
      std::cerr << "warning: tagger failed on question " << q.id << ": "
                << e.what() << "; item dropped\n";
      return false;
    }
  });
}

const std::vector<std::string> kSubtractionTrigrams = {
    "how many more", "how many fewer", "how many less"};

QuestionSet filter_trigram(const QuestionSet& qs) {
  return qs.filtered("trigram", [](const Question& q) {
    for (const auto& tg : kSubtractionTrigrams)
      if (starts_with_trigram(q.text, tg)) return true;
    return false;
  });
}

PointerAnnotation parse_pointer_annotation(const std::string& line) {
  std::string stripped;
  stripped.reserve(line.size());
  std::vector<std::size_t> marks;  // offsets into the stripped text
  for (char c : line) {
    if (c == '#')
      marks.push_back(stripped.size());
    else
      stripped += c;
  }
  if (marks.size() != 4)
    throw ParseError("expected exactly 4 '#' markers, found " +
                     std::to_string(marks.size()));

  const auto tokens = tokenize_words(stripped);
  auto span_for = [&](std::size_t open, std::size_t close,
                      const char* which) -> WordRange {
    std::optional<std::size_t> first, last;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      if (tokens[i].begin >= open && tokens[i].end <= close) {
        if (!first) first = i;
        last = i;
      }
    }
    if (!first)
      throw ParseError(std::string("empty ") + which + " entity span");
    return {*first, *last};
  };

  PointerAnnotation ann;
  ann.question_text = stripped;
  ann.entity1 = span_for(marks[0], marks[1], "first");
  ann.entity2 = span_for(marks[2], marks[3], "second");
  if (!(ann.entity1.start <= ann.entity1.end &&
        ann.entity1.end < ann.entity2.start &&
        ann.entity2.start <= ann.entity2.end))
    throw ParseError("entity spans overlap or are out of order");
  return ann;
}

std::vector<PointerAnnotation> load_pointer_annotations(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open annotation file: " + path);
  std::vector<PointerAnnotation> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    try {
      out.push_back(parse_pointer_annotation(line));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

std::string render_pointer_annotation(const PointerAnnotation& ann) {
  const auto tokens = tokenize_words(ann.question_text);
  if (ann.entity2.end >= tokens.size())
    throw ParseError("annotation spans exceed question length");
  std::string out = ann.question_text;
  // Insert from the rightmost offset so earlier offsets stay valid.
  const std::size_t inserts[4] = {
      tokens[ann.entity1.start].begin, tokens[ann.entity1.end].end,
      tokens[ann.entity2.start].begin, tokens[ann.entity2.end].end};
  for (int k = 3; k >= 0; --k) out.insert(inserts[k], 1, '#');
  return out;
}

}  // namespace rtqa
