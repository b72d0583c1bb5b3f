#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rtqa/annotate.hpp"

namespace rtqa {

// Gold answer as DROP records it: a number string, text spans, or a date.
// Exactly what the source file said, no normalization.
struct AnswerValue {
  std::string number;
  std::vector<std::string> spans;
  std::string date_day, date_month, date_year;

  bool has_number() const { return !number.empty(); }
  bool empty() const {
    return number.empty() && spans.empty() && date_day.empty() &&
           date_month.empty() && date_year.empty();
  }
  bool operator==(const AnswerValue&) const = default;
};

struct Question {
  std::string id;
  std::string text;
  std::string passage_id;
  AnswerValue gold_answer;

  bool operator==(const Question&) const = default;
};

struct Passage {
  std::string passage_id;
  std::string text;
};

// Ordered question collection plus the filters that produced it.
class QuestionSet {
 public:
  std::vector<Question> items;
  std::map<std::string, std::string> passages;  // passage_id -> text
  std::vector<std::string> provenance;

  std::size_t size() const { return items.size(); }
  const std::string& passage_text(const std::string& passage_id) const;

  // Keeps items satisfying `keep`, drops now-unreferenced passages and
  // appends `filter_name` to provenance.
  QuestionSet filtered(const std::string& filter_name,
                       const std::function<bool(const Question&)>& keep) const;
};

// Word-index spans of the two compared entities in a question.
struct PointerAnnotation {
  std::string question_text;
  WordRange entity1;
  WordRange entity2;

  bool operator==(const PointerAnnotation&) const = default;
};

// -- DROP files ------------------------------------------------------------

// Reads the public DROP JSON layout: passages keyed by id, each carrying a
// "passage" string and "qa_pairs" with question/answer/query_id. Items keep
// file order. A qa_pair without an answer is retained with an empty
// gold_answer and a warning on stderr.
QuestionSet load_drop(const std::string& path);

// JSON-lines persistence for filtered sets; one self-contained record per
// question (id, question, passage_id, passage, answer, provenance).
void save_question_set(const QuestionSet& qs, const std::string& path);
QuestionSet load_question_set(const std::string& path);

// -- Filter cascade ----------------------------------------------------------

// Retains questions whose gold answer has a non-empty number field.
QuestionSet filter_number_answers(const QuestionSet& qs);

// Retains questions with at least one JJR/RBR token, then drops those where
// every such token is immediately preceded by "or". Items the tagger fails
// on are dropped with a diagnostic.
QuestionSet filter_comparative(const QuestionSet& qs, const Annotator& tagger);

// The three subtraction trigrams, matched case-insensitively at the start.
extern const std::vector<std::string> kSubtractionTrigrams;

QuestionSet filter_trigram(const QuestionSet& qs);

// -- Pointer annotations -----------------------------------------------------

// Parses one '#'-delimited question per line: exactly four '#' marking two
// non-overlapping spans. Lines violating that are reported with their line
// number and rejected.
std::vector<PointerAnnotation> load_pointer_annotations(const std::string& path);

PointerAnnotation parse_pointer_annotation(const std::string& line);

// Inverse of parse_pointer_annotation: re-inserts the four '#' markers.
std::string render_pointer_annotation(const PointerAnnotation& ann);

}  // namespace rtqa
