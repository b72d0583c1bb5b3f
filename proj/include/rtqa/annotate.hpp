#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rtqa {

// Inclusive word-index range.
struct WordRange {
  std::size_t start = 0;
  std::size_t end = 0;

  bool contains(std::size_t i) const { return i >= start && i <= end; }
  bool operator==(const WordRange&) const = default;
};

bool is_comparative_tag(const std::string& tag);  // JJR or RBR

// Read-only view of one sentence's POS tags and dependency arcs.
struct ParseView {
  virtual ~ParseView() = default;
  virtual std::size_t size() const = 0;
  virtual std::string pos_tag(std::size_t word) const = 0;
  // Dependency head of `word`; nullopt at the root.
  virtual std::optional<std::size_t> parent(std::size_t word) const = 0;
  // Syntactic head of a span: a word inside the range.
  virtual std::size_t head_of_span(const WordRange& range) const = 0;
};

// Scripted parse for tests and fixtures: tags and parents pinned verbatim.
class ScriptedParse final : public ParseView {
 public:
  ScriptedParse(std::vector<std::string> tags,
                std::vector<std::optional<std::size_t>> parents);

  std::size_t size() const override { return tags_.size(); }
  std::string pos_tag(std::size_t word) const override;
  std::optional<std::size_t> parent(std::size_t word) const override;
  // First word whose parent falls outside the range; the range end otherwise.
  std::size_t head_of_span(const WordRange& range) const override;

 private:
  std::vector<std::string> tags_;
  std::vector<std::optional<std::size_t>> parents_;
};

// POS tagging + dependency parsing behind one handle so CLI config can pick
// an adapter by name.
struct Annotator {
  virtual ~Annotator() = default;
  virtual std::vector<std::string> pos_tags(
      const std::vector<std::string>& words) const = 0;
  virtual std::shared_ptr<const ParseView> parse(
      const std::vector<std::string>& words) const = 0;
  // Whether one handle may be used from several threads at once.
  virtual bool thread_safe() const { return true; }
};

// Rule-based English annotator. The tagger is lexicon-driven (closed classes,
// common comparatives, digit detection, -ed/-ing/-ly suffixes); the parser
// attaches noun phrases to the nearest preceding preposition or verb, which
// covers the interrogative shapes this pipeline rewrites. Deterministic and
// dependency-free; swap in a ParseView from a real parser for anything wider.
class HeuristicAnnotator final : public Annotator {
 public:
  std::vector<std::string> pos_tags(
      const std::vector<std::string>& words) const override;
  std::shared_ptr<const ParseView> parse(
      const std::vector<std::string>& words) const override;
};

}  // namespace rtqa
