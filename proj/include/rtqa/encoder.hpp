#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace rtqa {

// Reference encoder configuration: final layer of a large pretrained
// bidirectional transformer, 1024-wide embeddings.
inline constexpr int kReferenceEncoderWidth = 1024;
inline constexpr int kDefaultMaxSubtokens = 512;

// A question split two ways: words (the index space annotations and
// decomposition use) and encoder subtokens, with the alignment between them.
struct TokenizedQuestion {
  std::vector<std::string> words;
  std::vector<std::string> subtokens;
  // Per-subtoken word index; nullopt for control tokens like sentinels.
  std::vector<std::optional<std::size_t>> alignment;

  std::size_t n() const { return subtokens.size(); }

  // First/last subtoken produced by a word; nullopt when the word has none.
  std::optional<std::size_t> first_subtoken_of(std::size_t word) const;
  std::optional<std::size_t> last_subtoken_of(std::size_t word) const;
};

using EmbeddingMatrix = Eigen::MatrixXd;  // n x h, one row per subtoken

struct Encoding {
  TokenizedQuestion tokens;
  EmbeddingMatrix embeddings;
};

// Contextual embedding source. Implementations must be deterministic for
// fixed weights and raise LengthError past max_subtokens().
struct ContextualEncoder {
  virtual ~ContextualEncoder() = default;
  virtual Encoding encode(const std::string& question_text) const = 0;
  virtual int width() const = 0;
  virtual int max_subtokens() const = 0;
  // True when the implementation can update its own weights during training.
  virtual bool trainable() const { return false; }
};

// Deterministic offline encoder. Subtokens come from wordpiece-style
// splitting of hyphenated/punctuated words; embeddings are seeded hashes of
// the subtoken, its neighbors and its position, so a linear head on top has
// real signal to learn from. Optional sentinel rows imitate the control
// tokens of real encoders (no word alignment).
class HashEncoder final : public ContextualEncoder {
 public:
  struct Options {
    int width = 64;
    std::uint64_t seed = 7;
    int max_subtokens = kDefaultMaxSubtokens;
    bool sentinels = false;
  };

  explicit HashEncoder(Options opt = {});

  Encoding encode(const std::string& question_text) const override;
  int width() const override { return opt_.width; }
  int max_subtokens() const override { return opt_.max_subtokens; }

 private:
  Options opt_;
};

// Client for a remote embedding service speaking JSON over HTTP POST:
//   request  {"question": "..."}
//   response {"subtokens": [...], "alignment": [int|null, ...],
//             "embeddings": [[h floats] per subtoken]}
class HttpEncoder final : public ContextualEncoder {
 public:
  struct Options {
    std::string endpoint;  // e.g. "http://127.0.0.1:8731"
    std::string path = "/encode";
    int width = kReferenceEncoderWidth;
    int max_subtokens = kDefaultMaxSubtokens;
    int timeout_ms = 30000;
    int retries = 2;
  };

  explicit HttpEncoder(Options opt);

  Encoding encode(const std::string& question_text) const override;
  int width() const override { return opt_.width; }
  int max_subtokens() const override { return opt_.max_subtokens; }

 private:
  Options opt_;
};

// Splits one word into wordpiece-like units at internal punctuation:
// "80-yard" -> {"80", "-", "yard"}. Plain words come back unchanged.
std::vector<std::string> split_subword_units(const std::string& word);

}  // namespace rtqa
