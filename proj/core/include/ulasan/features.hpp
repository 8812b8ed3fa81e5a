#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace ulasan {

using TokenList = std::vector<std::string>;

// Token <-> id map with dense ids; PAD=0 and UNK=1 are always present.
// Non-special tokens are those with training-split frequency >= min_frequency,
// ordered by descending frequency then lexicographic tie-break.
struct Vocabulary {
  static constexpr std::int32_t kPad = 0;
  static constexpr std::int32_t kUnk = 1;
  static constexpr const char* kPadToken = "<pad>";
  static constexpr const char* kUnkToken = "<unk>";

  std::vector<std::string> id_to_token;           // index = id
  std::unordered_map<std::string, std::int32_t> token_to_id;
  std::vector<std::int64_t> frequencies;          // parallel to id_to_token
  std::int32_t min_frequency = 1;
  std::string source;                             // training-split identifier

  std::int32_t size() const { return static_cast<std::int32_t>(id_to_token.size()); }
  std::int32_t id_of(const std::string& token) const {
    auto it = token_to_id.find(token);
    return it == token_to_id.end() ? kUnk : it->second;
  }

  void save_json(const std::string& path) const;
  static Vocabulary load_json(const std::string& path);
};

Vocabulary build_vocab(const std::vector<TokenList>& corpus, std::int32_t min_freq,
                       const std::string& source = "train");

// Fixed-length id sequence; positions >= true_length are PAD.
struct IdSequence {
  std::vector<std::int32_t> ids;
  std::int32_t true_length = 0;
};

IdSequence encode_sequence(const TokenList& tokens, const Vocabulary& vocab,
                           std::int32_t max_len);

// Smallest length L such that at least p percent of documents have length
// <= L (nearest-rank).
std::int32_t compute_percentile_length(const std::vector<TokenList>& corpus, double p);

struct SparseVector {
  std::vector<std::int32_t> indices;  // strictly increasing
  std::vector<double> values;
  std::int32_t dimension = 0;
};

double dot(const SparseVector& a, const SparseVector& b);
double squared_norm(const SparseVector& v);

// Term selection by highest total corpus frequency (lexicographic tie-break);
// idf(t) = ln((1+N)/(1+df(t))) + 1; transform output is L2-normalized.
struct TfIdfModel {
  std::vector<std::string> terms;                 // fixed order from fit time
  std::unordered_map<std::string, std::int32_t> term_to_index;
  std::vector<std::int64_t> document_frequency;
  std::vector<double> idf;
  std::int64_t document_count = 0;

  std::int32_t dimension() const { return static_cast<std::int32_t>(terms.size()); }

  void save_json(const std::string& path) const;
  static TfIdfModel load_json(const std::string& path);
};

TfIdfModel fit_tfidf(const std::vector<TokenList>& corpus, std::int32_t max_features);
SparseVector transform_tfidf(const TokenList& tokens, const TfIdfModel& model);

}  // namespace ulasan
