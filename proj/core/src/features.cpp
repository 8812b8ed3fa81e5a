#include "ulasan/features.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>

#include <nlohmann/json.hpp>

#include "ulasan/errors.hpp"

namespace ulasan {

namespace {

// Decimal formatting with 17 significant digits so doubles round-trip
// bit-exactly through the JSON artifacts.
std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string escape_json(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

nlohmann::json load_versioned_json(const std::string& path, const char* kind) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError(path + ": cannot open file");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw DataError(path + ": invalid JSON: " + e.what());
  }
  if (!j.contains("version") || !j["version"].is_number_integer()) {
    throw DataError(path + ": missing version field");
  }
  if (j["version"].get<int>() != kArtifactVersionMajor) {
    throw DataError(path + ": unsupported major version " +
                    std::to_string(j["version"].get<int>()));
  }
  if (!j.contains("kind") || j["kind"].get<std::string>() != kind) {
    throw DataError(path + ": expected artifact kind '" + std::string(kind) + "'");
  }
  return j;
}

}  // namespace

Vocabulary build_vocab(const std::vector<TokenList>& corpus, std::int32_t min_freq,
                       const std::string& source) {
  if (corpus.empty()) throw DataError("build_vocab: empty corpus");
  if (min_freq < 1) throw ConfigError("build_vocab: min_freq must be positive");

  std::map<std::string, std::int64_t> freq;  // ordered map: stable tie-breaks
  for (const auto& doc : corpus) {
    for (const auto& tok : doc) freq[tok] += 1;
  }
  std::vector<std::pair<std::string, std::int64_t>> kept;
  for (const auto& [tok, n] : freq) {
    if (n >= min_freq) kept.emplace_back(tok, n);
  }
  std::stable_sort(kept.begin(), kept.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });

  Vocabulary vocab;
  vocab.min_frequency = min_freq;
  vocab.source = source;
  vocab.id_to_token = {Vocabulary::kPadToken, Vocabulary::kUnkToken};
  vocab.frequencies = {0, 0};
  for (const auto& [tok, n] : kept) {
    vocab.token_to_id[tok] = vocab.size();
    vocab.id_to_token.push_back(tok);
    vocab.frequencies.push_back(n);
  }
  vocab.token_to_id[Vocabulary::kPadToken] = Vocabulary::kPad;
  vocab.token_to_id[Vocabulary::kUnkToken] = Vocabulary::kUnk;
  return vocab;
}

IdSequence encode_sequence(const TokenList& tokens, const Vocabulary& vocab,
                           std::int32_t max_len) {
  if (max_len < 1) throw ConfigError("encode_sequence: max_len must be positive");
  IdSequence seq;
  seq.ids.assign(max_len, Vocabulary::kPad);
  seq.true_length = static_cast<std::int32_t>(
      std::min<std::size_t>(tokens.size(), static_cast<std::size_t>(max_len)));
  for (std::int32_t i = 0; i < seq.true_length; ++i) {
    seq.ids[i] = vocab.id_of(tokens[i]);
  }
  return seq;
}

std::int32_t compute_percentile_length(const std::vector<TokenList>& corpus, double p) {
  if (corpus.empty()) throw DataError("compute_percentile_length: empty corpus");
  if (p <= 0.0 || p > 100.0) throw ConfigError("percentile must lie in (0, 100]");
  std::vector<std::size_t> lengths;
  lengths.reserve(corpus.size());
  for (const auto& doc : corpus) lengths.push_back(doc.size());
  std::sort(lengths.begin(), lengths.end());
  const std::size_t rank = static_cast<std::size_t>(
      std::ceil(p / 100.0 * static_cast<double>(lengths.size())));
  return static_cast<std::int32_t>(lengths[std::max<std::size_t>(rank, 1) - 1]);
}

double dot(const SparseVector& a, const SparseVector& b) {
  double sum = 0.0;
  std::size_t i = 0, j = 0;
  while (i < a.indices.size() && j < b.indices.size()) {
    if (a.indices[i] == b.indices[j]) {
      sum += a.values[i] * b.values[j];
      ++i;
      ++j;
    } else if (a.indices[i] < b.indices[j]) {
      ++i;
    } else {
      ++j;
    }
  }
  return sum;
}

double squared_norm(const SparseVector& v) {
  double sum = 0.0;
  for (double x : v.values) sum += x * x;
  return sum;
}

TfIdfModel fit_tfidf(const std::vector<TokenList>& corpus, std::int32_t max_features) {
  if (corpus.empty()) throw DataError("fit_tfidf: empty corpus");
  if (max_features < 1) throw ConfigError("fit_tfidf: max_features must be positive");

  std::map<std::string, std::int64_t> total_freq;
  std::map<std::string, std::int64_t> doc_freq;
  for (const auto& doc : corpus) {
    std::map<std::string, std::int64_t> seen;
    for (const auto& tok : doc) {
      total_freq[tok] += 1;
      seen[tok] += 1;
    }
    for (const auto& [tok, _] : seen) doc_freq[tok] += 1;
  }

  std::vector<std::pair<std::string, std::int64_t>> ranked(total_freq.begin(),
                                                           total_freq.end());
  std::stable_sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  if (ranked.size() > static_cast<std::size_t>(max_features)) {
    ranked.resize(max_features);
  }

  TfIdfModel model;
  model.document_count = static_cast<std::int64_t>(corpus.size());
  for (const auto& [tok, _] : ranked) {
    model.term_to_index[tok] = model.dimension();
    model.terms.push_back(tok);
    const std::int64_t df = doc_freq[tok];
    model.document_frequency.push_back(df);
    model.idf.push_back(
        std::log((1.0 + static_cast<double>(model.document_count)) /
                 (1.0 + static_cast<double>(df))) +
        1.0);
  }
  return model;
}

SparseVector transform_tfidf(const TokenList& tokens, const TfIdfModel& model) {
  std::map<std::int32_t, double> weights;
  for (const auto& tok : tokens) {
    auto it = model.term_to_index.find(tok);
    if (it != model.term_to_index.end()) {
      weights[it->second] += model.idf[it->second];
    }
  }
  SparseVector v;
  v.dimension = model.dimension();
  double norm_sq = 0.0;
  for (const auto& [idx, w] : weights) {
    v.indices.push_back(idx);
    v.values.push_back(w);
    norm_sq += w * w;
  }
  if (norm_sq > 0.0) {
    const double inv = 1.0 / std::sqrt(norm_sq);
    for (auto& w : v.values) w *= inv;
  }
  return v;
}

// -- JSON serialization ------------------------------------------------------

void Vocabulary::save_json(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError(path + ": cannot open file for writing");
  out << "{\n"
      << "  \"version\": " << kArtifactVersionMajor << ",\n"
      << "  \"kind\": \"vocabulary\",\n"
      << "  \"min_frequency\": " << min_frequency << ",\n"
      << "  \"source\": \"" << escape_json(source) << "\",\n"
      << "  \"tokens\": [";
  for (std::size_t i = 0; i < id_to_token.size(); ++i) {
    out << (i ? "," : "") << "\"" << escape_json(id_to_token[i]) << "\"";
  }
  out << "],\n  \"frequencies\": [";
  for (std::size_t i = 0; i < frequencies.size(); ++i) {
    out << (i ? "," : "") << frequencies[i];
  }
  out << "]\n}\n";
}

Vocabulary Vocabulary::load_json(const std::string& path) {
  nlohmann::json j = load_versioned_json(path, "vocabulary");
  Vocabulary vocab;
  vocab.min_frequency = j.at("min_frequency").get<std::int32_t>();
  vocab.source = j.at("source").get<std::string>();
  vocab.id_to_token = j.at("tokens").get<std::vector<std::string>>();
  vocab.frequencies = j.at("frequencies").get<std::vector<std::int64_t>>();
  if (vocab.id_to_token.size() < 2 || vocab.id_to_token[0] != kPadToken ||
      vocab.id_to_token[1] != kUnkToken) {
    throw DataError(path + ": vocabulary is missing PAD/UNK entries");
  }
  if (vocab.frequencies.size() != vocab.id_to_token.size()) {
    throw DataError(path + ": tokens/frequencies length mismatch");
  }
  for (std::size_t i = 0; i < vocab.id_to_token.size(); ++i) {
    vocab.token_to_id[vocab.id_to_token[i]] = static_cast<std::int32_t>(i);
  }
  return vocab;
}

void TfIdfModel::save_json(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError(path + ": cannot open file for writing");
  out << "{\n"
      << "  \"version\": " << kArtifactVersionMajor << ",\n"
      << "  \"kind\": \"tfidf\",\n"
      << "  \"document_count\": " << document_count << ",\n"
      << "  \"terms\": [";
  for (std::size_t i = 0; i < terms.size(); ++i) {
    out << (i ? "," : "") << "\"" << escape_json(terms[i]) << "\"";
  }
  out << "],\n  \"document_frequency\": [";
  for (std::size_t i = 0; i < document_frequency.size(); ++i) {
    out << (i ? "," : "") << document_frequency[i];
  }
  out << "],\n  \"idf\": [";
  for (std::size_t i = 0; i < idf.size(); ++i) {
    out << (i ? "," : "") << format_double(idf[i]);
  }
  out << "]\n}\n";
}

TfIdfModel TfIdfModel::load_json(const std::string& path) {
  nlohmann::json j = load_versioned_json(path, "tfidf");
  TfIdfModel model;
  model.document_count = j.at("document_count").get<std::int64_t>();
  model.terms = j.at("terms").get<std::vector<std::string>>();
  model.document_frequency = j.at("document_frequency").get<std::vector<std::int64_t>>();
  model.idf = j.at("idf").get<std::vector<double>>();
  if (model.terms.size() != model.idf.size() ||
      model.terms.size() != model.document_frequency.size()) {
    throw DataError(path + ": terms/df/idf length mismatch");
  }
  for (std::size_t i = 0; i < model.terms.size(); ++i) {
    model.term_to_index[model.terms[i]] = static_cast<std::int32_t>(i);
  }
  return model;
}

}  // namespace ulasan
