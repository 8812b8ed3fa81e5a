#pragma once

#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace ulasan {

class EcsStemmer;

// Exact-match informal -> standard token map. Loaded from a two-column CSV
// (`informal,standard`); the bundled default carries 124 entries.
struct SlangDictionary {
  std::unordered_map<std::string, std::string> entries;

  static SlangDictionary load(const std::string& path);
};

// Lowercase stopword set; the bundled default carries 809 entries.
struct StopwordList {
  std::unordered_set<std::string> words;

  static StopwordList load(const std::string& path);
};

// Lowercases, drops URL/@mention/#hashtag tokens whole, strips everything
// that is not a letter, collapses whitespace. Letters are Latin-script
// alphabetic codepoints (ASCII, Latin-1, Latin Extended-A/B); ASCII and
// Latin-1 are case-mapped, and ASCII vowels followed by a combining
// grave/acute/circumflex/tilde/diaeresis are composed first. Idempotent.
std::string normalize_text(const std::string& text);

// Whitespace split of normalized text; never yields empty tokens.
std::vector<std::string> tokenize(const std::string& normalized);

// Single-pass exact replacement; replacements are not re-looked-up.
std::vector<std::string> replace_slang(const std::vector<std::string>& tokens,
                                       const SlangDictionary& dict);

std::vector<std::string> remove_stopwords(const std::vector<std::string>& tokens,
                                          const StopwordList& stops);

// The full five-step pipeline behind both classification tracks. Immutable
// after construction; safe for concurrent use across documents.
class Preprocessor {
 public:
  Preprocessor(SlangDictionary slang, StopwordList stopwords,
               const EcsStemmer* stemmer);

  // normalize -> tokenize -> slang -> stopwords -> stem (per token).
  // An empty result means the caller must drop the sample.
  std::vector<std::string> run(const std::string& text) const;

  const SlangDictionary& slang() const { return slang_; }
  const StopwordList& stopwords() const { return stopwords_; }

 private:
  SlangDictionary slang_;
  StopwordList stopwords_;
  const EcsStemmer* stemmer_;  // not owned; may be null to skip stemming
};

}  // namespace ulasan
