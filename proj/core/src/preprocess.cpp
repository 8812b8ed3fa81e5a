#include "ulasan/preprocess.hpp"

#include <fstream>

#include "ulasan/csv.hpp"
#include "ulasan/errors.hpp"
#include "ulasan/stemmer.hpp"

namespace ulasan {

SlangDictionary SlangDictionary::load(const std::string& path) {
  csv::Table table = csv::read_file(path);
  auto from = table.column("informal");
  auto to = table.column("standard");
  if (!from || !to) {
    throw DataError(path + ": slang dictionary needs 'informal' and 'standard' columns");
  }
  SlangDictionary dict;
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto& fields = table.rows[r];
    if (fields.size() <= std::max(*from, *to)) {
      throw DataError(path + ": row " + std::to_string(r + 2) + " has too few fields");
    }
    dict.entries[fields[*from]] = fields[*to];
  }
  return dict;
}

StopwordList StopwordList::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError(path + ": cannot open file");
  StopwordList list;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) list.words.insert(line);
  }
  return list;
}

namespace {

// -- Minimal UTF-8 / Latin-script handling ----------------------------------

struct Decoded {
  char32_t cp;
  int len;
};

Decoded decode_utf8(const std::string& s, std::size_t i) {
  const unsigned char b0 = s[i];
  if (b0 < 0x80) return {b0, 1};
  auto cont = [&](std::size_t k) {
    return i + k < s.size() && (static_cast<unsigned char>(s[i + k]) & 0xC0) == 0x80;
  };
  auto bits = [&](std::size_t k) {
    return static_cast<char32_t>(static_cast<unsigned char>(s[i + k]) & 0x3F);
  };
  if ((b0 & 0xE0) == 0xC0 && cont(1)) {
    return {static_cast<char32_t>((b0 & 0x1F) << 6) | bits(1), 2};
  }
  if ((b0 & 0xF0) == 0xE0 && cont(1) && cont(2)) {
    return {static_cast<char32_t>((b0 & 0x0F) << 12) | (bits(1) << 6) | bits(2), 3};
  }
  if ((b0 & 0xF8) == 0xF0 && cont(1) && cont(2) && cont(3)) {
    return {static_cast<char32_t>((b0 & 0x07) << 18) | (bits(1) << 12) |
                (bits(2) << 6) | bits(3),
            4};
  }
  return {0xFFFD, 1};  // invalid byte, treated as a non-letter
}

void encode_utf8(char32_t cp, std::string& out) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

bool is_letter(char32_t cp) {
  if ((cp >= 'a' && cp <= 'z') || (cp >= 'A' && cp <= 'Z')) return true;
  if (cp >= 0xC0 && cp <= 0xFF && cp != 0xD7 && cp != 0xF7) return true;  // Latin-1
  if (cp >= 0x100 && cp <= 0x24F) return true;  // Latin Extended-A/B
  return false;
}

char32_t to_lower(char32_t cp) {
  if (cp >= 'A' && cp <= 'Z') return cp + 0x20;
  if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return cp + 0x20;
  return cp;
}

// Composition of ASCII vowels (and n) with the common combining accents into
// their precomposed Latin-1 forms.
char32_t compose(char32_t base, char32_t mark) {
  static constexpr struct { char b; char32_t mark; char32_t out; } kTable[] = {
      {'a', 0x300, 0xE0}, {'a', 0x301, 0xE1}, {'a', 0x302, 0xE2}, {'a', 0x303, 0xE3},
      {'a', 0x308, 0xE4}, {'e', 0x300, 0xE8}, {'e', 0x301, 0xE9}, {'e', 0x302, 0xEA},
      {'e', 0x308, 0xEB}, {'i', 0x300, 0xEC}, {'i', 0x301, 0xED}, {'i', 0x302, 0xEE},
      {'i', 0x308, 0xEF}, {'o', 0x300, 0xF2}, {'o', 0x301, 0xF3}, {'o', 0x302, 0xF4},
      {'o', 0x303, 0xF5}, {'o', 0x308, 0xF6}, {'u', 0x300, 0xF9}, {'u', 0x301, 0xFA},
      {'u', 0x302, 0xFB}, {'u', 0x308, 0xFC}, {'n', 0x303, 0xF1},
  };
  for (const auto& row : kTable) {
    if (static_cast<char32_t>(row.b) == base && row.mark == mark) return row.out;
  }
  return 0;
}

bool is_noise_token(const std::string& token) {
  if (token.empty()) return false;
  if (token[0] == '@' || token[0] == '#') return true;
  if (token.rfind("http", 0) == 0 || token.rfind("www", 0) == 0) return true;
  // Uppercased variants reach here pre-lowercasing.
  if (token.rfind("HTTP", 0) == 0 || token.rfind("WWW", 0) == 0) return true;
  return false;
}

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v';
}

}  // namespace

std::string normalize_text(const std::string& text) {
  // Pass 1: drop URL/mention/hashtag tokens whole (whitespace-delimited).
  std::string kept;
  kept.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    if (is_space(text[i])) {
      kept += ' ';
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && !is_space(text[j])) ++j;
    std::string token = text.substr(i, j - i);
    if (!is_noise_token(token)) kept += token;
    kept += ' ';
    i = j;
  }

  // Pass 2: lowercase, compose accents, keep letters, squeeze spaces.
  std::string out;
  out.reserve(kept.size());
  bool pending_space = false;
  for (std::size_t k = 0; k < kept.size();) {
    Decoded d = decode_utf8(kept, k);
    k += d.len;
    char32_t cp = to_lower(d.cp);
    if (cp >= 'a' && cp <= 'z' && k < kept.size()) {
      Decoded next = decode_utf8(kept, k);
      if (char32_t composed = compose(cp, next.cp)) {
        cp = composed;
        k += next.len;
      }
    }
    if (is_letter(cp)) {
      if (pending_space && !out.empty()) out += ' ';
      pending_space = false;
      encode_utf8(cp, out);
    } else {
      pending_space = true;
    }
  }
  return out;
}

std::vector<std::string> tokenize(const std::string& normalized) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < normalized.size()) {
    std::size_t j = normalized.find(' ', i);
    if (j == std::string::npos) j = normalized.size();
    if (j > i) tokens.push_back(normalized.substr(i, j - i));
    i = j + 1;
  }
  return tokens;
}

std::vector<std::string> replace_slang(const std::vector<std::string>& tokens,
                                       const SlangDictionary& dict) {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const auto& tok : tokens) {
    auto it = dict.entries.find(tok);
    out.push_back(it != dict.entries.end() ? it->second : tok);
  }
  return out;
}

std::vector<std::string> remove_stopwords(const std::vector<std::string>& tokens,
                                          const StopwordList& stops) {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const auto& tok : tokens) {
    if (!stops.words.count(tok)) out.push_back(tok);
  }
  return out;
}

Preprocessor::Preprocessor(SlangDictionary slang, StopwordList stopwords,
                           const EcsStemmer* stemmer)
    : slang_(std::move(slang)), stopwords_(std::move(stopwords)), stemmer_(stemmer) {}

std::vector<std::string> Preprocessor::run(const std::string& text) const {
  auto tokens = tokenize(normalize_text(text));
  tokens = replace_slang(tokens, slang_);
  tokens = remove_stopwords(tokens, stopwords_);
  if (stemmer_) {
    for (auto& tok : tokens) tok = stemmer_->stem(tok);
  }
  return tokens;
}

}  // namespace ulasan
