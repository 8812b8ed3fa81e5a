#include "ulasan/stemmer.hpp"

#include <fstream>
#include <sstream>

#include "ulasan/errors.hpp"

namespace ulasan {

RootDictionary RootDictionary::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError(path + ": cannot open file");
  RootDictionary dict;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) dict.roots.insert(line);
  }
  if (dict.roots.empty()) throw DataError(path + ": root dictionary is empty");
  return dict;
}

namespace {

StemRule::Kind parse_kind(const std::string& s, const std::string& origin) {
  if (s == "particle-suffix") return StemRule::Kind::ParticleSuffix;
  if (s == "possessive-suffix") return StemRule::Kind::PossessiveSuffix;
  if (s == "derivational-suffix") return StemRule::Kind::DerivationalSuffix;
  if (s == "derivational-prefix") return StemRule::Kind::DerivationalPrefix;
  throw DataError(origin + ": unknown rule kind '" + s + "'");
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::size_t i = 0;
  while (true) {
    std::size_t j = s.find(sep, i);
    if (j == std::string::npos) {
      parts.push_back(s.substr(i));
      break;
    }
    parts.push_back(s.substr(i, j - i));
    i = j + 1;
  }
  return parts;
}

std::string apply_template(const std::string& tmpl, const std::smatch& m) {
  std::string out;
  for (std::size_t i = 0; i < tmpl.size(); ++i) {
    if (tmpl[i] == '$' && i + 1 < tmpl.size() && tmpl[i + 1] >= '0' && tmpl[i + 1] <= '9') {
      const int g = tmpl[i + 1] - '0';
      if (g < static_cast<int>(m.size()) && m[g].matched) out += m[g].str();
      ++i;
    } else {
      out += tmpl[i];
    }
  }
  return out;
}

constexpr const char* kPrecedencePatterns[] = {
    "^be(.*)lah$", "^be(.*)an$", "^me(.*)i$", "^di(.*)i$", "^pe(.*)i$", "^ter(.*)i$",
};

// Prefix families whose combination with a derivational suffix is not a
// valid Indonesian confix; the suffix is left in place when one matches.
struct DisallowedPair {
  const char* prefix;
  const char* suffix;
};
constexpr DisallowedPair kDisallowedConfixes[] = {
    {"be", "i"}, {"di", "an"}, {"ke", "i"},  {"ke", "kan"},
    {"me", "an"}, {"se", "i"}, {"se", "kan"}, {"te", "an"},
};

bool starts_with(const std::string& s, const char* prefix) {
  return s.rfind(prefix, 0) == 0;
}

}  // namespace

std::vector<StemRule> load_stem_rules(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError(path + ": cannot open file");
  std::vector<StemRule> rules;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto fields = split(line, '\t');
    if (fields.size() != 4) {
      throw DataError(path + ": line " + std::to_string(line_no) +
                      ": expected 4 tab-separated fields");
    }
    StemRule rule;
    rule.kind = parse_kind(fields[0], path);
    rule.group = std::stoi(fields[1]);
    rule.pattern = fields[2];
    if (fields[3] != "-") rule.candidates = split(fields[3], '|');
    if (rule.pattern.empty()) {
      throw DataError(path + ": line " + std::to_string(line_no) + ": empty pattern");
    }
    rules.push_back(std::move(rule));
  }
  if (rules.empty()) throw DataError(path + ": no rules loaded");
  return rules;
}

EcsStemmer::EcsStemmer(RootDictionary roots, const std::vector<StemRule>& rules)
    : roots_(std::move(roots)) {
  for (const auto& rule : rules) {
    switch (rule.kind) {
      case StemRule::Kind::ParticleSuffix:
        particle_suffixes_.push_back(rule.pattern);
        break;
      case StemRule::Kind::PossessiveSuffix:
        possessive_suffixes_.push_back(rule.pattern);
        break;
      case StemRule::Kind::DerivationalSuffix:
        derivational_suffixes_.push_back(rule.pattern);
        break;
      case StemRule::Kind::DerivationalPrefix: {
        if (prefix_groups_.empty() || prefix_groups_.back().group != rule.group) {
          prefix_groups_.push_back(PrefixGroup{rule.group, {}});
        }
        for (const auto& tmpl : rule.candidates) {
          prefix_groups_.back().candidates.push_back(PrefixCandidate{
              std::regex(rule.pattern, std::regex::ECMAScript), tmpl});
        }
        break;
      }
    }
  }
  for (const char* p : kPrecedencePatterns) {
    precedence_.emplace_back(p, std::regex::ECMAScript);
  }
}

namespace {

enum class AffixType { Particle, Possessive, DerivSuffix, DerivPrefix };

struct Removal {
  std::string original;
  std::string result;
  std::string removed;
  AffixType type;
};

}  // namespace

class StemContext {
 public:
  StemContext(const EcsStemmer& s, std::string word)
      : s_(s), original_(word), current_(std::move(word)) {}

  std::string run() {
    process();
    return s_.roots_.contains(current_) ? current_ : original_;
  }

 private:
  const EcsStemmer& s_;
  std::string original_;
  std::string current_;
  std::vector<Removal> removals_;

  bool in_dict(const std::string& w) const { return s_.roots_.contains(w); }

  void process() {
    if (in_dict(current_)) return;
    bool precedence = false;
    for (const auto& re : s_.precedence_) {
      if (std::regex_match(original_, re)) {
        precedence = true;
        break;
      }
    }
    if (precedence) {
      remove_prefixes();
      if (in_dict(current_)) return;
      remove_suffixes();
      if (in_dict(current_)) return;
      current_ = original_;
      removals_.clear();
    }
    remove_suffixes();
    if (in_dict(current_)) return;
    remove_prefixes();
    if (in_dict(current_)) return;
    loop_restore_suffixes();
  }

  bool suffix_allowed(const std::string& suffix) const {
    for (const auto& pair : kDisallowedConfixes) {
      if (starts_with(original_, pair.prefix) && suffix == pair.suffix) return false;
    }
    return true;
  }

  void strip_suffix(const std::vector<std::string>& suffixes, AffixType type) {
    for (const auto& suf : suffixes) {
      if (current_.size() > suf.size() &&
          current_.compare(current_.size() - suf.size(), suf.size(), suf) == 0) {
        if (type == AffixType::DerivSuffix && !suffix_allowed(suf)) continue;
        std::string result = current_.substr(0, current_.size() - suf.size());
        removals_.push_back(Removal{current_, result, suf, type});
        current_ = std::move(result);
        return;
      }
    }
  }

  void remove_suffixes() {
    strip_suffix(s_.particle_suffixes_, AffixType::Particle);
    if (in_dict(current_)) return;
    strip_suffix(s_.possessive_suffixes_, AffixType::Possessive);
    if (in_dict(current_)) return;
    strip_suffix(s_.derivational_suffixes_, AffixType::DerivSuffix);
  }

  // Candidates are tried in rule order; the first dictionary hit wins. When
  // none hits, the result of the last evaluated candidate (if it matched) is
  // still applied so later passes and the loop-back see the stripped form.
  bool apply_group(const EcsStemmer::PrefixGroup& group) {
    bool have_result = false;
    std::string result;
    for (const auto& cand : group.candidates) {
      std::smatch m;
      if (std::regex_match(current_, m, cand.pattern)) {
        have_result = true;
        result = apply_template(cand.template_, m);
        if (in_dict(result)) break;
      } else {
        have_result = false;
      }
    }
    if (!have_result) return false;
    std::string removed = result.size() < current_.size()
                              ? current_.substr(0, current_.size() - result.size())
                              : std::string();
    removals_.push_back(Removal{current_, result, removed, AffixType::DerivPrefix});
    current_ = std::move(result);
    return true;
  }

  void remove_prefixes() {
    for (int pass = 0; pass < 3; ++pass) {
      bool changed = false;
      for (const auto& group : s_.prefix_groups_) {
        if (apply_group(group)) {
          changed = true;
          break;
        }
      }
      if (in_dict(current_)) return;
      if (!changed) return;
    }
  }

  void loop_restore_suffixes() {
    for (const auto& removal : removals_) {
      if (removal.type == AffixType::DerivPrefix) {
        current_ = removal.original;
        break;
      }
    }
    std::vector<Removal> kept;
    for (auto& removal : removals_) {
      if (removal.type != AffixType::DerivPrefix) kept.push_back(std::move(removal));
    }
    removals_ = std::move(kept);
    const std::vector<Removal> base_removals = removals_;
    const std::string base_word = current_;

    for (auto it = base_removals.rbegin(); it != base_removals.rend(); ++it) {
      const Removal& removal = *it;
      if (removal.removed == "kan") {
        current_ = removal.result + "k";
        remove_prefixes();
        if (in_dict(current_)) return;
        current_ = removal.result + "kan";
      } else {
        current_ = removal.original;
      }
      remove_prefixes();
      if (in_dict(current_)) return;
      removals_ = base_removals;
      current_ = base_word;
    }
  }
};

std::string EcsStemmer::stem(const std::string& word) const {
  if (word.size() <= 3) return word;
  if (roots_.contains(word)) return word;
  StemContext ctx(*this, word);
  return ctx.run();
}

}  // namespace ulasan
