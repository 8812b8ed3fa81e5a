#pragma once

#include <regex>
#include <string>
#include <unordered_set>
#include <vector>

namespace ulasan {

struct RootDictionary {
  std::unordered_set<std::string> roots;

  bool contains(const std::string& word) const { return roots.count(word) > 0; }
  static RootDictionary load(const std::string& path);
};

// One row of the shipped rule table. For suffix kinds the pattern is the
// affix itself; for derivational prefixes it is an anchored regex whose
// candidate templates use $1..$9 capture references. File order is part of
// the stemmer's contract.
struct StemRule {
  enum class Kind { ParticleSuffix, PossessiveSuffix, DerivationalSuffix, DerivationalPrefix };
  Kind kind;
  int group = 0;
  std::string pattern;
  std::vector<std::string> candidates;
};

std::vector<StemRule> load_stem_rules(const std::string& path);

// Dictionary-driven confix stripping for Indonesian morphology:
//   1. dictionary short-circuit (words of length <= 3 are never stemmed)
//   2. strip inflectional particles (-lah/-kah/-tah/-pun), check dictionary
//   3. strip possessive pronouns (-ku/-mu/-nya), check
//   4. strip derivational suffixes (-i/-kan/-an families), check; disallowed
//      prefix/suffix pairs are skipped
//   5. strip derivational prefixes (di-/ke-/se- plus the ber-/ter-/me-/pe-
//      morphophonemic families) for up to three passes, trying recoding
//      candidates in rule order and checking the dictionary after each
//   6. on failure, restore stripped suffixes in reverse order (loop-back)
//      and retry prefix stripping
//   7. if no dictionary root is ever reached, return the original word
// Words matching be-...-lah, be-...-an, me-...-i, di-...-i, pe-...-i or
// ter-...-i get prefix removal tried before suffixes.
class EcsStemmer {
 public:
  EcsStemmer(RootDictionary roots, const std::vector<StemRule>& rules);

  // Total function; never returns an empty string. Expects a lowercase,
  // letters-only token.
  std::string stem(const std::string& word) const;

  const RootDictionary& dictionary() const { return roots_; }

 private:
  struct PrefixCandidate {
    std::regex pattern;
    std::string template_;
  };
  struct PrefixGroup {
    int group;
    std::vector<PrefixCandidate> candidates;
  };

  RootDictionary roots_;
  std::vector<std::string> particle_suffixes_;
  std::vector<std::string> possessive_suffixes_;
  std::vector<std::string> derivational_suffixes_;
  std::vector<PrefixGroup> prefix_groups_;
  std::vector<std::regex> precedence_;

  friend class StemContext;
};

}  // namespace ulasan
