#include "ulasan/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "ulasan/csv.hpp"
#include "ulasan/errors.hpp"
#include "ulasan/rng.hpp"

namespace ulasan {

const char* label_name(SentimentLabel label) {
  switch (label) {
    case SentimentLabel::Negatif: return "Negatif";
    case SentimentLabel::Netral: return "Netral";
    case SentimentLabel::Positif: return "Positif";
  }
  throw InternalError("invalid sentiment label code");
}

SentimentLabel label_from_name(const std::string& name) {
  if (name == "Negatif") return SentimentLabel::Negatif;
  if (name == "Netral") return SentimentLabel::Netral;
  if (name == "Positif") return SentimentLabel::Positif;
  throw DataError("unknown label value '" + name + "'");
}

SentimentLabel map_rating_to_label(int rating) {
  if (rating < 1 || rating > 5) {
    throw DataError("rating " + std::to_string(rating) + " outside 1..5");
  }
  if (rating <= 2) return SentimentLabel::Negatif;
  if (rating == 3) return SentimentLabel::Netral;
  return SentimentLabel::Positif;
}

namespace {

std::string trim(const std::string& s) {
  const char* ws = " \t\r\n\f\v";
  auto b = s.find_first_not_of(ws);
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

}  // namespace

std::vector<LabeledSample> clean_dataset(const std::vector<RawReview>& rows) {
  std::vector<LabeledSample> out;
  std::unordered_set<std::string> seen;
  out.reserve(rows.size());
  for (const auto& row : rows) {
    std::string text = trim(row.text);
    if (text.empty()) continue;
    if (!seen.insert(text).second) continue;
    out.push_back(LabeledSample{std::move(text), map_rating_to_label(row.rating), {}});
  }
  return out;
}

std::vector<std::size_t> apportion_largest_remainder(
    const std::vector<std::size_t>& counts, std::size_t total) {
  const std::size_t sum = std::accumulate(counts.begin(), counts.end(), std::size_t{0});
  if (sum == 0) {
    if (total != 0) throw DataError("cannot apportion into empty buckets");
    return std::vector<std::size_t>(counts.size(), 0);
  }
  std::vector<std::size_t> quota(counts.size(), 0);
  std::vector<std::pair<double, std::size_t>> remainders;  // (-frac, index)
  std::size_t assigned = 0;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    const double ideal = static_cast<double>(counts[i]) *
                         static_cast<double>(total) / static_cast<double>(sum);
    quota[i] = static_cast<std::size_t>(std::floor(ideal));
    assigned += quota[i];
    remainders.emplace_back(-(ideal - std::floor(ideal)), i);
  }
  std::stable_sort(remainders.begin(), remainders.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t k = 0; assigned < total; ++k) {
    quota[remainders[k % remainders.size()].second] += 1;
    ++assigned;
  }
  return quota;
}

std::vector<std::size_t> class_counts(const std::vector<LabeledSample>& data) {
  std::vector<std::size_t> counts(kNumClasses, 0);
  for (const auto& s : data) counts[static_cast<int>(s.label)] += 1;
  return counts;
}

DatasetSplit stratified_split(const std::vector<LabeledSample>& data,
                              double train_fraction, double validation_fraction,
                              double test_fraction, std::uint64_t seed) {
  const double fractions[3] = {train_fraction, validation_fraction, test_fraction};
  double fsum = 0.0;
  for (double f : fractions) {
    if (f < 0.0 || f > 1.0) throw ConfigError("split fractions must lie in [0, 1]");
    fsum += f;
  }
  if (std::abs(fsum - 1.0) > 1e-9) {
    throw ConfigError("split fractions must sum to 1 (got " + std::to_string(fsum) + ")");
  }

  // Per-class member indices, shuffled once with the seeded generator.
  std::vector<std::vector<std::size_t>> members(kNumClasses);
  for (std::size_t i = 0; i < data.size(); ++i) {
    members[static_cast<int>(data[i].label)].push_back(i);
  }
  Rng rng = make_rng(derive_seed(seed, "stratified-split"));
  for (auto& m : members) shuffle(m, rng);

  DatasetSplit split;
  split.seed = seed;
  std::vector<LabeledSample>* outs[3] = {&split.train, &split.validation, &split.test};
  for (int c = 0; c < kNumClasses; ++c) {
    const std::size_t n_c = members[c].size();
    if (n_c == 0) continue;
    // Largest remainder over split fractions for this class.
    std::size_t quota[3];
    std::size_t assigned = 0;
    std::pair<double, int> rem[3];
    for (int s = 0; s < 3; ++s) {
      const double ideal = fractions[s] * static_cast<double>(n_c);
      quota[s] = static_cast<std::size_t>(std::floor(ideal));
      assigned += quota[s];
      rem[s] = {-(ideal - std::floor(ideal)), s};
    }
    std::stable_sort(std::begin(rem), std::end(rem));
    for (std::size_t k = 0; assigned < n_c; ++k) {
      quota[rem[k % 3].second] += 1;
      ++assigned;
    }
    std::size_t cursor = 0;
    for (int s = 0; s < 3; ++s) {
      for (std::size_t k = 0; k < quota[s]; ++k) {
        outs[s]->push_back(data[members[c][cursor++]]);
      }
    }
  }
  return split;
}

std::vector<LabeledSample> stratified_subsample(
    const std::vector<LabeledSample>& data, std::size_t n, std::uint64_t seed) {
  if (n > data.size()) {
    throw DataError("subsample size " + std::to_string(n) + " exceeds dataset size " +
                    std::to_string(data.size()));
  }
  std::vector<std::vector<std::size_t>> members(kNumClasses);
  for (std::size_t i = 0; i < data.size(); ++i) {
    members[static_cast<int>(data[i].label)].push_back(i);
  }
  std::vector<std::size_t> counts(kNumClasses);
  for (int c = 0; c < kNumClasses; ++c) counts[c] = members[c].size();
  const auto quota = apportion_largest_remainder(counts, n);

  Rng rng = make_rng(derive_seed(seed, "stratified-subsample"));
  std::vector<LabeledSample> out;
  out.reserve(n);
  for (int c = 0; c < kNumClasses; ++c) {
    shuffle(members[c], rng);
    for (std::size_t k = 0; k < quota[c]; ++k) {
      out.push_back(data[members[c][k]]);
    }
  }
  return out;
}

std::vector<RawReview> read_reviews_csv(const std::string& path) {
  csv::Table table = csv::read_file(path);
  auto text_col = table.column("Ulasan");
  if (!text_col) throw DataError(path + ": missing required column 'Ulasan'");
  auto rating_col = table.column("Rating");
  if (!rating_col) throw DataError(path + ": missing required column 'Rating'");

  std::vector<RawReview> rows;
  rows.reserve(table.rows.size());
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto& fields = table.rows[r];
    const std::size_t row_number = r + 2;  // 1-based, after header
    if (fields.size() <= std::max(*text_col, *rating_col)) {
      throw DataError(path + ": row " + std::to_string(row_number) + " has too few fields");
    }
    const std::string& rating_str = fields[*rating_col];
    int rating = 0;
    try {
      std::size_t pos = 0;
      rating = std::stoi(rating_str, &pos);
      if (pos != rating_str.size()) throw std::invalid_argument("trailing chars");
    } catch (const std::exception&) {
      throw DataError(path + ": row " + std::to_string(row_number) +
                      ": unparseable Rating value '" + rating_str + "'");
    }
    if (rating < 1 || rating > 5) {
      throw DataError(path + ": row " + std::to_string(row_number) + ": Rating " +
                      std::to_string(rating) + " outside 1..5");
    }
    rows.push_back(RawReview{fields[*text_col], rating});
  }
  return rows;
}

void write_samples_csv(const std::string& path,
                       const std::vector<LabeledSample>& samples,
                       const std::vector<int>* ratings, bool with_tokens) {
  if (ratings && ratings->size() != samples.size()) {
    throw InternalError("ratings/samples size mismatch when writing " + path);
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError(path + ": cannot open file for writing");
  std::vector<std::string> row;
  row = {"Ulasan"};
  if (ratings) row.push_back("Rating");
  row.push_back("label");
  if (with_tokens) row.push_back("tokens");
  csv::write_row(out, row);
  for (std::size_t i = 0; i < samples.size(); ++i) {
    row = {samples[i].text};
    if (ratings) row.push_back(std::to_string((*ratings)[i]));
    row.push_back(label_name(samples[i].label));
    if (with_tokens) {
      std::string joined;
      for (std::size_t t = 0; t < samples[i].tokens.size(); ++t) {
        if (t) joined += ' ';
        joined += samples[i].tokens[t];
      }
      row.push_back(joined);
    }
    csv::write_row(out, row);
  }
}

LoadedSamples read_samples_csv(const std::string& path) {
  csv::Table table = csv::read_file(path);
  auto text_col = table.column("Ulasan");
  if (!text_col) throw DataError(path + ": missing required column 'Ulasan'");
  auto label_col = table.column("label");
  if (!label_col) throw DataError(path + ": missing required column 'label'");
  auto rating_col = table.column("Rating");
  auto tokens_col = table.column("tokens");

  LoadedSamples out;
  out.samples.reserve(table.rows.size());
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto& fields = table.rows[r];
    const std::size_t row_number = r + 2;
    if (fields.size() <= *label_col || fields.size() <= *text_col) {
      throw DataError(path + ": row " + std::to_string(row_number) + " has too few fields");
    }
    LabeledSample sample;
    sample.text = fields[*text_col];
    try {
      sample.label = label_from_name(fields[*label_col]);
    } catch (const DataError& e) {
      throw DataError(path + ": row " + std::to_string(row_number) + ": " + e.what());
    }
    if (tokens_col && *tokens_col < fields.size()) {
      std::istringstream ts(fields[*tokens_col]);
      std::string tok;
      while (ts >> tok) sample.tokens.push_back(tok);
    }
    if (rating_col && *rating_col < fields.size()) {
      out.ratings.push_back(std::stoi(fields[*rating_col]));
    }
    out.samples.push_back(std::move(sample));
  }
  if (!out.ratings.empty() && out.ratings.size() != out.samples.size()) {
    throw DataError(path + ": Rating column present on only some rows");
  }
  return out;
}

}  // namespace ulasan
