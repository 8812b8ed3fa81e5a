#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ulasan {

struct RawReview {
  std::string text;
  int rating = 0;  // stars, 1..5
};

enum class SentimentLabel : int { Negatif = 0, Netral = 1, Positif = 2 };
inline constexpr int kNumClasses = 3;

const char* label_name(SentimentLabel label);
SentimentLabel label_from_name(const std::string& name);

struct LabeledSample {
  std::string text;
  SentimentLabel label = SentimentLabel::Netral;
  std::vector<std::string> tokens;  // filled by the preprocessing pipeline
};

struct DatasetSplit {
  std::vector<LabeledSample> train;
  std::vector<LabeledSample> validation;
  std::vector<LabeledSample> test;
  std::uint64_t seed = 0;
};

// Ratings 1-2 -> Negatif, 3 -> Netral, 4-5 -> Positif.
SentimentLabel map_rating_to_label(int rating);

// Trims surrounding ASCII whitespace, drops empty texts, collapses exact
// duplicate texts (first occurrence kept), attaches labels.
std::vector<LabeledSample> clean_dataset(const std::vector<RawReview>& rows);

// Largest-remainder apportionment of `total` into buckets proportional to
// `counts`. Ties broken by lower bucket index. Exposed because the stratified
// operations are specified in terms of it.
std::vector<std::size_t> apportion_largest_remainder(
    const std::vector<std::size_t>& counts, std::size_t total);

DatasetSplit stratified_split(const std::vector<LabeledSample>& data,
                              double train_fraction, double validation_fraction,
                              double test_fraction, std::uint64_t seed);

std::vector<LabeledSample> stratified_subsample(
    const std::vector<LabeledSample>& data, std::size_t n, std::uint64_t seed);

std::vector<std::size_t> class_counts(const std::vector<LabeledSample>& data);

// CSV ingestion: requires header columns `Ulasan` and `Rating`; extra columns
// ignored; unparseable ratings rejected with the offending row number.
std::vector<RawReview> read_reviews_csv(const std::string& path);

// Persists samples as `Ulasan,Rating?,label[,tokens]`. Rating is written when
// `ratings` is non-null (parallel to samples). Tokens are space-joined when
// `with_tokens` is set.
void write_samples_csv(const std::string& path,
                       const std::vector<LabeledSample>& samples,
                       const std::vector<int>* ratings, bool with_tokens);

struct LoadedSamples {
  std::vector<LabeledSample> samples;
  std::vector<int> ratings;  // empty if the file had no Rating column
};

// Reads a samples CSV as produced by write_samples_csv (label column
// required; tokens column optional).
LoadedSamples read_samples_csv(const std::string& path);

}  // namespace ulasan
