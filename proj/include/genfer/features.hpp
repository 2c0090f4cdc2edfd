#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "genfer/corpus.hpp"
#include "genfer/lexicon.hpp"
#include "genfer/neighborhood.hpp"
#include "genfer/normalizer.hpp"

namespace genfer {

enum class FeatureFamily { Behavior, Linguistic, Neighborhood };

struct FeatureSchema {
  std::vector<std::string> names;
  std::vector<FeatureFamily> family;

  std::size_t size() const { return names.size(); }
  // Short stable identifier of the feature layout, for mismatch reports.
  std::string fingerprint() const;
};

struct FeatureVector {
  std::vector<double> values;
};

struct FeatureToggles {
  bool behavior = true;
  bool linguistic = true;
  bool neighborhood = true;
  // Per-group neighborhood switches (only meaningful when neighborhood=true).
  bool nbr_age = true;
  bool nbr_gender = true;
  bool nbr_famous = true;

  bool any() const {
    return behavior || linguistic ||
           (neighborhood && (nbr_age || nbr_gender || nbr_famous));
  }
  std::string describe() const;
};

enum class CtDenominator { TotalFollowed, DaySpan };

struct FeatureConfig {
  int cap_n = 1000;  // most recent N tweets considered
  FeatureToggles toggles;
  CtDenominator ct_denominator = CtDenominator::TotalFollowed;
};

// --- Tweet-behavior features over the most recent cap_n tweets. C is the
// whole-day span between the first and last tweet of that window, clamped
// to 1; a user with no tweets scores 0.

double tweet_frequency(const UserRecord& user, int cap_n);
double hashtag_frequency(const UserRecord& user, int cap_n);
double avg_tweet_length(const UserRecord& user, int cap_n);
double retweet_frequency(const UserRecord& user, int cap_n);
double follower_following_ratio(const UserRecord& user);
double celebrity_following_tendency(
    const UserRecord& user,
    const std::unordered_map<std::string, CelebrityRecord>& celebrities,
    CtDenominator denominator = CtDenominator::TotalFollowed, int cap_n = 1000);

// --- Linguistic features: one usage rate per lexicon category (hits over
// Word tokens of the normalized window) plus an emoticon rate (emoticon
// tokens over all tokens). Length = |categories| + 1.
std::vector<double> linguistic_features(const UserRecord& user,
                                        const SpellDictionaries& dicts,
                                        const Lexicon& lex, int cap_n);

struct FeatureDeps {
  const SpellDictionaries* dicts = nullptr;
  const Lexicon* lex = nullptr;
  const std::unordered_map<std::string, CelebrityRecord>* celebrities = nullptr;
  const ProfileMap* profiles = nullptr;
};

FeatureSchema build_schema(const FeatureConfig& config, const Lexicon& lex);

FeatureVector assemble_vector(const UserRecord& user, const FeatureDeps& deps,
                              const FeatureConfig& config,
                              const FeatureSchema& schema);

struct FeatureMatrix {
  FeatureSchema schema;
  std::vector<std::vector<double>> rows;
  std::vector<Label> labels;
  std::vector<std::string> user_ids;
};

// Per-user extraction is pure, so rows are computed independently; the
// parallel path and the serial reference produce bit-identical matrices.
FeatureMatrix extract_features(const Dataset& ds, const FeatureDeps& deps,
                               const FeatureConfig& config, bool parallel = true);
FeatureMatrix extract_features_serial(const Dataset& ds, const FeatureDeps& deps,
                                      const FeatureConfig& config);

// CSV: header row of schema names plus trailing "label" column; values
// printed with 9 significant digits.
void write_feature_csv(const FeatureMatrix& m, std::ostream& out);

}  // namespace genfer
