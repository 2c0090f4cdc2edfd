#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "genfer/corpus.hpp"
#include "genfer/lexicon.hpp"

namespace genfer {

// Corpus generator with class-conditional signal planted per feature family.
// Every effect is in [0, 1]: 0 makes the two classes exchangeable for that
// family, 1 is the strongest separation. Generation is deterministic for a
// fixed (config, seed) pair.
struct SyntheticConfig {
  int users_per_class = 200;
  double tweets_per_user = 60.0;    // Poisson mean
  double followed_per_user = 40.0;  // Poisson mean
  int celebrity_pool = 120;
  int span_days = 120;  // base archive span in days
  Date reference_date{2013, 6, 1};

  double behavior_effect = 0.0;     // rates: tweet/hashtag/retweet/length/CT
  double lexicon_effect = 0.0;      // category word preferences + emoticons
  double gender_comp_effect = 0.0;  // gender mix of followed celebrities
  double age_comp_effect = 0.0;     // age mix of followed celebrities
  double famous_comp_effect = 0.0;  // famous-for mix of followed celebrities

  // Lexicon categories favored by each class; empty means the built-in
  // defaults (resolved against the loaded lexicon, unknown names are errors).
  std::vector<std::string> female_categories;
  std::vector<std::string> male_categories;
};

Dataset generate_synthetic(const SyntheticConfig& config, const Lexicon& lex,
                           std::uint64_t seed);

}  // namespace genfer
