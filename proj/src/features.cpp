#include "genfer/features.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "genfer/utf8.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace genfer {

namespace {

// Window of the most recent cap_n tweets (tweets are stored oldest first).
std::pair<std::size_t, std::size_t> recent_window(const UserRecord& user,
                                                  int cap_n) {
  const std::size_t n = user.tweets.size();
  const std::size_t take = std::min<std::size_t>(n, std::max(cap_n, 1));
  return {n - take, n};
}

// Whole days between first and last tweet of the window, clamped to >= 1.
double window_day_span(const UserRecord& user, int cap_n) {
  auto [begin, end] = recent_window(user, cap_n);
  if (begin >= end) return 1.0;
  const std::int64_t span =
      user.tweets[end - 1].timestamp - user.tweets[begin].timestamp;
  const std::int64_t days = span / 86400;
  return days < 1 ? 1.0 : static_cast<double>(days);
}

}  // namespace

double tweet_frequency(const UserRecord& user, int cap_n) {
  auto [begin, end] = recent_window(user, cap_n);
  if (begin >= end) return 0.0;
  return static_cast<double>(end - begin) / window_day_span(user, cap_n);
}

double hashtag_frequency(const UserRecord& user, int cap_n) {
  auto [begin, end] = recent_window(user, cap_n);
  if (begin >= end) return 0.0;
  std::int64_t tags = 0;
  for (std::size_t i = begin; i < end; ++i)
    tags += static_cast<std::int64_t>(user.tweets[i].hashtags.size());
  return static_cast<double>(tags) / window_day_span(user, cap_n);
}

double avg_tweet_length(const UserRecord& user, int cap_n) {
  auto [begin, end] = recent_window(user, cap_n);
  if (begin >= end) return 0.0;
  std::int64_t total = 0;
  for (std::size_t i = begin; i < end; ++i)
    total += static_cast<std::int64_t>(utf8_length(user.tweets[i].text));
  return static_cast<double>(total) / static_cast<double>(end - begin);
}

double retweet_frequency(const UserRecord& user, int cap_n) {
  auto [begin, end] = recent_window(user, cap_n);
  if (begin >= end) return 0.0;
  std::int64_t rts = 0;
  for (std::size_t i = begin; i < end; ++i)
    if (user.tweets[i].is_retweet) ++rts;
  return static_cast<double>(rts) / window_day_span(user, cap_n);
}

double follower_following_ratio(const UserRecord& user) {
  const std::int64_t denom = std::max<std::int64_t>(1, user.friends_count);
  return static_cast<double>(user.followers_count) /
         static_cast<double>(denom);
}

double celebrity_following_tendency(
    const UserRecord& user,
    const std::unordered_map<std::string, CelebrityRecord>& celebrities,
    CtDenominator denominator, int cap_n) {
  std::int64_t popular = 0;
  for (const auto& id : user.followed_ids) {
    auto it = celebrities.find(id);
    if (it != celebrities.end() &&
        is_celebrity(it->second.followers_count, it->second.verified))
      ++popular;
  }
  if (denominator == CtDenominator::DaySpan)
    return static_cast<double>(popular) / window_day_span(user, cap_n);
  const std::int64_t total =
      std::max<std::int64_t>(1, static_cast<std::int64_t>(user.followed_ids.size()));
  return static_cast<double>(popular) / static_cast<double>(total);
}

std::vector<double> linguistic_features(const UserRecord& user,
                                        const SpellDictionaries& dicts,
                                        const Lexicon& lex, int cap_n) {
  auto [begin, end] = recent_window(user, cap_n);
  std::vector<std::int64_t> cat_counts(lex.categories.size(), 0);
  std::int64_t word_tokens = 0;
  std::int64_t all_tokens = 0;
  std::int64_t emoticons = 0;
  for (std::size_t i = begin; i < end; ++i) {
    const auto tokens = normalize_tokens(user.tweets[i].text, dicts);
    all_tokens += static_cast<std::int64_t>(tokens.size());
    for (const auto& t : tokens) {
      if (t.kind == TokenKind::Word) ++word_tokens;
      if (t.kind == TokenKind::Emoticon) ++emoticons;
    }
    const auto counts = category_counts(tokens, lex);
    for (std::size_t c = 0; c < counts.size(); ++c) cat_counts[c] += counts[c];
  }

  std::vector<double> out(lex.categories.size() + 1, 0.0);
  if (word_tokens > 0) {
    for (std::size_t c = 0; c < cat_counts.size(); ++c)
      out[c] = static_cast<double>(cat_counts[c]) /
               static_cast<double>(word_tokens);
  }
  if (all_tokens > 0)
    out.back() = static_cast<double>(emoticons) / static_cast<double>(all_tokens);
  return out;
}

std::string FeatureToggles::describe() const {
  std::string out;
  const auto add = [&](const std::string& s) {
    if (!out.empty()) out += ',';
    out += s;
  };
  if (behavior) add("behavior");
  if (linguistic) add("linguistic");
  if (neighborhood) {
    std::string groups;
    const auto add_group = [&](const std::string& g) {
      if (!groups.empty()) groups += ',';
      groups += g;
    };
    if (nbr_age) add_group("age");
    if (nbr_gender) add_group("gender");
    if (nbr_famous) add_group("famous");
    add("neighborhood[" + groups + "]");
  }
  return out.empty() ? "none" : out;
}

std::string FeatureSchema::fingerprint() const {
  // FNV-1a over the joined names; short and stable.
  std::uint64_t h = 1469598103934665603ULL;
  for (const auto& n : names) {
    for (char c : n) {
      h ^= static_cast<unsigned char>(c);
      h *= 1099511628211ULL;
    }
    h ^= '|';
    h *= 1099511628211ULL;
  }
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%zu:%016llx", names.size(),
                static_cast<unsigned long long>(h));
  return buf;
}

FeatureSchema build_schema(const FeatureConfig& config, const Lexicon& lex) {
  FeatureSchema s;
  const auto add = [&](const std::string& name, FeatureFamily fam) {
    s.names.push_back(name);
    s.family.push_back(fam);
  };
  if (config.toggles.behavior) {
    add("tweet_frequency", FeatureFamily::Behavior);
    add("hashtag_frequency", FeatureFamily::Behavior);
    add("avg_tweet_length", FeatureFamily::Behavior);
    add("retweet_frequency", FeatureFamily::Behavior);
    add("follower_following_ratio", FeatureFamily::Behavior);
    add("celebrity_following_tendency", FeatureFamily::Behavior);
  }
  if (config.toggles.linguistic) {
    for (const auto& cat : lex.categories)
      add("lex:" + cat, FeatureFamily::Linguistic);
    add("emoticon_rate", FeatureFamily::Linguistic);
  }
  if (config.toggles.neighborhood) {
    if (config.toggles.nbr_age) {
      for (int i = 0; i < kAgeBucketCount; ++i)
        add(std::string("nbr_age:") + age_bucket_name(static_cast<AgeBucket>(i)),
            FeatureFamily::Neighborhood);
    }
    if (config.toggles.nbr_gender) {
      add("nbr_gender:male", FeatureFamily::Neighborhood);
      add("nbr_gender:female", FeatureFamily::Neighborhood);
    }
    if (config.toggles.nbr_famous) {
      for (int i = 0; i < kFamousForCount; ++i)
        add(std::string("nbr_famous:") +
                famous_for_name(static_cast<FamousFor>(i)),
            FeatureFamily::Neighborhood);
    }
  }
  return s;
}

FeatureVector assemble_vector(const UserRecord& user, const FeatureDeps& deps,
                              const FeatureConfig& config,
                              const FeatureSchema& schema) {
  FeatureVector v;
  v.values.reserve(schema.size());

  if (config.toggles.behavior) {
    v.values.push_back(tweet_frequency(user, config.cap_n));
    v.values.push_back(hashtag_frequency(user, config.cap_n));
    v.values.push_back(avg_tweet_length(user, config.cap_n));
    v.values.push_back(retweet_frequency(user, config.cap_n));
    v.values.push_back(follower_following_ratio(user));
    v.values.push_back(celebrity_following_tendency(
        user, *deps.celebrities, config.ct_denominator, config.cap_n));
  }
  if (config.toggles.linguistic) {
    for (double x : linguistic_features(user, *deps.dicts, *deps.lex, config.cap_n))
      v.values.push_back(x);
  }
  if (config.toggles.neighborhood) {
    const NeighborhoodFeatures nf =
        aggregate_neighborhood(user, *deps.celebrities, *deps.profiles);
    if (config.toggles.nbr_age)
      for (double x : nf.age_props) v.values.push_back(x);
    if (config.toggles.nbr_gender)
      for (double x : nf.gender_props) v.values.push_back(x);
    if (config.toggles.nbr_famous)
      for (double x : nf.famous_props) v.values.push_back(x);
  }

  if (v.values.size() != schema.size())
    throw std::logic_error("feature vector length does not match schema");
  for (double x : v.values) {
    if (!std::isfinite(x))
      throw std::logic_error("non-finite feature for user " + user.user_id);
  }
  return v;
}

FeatureMatrix extract_features_serial(const Dataset& ds, const FeatureDeps& deps,
                                      const FeatureConfig& config) {
  FeatureMatrix m;
  m.schema = build_schema(config, *deps.lex);
  m.rows.reserve(ds.users.size());
  for (const auto& u : ds.users) {
    m.rows.push_back(assemble_vector(u, deps, config, m.schema).values);
    m.labels.push_back(u.label);
    m.user_ids.push_back(u.user_id);
  }
  return m;
}

FeatureMatrix extract_features(const Dataset& ds, const FeatureDeps& deps,
                               const FeatureConfig& config, bool parallel) {
  if (!parallel) return extract_features_serial(ds, deps, config);

  FeatureMatrix m;
  m.schema = build_schema(config, *deps.lex);
  const std::int64_t n = static_cast<std::int64_t>(ds.users.size());
  m.rows.resize(n);
  m.labels.resize(n);
  m.user_ids.resize(n);

  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < n; ++i) {
    try {
      m.rows[i] = assemble_vector(ds.users[i], deps, config, m.schema).values;
      m.labels[i] = ds.users[i].label;
      m.user_ids[i] = ds.users[i].user_id;
    } catch (...) {
#pragma omp critical
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return m;
}

void write_feature_csv(const FeatureMatrix& m, std::ostream& out) {
  for (std::size_t i = 0; i < m.schema.names.size(); ++i) {
    if (i) out << ',';
    out << m.schema.names[i];
  }
  out << ",label\n";
  char buf[64];
  for (std::size_t r = 0; r < m.rows.size(); ++r) {
    for (std::size_t c = 0; c < m.rows[r].size(); ++c) {
      std::snprintf(buf, sizeof(buf), "%.9g", m.rows[r][c]);
      if (c) out << ',';
      out << buf;
    }
    out << ',' << label_name(m.labels[r]) << '\n';
  }
}

}  // namespace genfer
