#include "genfer/synthetic.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

#include "genfer/neighborhood.hpp"
#include "genfer/normalizer.hpp"
#include "genfer/rng.hpp"
#include "genfer/utf8.hpp"

namespace genfer {

namespace {

const std::vector<std::string>& filler_words() {
  static const std::vector<std::string> words = {
      "the",  "and",  "a",     "to",   "of",    "in",   "it",    "is",
      "was",  "for",  "on",    "that", "with",  "at",   "by",    "from",
      "up",   "about", "into", "over", "after", "down", "then",  "so",
      "just", "really", "very", "still", "again", "here", "there", "when",
      "what", "going", "got",  "get",  "make",  "see",  "look",  "come",
      "back", "out",  "now",   "day",  "time",  "one",  "new",   "today"};
  return words;
}

const std::vector<std::string>& default_female_categories() {
  static const std::vector<std::string> cats = {"family", "friend", "posemo",
                                                "fashion", "social"};
  return cats;
}

const std::vector<std::string>& default_male_categories() {
  static const std::vector<std::string> cats = {"money", "technology", "sports",
                                                "politics", "swear"};
  return cats;
}

const std::vector<std::string>& tweet_emoticons() {
  static const std::vector<std::string> emo = {":-)", ":)", "<3", ":D", ";)"};
  return emo;
}

const std::vector<std::string>& tweet_shorthands() {
  static const std::vector<std::string> sh = {"idk", "btw", "omw", "tbh",
                                              "brb", "thx", "np",  "rn"};
  return sh;
}

struct CategoryPool {
  std::vector<std::string> words;  // literal words usable in tweets
};

std::vector<CategoryPool> resolve_pools(const std::vector<std::string>& names,
                                        const Lexicon& lex) {
  std::vector<CategoryPool> pools;
  for (const auto& name : names) {
    const auto it = std::find(lex.categories.begin(), lex.categories.end(), name);
    if (it == lex.categories.end())
      throw std::invalid_argument("generate_synthetic: unknown lexicon category '" +
                                  name + "'");
    const int idx = static_cast<int>(it - lex.categories.begin());
    CategoryPool pool;
    for (const auto& [word, cats] : lex.literals) {
      if (std::find(cats.begin(), cats.end(), idx) != cats.end())
        pool.words.push_back(word);
    }
    if (pool.words.empty())
      throw std::invalid_argument(
          "generate_synthetic: lexicon category has no literal words: " + name);
    std::sort(pool.words.begin(), pool.words.end());
    pools.push_back(std::move(pool));
  }
  return pools;
}

std::string pick(const std::vector<std::string>& v, Rng& rng) {
  return v[static_cast<std::size_t>(rng.uniform_int(v.size()))];
}

std::string pick_from_pools(const std::vector<CategoryPool>& pools, Rng& rng) {
  const auto& pool = pools[static_cast<std::size_t>(rng.uniform_int(pools.size()))];
  return pick(pool.words, rng);
}

std::string capitalized(std::string w) {
  if (!w.empty() && w[0] >= 'a' && w[0] <= 'z')
    w[0] = static_cast<char>(w[0] - 'a' + 'A');
  return w;
}

// Corrupt a word by doubling its final letter, but only when the corruption
// keeps the metaphone code (so the cleaner can undo it).
std::string maybe_misspell(const std::string& w, Rng& rng) {
  if (!rng.bernoulli(0.05)) return w;
  if (w.size() < 4 || !is_all_ascii_alpha(w) || ascii_lower(w.back()) == 'c')
    return w;
  const std::string corrupted = w + w.back();
  if (metaphone(corrupted) != metaphone(w)) return w;
  return corrupted;
}

struct CelebPlan {
  CelebrityRecord record;
  CelebGender gender = CelebGender::Neutral;
  AgeBucket age = AgeBucket::UnknownAge;
  FamousFor famous = FamousFor::Miscellaneous;
};

struct FamousTerms {
  FamousFor category;
  std::vector<std::string> terms;
};

const std::vector<FamousTerms>& famous_term_table() {
  static const std::vector<FamousTerms> table = {
      {FamousFor::Acting, {"actor", "actress"}},
      {FamousFor::Art, {"painter", "photographer", "designer"}},
      {FamousFor::Entertainment, {"comedian", "host", "model"}},
      {FamousFor::Entrepreneur, {"entrepreneur", "founder", "investor"}},
      {FamousFor::Writing, {"writer", "author", "journalist"}},
      {FamousFor::Music, {"singer", "musician", "rapper"}},
      {FamousFor::Politics, {"politician", "senator", "governor"}},
      {FamousFor::Religious, {"pastor", "preacher"}},
      {FamousFor::ScienceTech, {"scientist", "engineer", "programmer"}},
      {FamousFor::Security, {"general", "soldier"}},
      {FamousFor::Social, {"activist", "philanthropist"}},
      {FamousFor::Sports, {"cricketer", "footballer", "athlete"}},
      {FamousFor::Miscellaneous, {"personality"}},
  };
  return table;
}

std::string celebrity_bio(CelebGender gender, const std::string& occupation,
                          Rng& rng) {
  const int variant = static_cast<int>(rng.uniform_int(2));
  char buf[256];
  switch (gender) {
    case CelebGender::Male:
      if (variant == 0)
        std::snprintf(buf, sizeof(buf),
                      "He is a %s. His work has won him many fans.",
                      occupation.c_str());
      else
        std::snprintf(buf, sizeof(buf),
                      "Known as a %s, he built his career on talent that made "
                      "him famous.",
                      occupation.c_str());
      break;
    case CelebGender::Female:
      if (variant == 0)
        std::snprintf(buf, sizeof(buf),
                      "She is a %s. Her work has won her many fans.",
                      occupation.c_str());
      else
        std::snprintf(buf, sizeof(buf),
                      "Known as a %s, she built her career on talent that made "
                      "her famous.",
                      occupation.c_str());
      break;
    case CelebGender::Neutral:
      std::snprintf(buf, sizeof(buf),
                    "Official account. News, updates and more about one %s.",
                    occupation.c_str());
      break;
  }
  return buf;
}

std::vector<CelebPlan> build_celebrity_pool(const SyntheticConfig& cfg,
                                            Rng& rng) {
  std::vector<CelebPlan> pool;
  pool.reserve(cfg.celebrity_pool);
  const auto& table = famous_term_table();
  for (int i = 0; i < cfg.celebrity_pool; ++i) {
    CelebPlan plan;
    char id[32];
    std::snprintf(id, sizeof(id), "celeb_%04d", i);
    plan.record.user_id = id;

    // Fixed 45/45/10 gender composition.
    const int slot = i % 20;
    plan.gender = slot < 9    ? CelebGender::Male
                  : slot < 18 ? CelebGender::Female
                              : CelebGender::Neutral;

    // Age distribution; one slot in ten has no known birth year.
    const double age_weights[] = {0.16, 0.24, 0.24, 0.14, 0.12, 0.10};
    const std::size_t bucket = rng.weighted_index(
        std::vector<double>(age_weights, age_weights + 6));
    int age = 0;
    switch (bucket) {
      case 0: age = 16 + static_cast<int>(rng.uniform_int(7)); break;   // <23
      case 1: age = 23 + static_cast<int>(rng.uniform_int(8)); break;   // 23-30
      case 2: age = 31 + static_cast<int>(rng.uniform_int(10)); break;  // 31-40
      case 3: age = 41 + static_cast<int>(rng.uniform_int(10)); break;  // 41-50
      case 4: age = 51 + static_cast<int>(rng.uniform_int(25)); break;  // >50
      default: age = -1; break;                                         // unknown
    }
    if (age > 0) {
      plan.age = age < 23   ? AgeBucket::Under23
                 : age <= 30 ? AgeBucket::A23to30
                 : age <= 40 ? AgeBucket::A30to40
                 : age <= 50 ? AgeBucket::A40to50
                             : AgeBucket::Over50;
      plan.record.birth_year = cfg.reference_date.year - age;
    }

    const auto& famous = table[rng.uniform_int(table.size())];
    plan.famous = famous.category;
    plan.record.occupation_terms.push_back(pick(famous.terms, rng));
    if (rng.bernoulli(0.3))
      plan.record.occupation_terms.push_back(pick(famous.terms, rng));

    plan.record.biography =
        celebrity_bio(plan.gender, plan.record.occupation_terms.front(), rng);

    if (rng.bernoulli(0.15)) {
      plan.record.verified = true;
      plan.record.followers_count = 500 + static_cast<std::int64_t>(rng.uniform_int(8000));
    } else {
      plan.record.verified = rng.bernoulli(0.25);
      plan.record.followers_count =
          10001 + static_cast<std::int64_t>(rng.uniform_int(5000000));
    }
    pool.push_back(std::move(plan));
  }
  return pool;
}

// Class-conditional sampling weight for one celebrity.
double follow_weight(const CelebPlan& c, bool female_user,
                     const SyntheticConfig& cfg) {
  double w = 1.0;

  const double dg = 0.4 * cfg.gender_comp_effect;
  if (c.gender == CelebGender::Neutral) {
    w *= 0.25;
  } else {
    const bool same = (c.gender == CelebGender::Female) == female_user;
    w *= same ? 1.0 + dg : 1.0 - dg;
  }

  const double da = 0.5 * cfg.age_comp_effect;
  const double sign = female_user ? 1.0 : -1.0;
  switch (c.age) {
    case AgeBucket::Under23: w *= 1.0 + sign * da; break;
    case AgeBucket::A23to30: w *= 1.0 + sign * da * 0.5; break;
    case AgeBucket::A40to50: w *= 1.0 - sign * da * 0.5; break;
    case AgeBucket::Over50: w *= 1.0 - sign * da; break;
    default: break;
  }

  const double df = 0.5 * cfg.famous_comp_effect;
  switch (c.famous) {
    case FamousFor::Acting:
    case FamousFor::Music:
    case FamousFor::Entertainment:
    case FamousFor::Art:
    case FamousFor::Writing:
      w *= 1.0 + sign * df;
      break;
    case FamousFor::Sports:
    case FamousFor::ScienceTech:
    case FamousFor::Politics:
    case FamousFor::Entrepreneur:
    case FamousFor::Security:
      w *= 1.0 - sign * df;
      break;
    default:
      break;
  }
  return std::max(w, 1e-6);
}

}  // namespace

Dataset generate_synthetic(const SyntheticConfig& cfg, const Lexicon& lex,
                           std::uint64_t seed) {
  if (cfg.users_per_class < 10)
    throw std::invalid_argument(
        "generate_synthetic: need at least 10 users per class");
  if (cfg.tweets_per_user < 0 || cfg.followed_per_user < 0 ||
      cfg.celebrity_pool < 1 || cfg.span_days < 1)
    throw std::invalid_argument("generate_synthetic: bad configuration");

  const auto female_pools = resolve_pools(
      cfg.female_categories.empty() ? default_female_categories()
                                    : cfg.female_categories,
      lex);
  const auto male_pools = resolve_pools(
      cfg.male_categories.empty() ? default_male_categories()
                                  : cfg.male_categories,
      lex);

  Rng rng(seed);
  Dataset ds;
  ds.reference_date = cfg.reference_date;

  const auto pool = build_celebrity_pool(cfg, rng);
  for (const auto& plan : pool)
    ds.celebrities.emplace(plan.record.user_id, plan.record);

  const std::int64_t ref_seconds =
      days_from_civil(cfg.reference_date.year, cfg.reference_date.month,
                      cfg.reference_date.day) *
      86400;

  const int total_users = 2 * cfg.users_per_class;
  for (int u = 0; u < total_users; ++u) {
    const bool female = u >= cfg.users_per_class;
    UserRecord user;
    char id[32];
    std::snprintf(id, sizeof(id), "user_%04d", u);
    user.user_id = id;
    user.label = female ? Label::Female : Label::Male;

    const double be = cfg.behavior_effect;
    const double le = cfg.lexicon_effect;
    const double sgn = female ? 1.0 : -1.0;

    // Tweet archive. The class separation in tweets/day comes from the span.
    const int n_tweets = rng.poisson(cfg.tweets_per_user);
    const double span =
        cfg.span_days * (1.0 - sgn * 0.35 * be) * rng.uniform(0.9, 1.1);
    std::vector<std::int64_t> offsets;
    offsets.reserve(n_tweets);
    for (int t = 0; t < n_tweets; ++t)
      offsets.push_back(
          static_cast<std::int64_t>(rng.uniform() * span * 86400.0));
    std::sort(offsets.rbegin(), offsets.rend());

    const double words_mean = 9.0 + sgn * 2.0 * be;
    const double p_hashtag = 0.45 + sgn * 0.25 * be;
    const double p_retweet = 0.25 - sgn * 0.12 * be;
    const double p_emoticon = 0.30 + sgn * 0.25 * le;
    const double p_own_topic = 0.30 + 0.20 * le;
    const double p_other_topic = 0.30 - 0.20 * le;
    const auto& own_pools = female ? female_pools : male_pools;
    const auto& other_pools = female ? male_pools : female_pools;

    for (int t = 0; t < n_tweets; ++t) {
      std::string text;
      const int n_words =
          std::max(3, static_cast<int>(words_mean + rng.normal() * 2.0));
      for (int wi = 0; wi < n_words; ++wi) {
        std::string word;
        const double r = rng.uniform();
        if (r < p_own_topic)
          word = pick_from_pools(own_pools, rng);
        else if (r < p_own_topic + p_other_topic)
          word = pick_from_pools(other_pools, rng);
        else
          word = pick(filler_words(), rng);
        word = maybe_misspell(word, rng);
        if (!text.empty()) text += ' ';
        text += word;
      }
      if (rng.bernoulli(0.06)) text += " " + pick(tweet_shorthands(), rng);
      if (rng.bernoulli(p_hashtag)) {
        std::string w1 = pick_from_pools(own_pools, rng);
        if (rng.bernoulli(0.5)) {
          std::string w2 = pick(filler_words(), rng);
          if (is_all_ascii_alpha(w1) && is_all_ascii_alpha(w2))
            text += " #" + capitalized(w1) + capitalized(w2);
          else if (is_all_ascii_alpha(w1))
            text += " #" + w1;
        } else if (is_all_ascii_alpha(w1)) {
          text += " #" + w1;
        }
      }
      if (rng.bernoulli(p_emoticon)) text += " " + pick(tweet_emoticons(), rng);
      if (rng.bernoulli(0.08))
        text += " @friend_" + std::to_string(rng.uniform_int(500));
      if (rng.bernoulli(0.05))
        text += " http://t.co/" + std::to_string(rng.uniform_int(100000));

      Tweet tw;
      tw.text = text;
      tw.timestamp = ref_seconds - offsets[t];
      tw.is_retweet = rng.bernoulli(p_retweet);
      tw.hashtags = extract_hashtags(tw.text);
      user.tweets.push_back(std::move(tw));
    }

    // Follower/following counts.
    user.friends_count = 150 + static_cast<std::int64_t>(rng.uniform_int(650));
    const double ratio =
        std::max(0.05, (1.3 - sgn * 0.5 * be) * std::exp(rng.normal() * 0.25));
    user.followers_count =
        static_cast<std::int64_t>(user.friends_count * ratio);

    // Followed accounts: a class-dependent share of celebrities sampled with
    // class-conditional composition weights.
    const int n_follow =
        std::max(5, rng.poisson(cfg.followed_per_user));
    const double celeb_frac = 0.45 + sgn * 0.20 * be;
    std::vector<double> weights(pool.size());
    for (std::size_t i = 0; i < pool.size(); ++i)
      weights[i] = follow_weight(pool[i], female, cfg);
    std::unordered_set<std::string> seen;
    int extra = 0;
    for (int fidx = 0; fidx < n_follow; ++fidx) {
      if (rng.bernoulli(celeb_frac)) {
        const auto& c = pool[rng.weighted_index(weights)];
        if (seen.insert(c.record.user_id).second)
          user.followed_ids.push_back(c.record.user_id);
      } else {
        user.followed_ids.push_back(user.user_id + "_acct_" +
                                    std::to_string(extra++));
      }
    }

    ds.users.push_back(std::move(user));
  }
  return ds;
}

}  // namespace genfer
