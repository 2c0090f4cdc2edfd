#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace genfer {

enum class Label { Male, Female, Unlabeled };

const char* label_name(Label l);

// UTC calendar date; the "now" used for ages and day spans is always an
// explicit input, never the wall clock.
struct Date {
  int year = 1970;
  int month = 1;
  int day = 1;

  bool operator==(const Date&) const = default;
};

// Days since 1970-01-01 (proleptic Gregorian).
std::int64_t days_from_civil(int year, int month, int day);
// Seconds since epoch for an ISO-8601 "YYYY-MM-DDTHH:MM:SS[Z]" timestamp.
std::int64_t parse_iso8601(const std::string& s);
std::string format_iso8601(std::int64_t seconds);
Date parse_date(const std::string& s);  // "YYYY-MM-DD"

struct Tweet {
  std::string text;
  std::int64_t timestamp = 0;  // seconds since epoch, UTC
  bool is_retweet = false;
  std::vector<std::string> hashtags;  // '#'-tokens found in text, '#' stripped

  bool operator==(const Tweet&) const = default;
};

struct UserRecord {
  std::string user_id;
  Label label = Label::Unlabeled;
  std::vector<Tweet> tweets;  // chronological, most recent last
  std::int64_t followers_count = 0;
  std::int64_t friends_count = 0;
  std::vector<std::string> followed_ids;  // no duplicates

  bool operator==(const UserRecord&) const = default;
};

struct CelebrityRecord {
  std::string user_id;
  std::int64_t followers_count = 0;
  bool verified = false;
  std::optional<int> birth_year;
  std::string biography;
  std::vector<std::string> occupation_terms;

  bool operator==(const CelebrityRecord&) const = default;
};

struct Dataset {
  std::vector<UserRecord> users;
  std::unordered_map<std::string, CelebrityRecord> celebrities;
  Date reference_date;
};

// Popular-account gate: strictly more than 10,000 followers, or verified.
bool is_celebrity(std::int64_t followers_count, bool verified);

struct LoadStats {
  std::size_t duplicate_followed_removed = 0;
  std::size_t tweets_resorted = 0;
  std::size_t empty_tweet_users = 0;
  std::size_t celebrities_filtered = 0;  // rows failing the popularity gate
};

// users_path: line-delimited JSON, one user per line.
// celebrities_path: tab-separated with header (see save_dataset for layout).
Dataset load_dataset(const std::string& users_path,
                     const std::string& celebrities_path, Date reference_date,
                     LoadStats* stats = nullptr);

void save_dataset(const Dataset& ds, const std::string& users_path,
                  const std::string& celebrities_path);

}  // namespace genfer
