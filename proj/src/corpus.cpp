#include "genfer/corpus.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <unordered_set>

#include <json.hpp>

#include "genfer/normalizer.hpp"
#include "genfer/utf8.hpp"

namespace genfer {

const char* label_name(Label l) {
  switch (l) {
    case Label::Male: return "male";
    case Label::Female: return "female";
    case Label::Unlabeled: return "unlabeled";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Date / time

std::int64_t days_from_civil(int y, int m, int d) {
  // Howard Hinnant's algorithm.
  y -= m <= 2;
  const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
  const unsigned yoe = static_cast<unsigned>(y - era * 400);
  const unsigned doy = (153u * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
  const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

namespace {

void civil_from_days(std::int64_t z, int& y, unsigned& m, unsigned& d) {
  z += 719468;
  const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
  const unsigned doe = static_cast<unsigned>(z - era * 146097);
  const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
  const std::int64_t yy = static_cast<std::int64_t>(yoe) + era * 400;
  const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
  const unsigned mp = (5 * doy + 2) / 153;
  d = doy - (153 * mp + 2) / 5 + 1;
  m = mp + (mp < 10 ? 3 : -9);
  y = static_cast<int>(yy + (m <= 2));
}

int parse_fixed_int(const std::string& s, std::size_t pos, std::size_t len) {
  int v = 0;
  for (std::size_t i = pos; i < pos + len; ++i) {
    if (i >= s.size() || !is_ascii_digit(s[i]))
      throw std::runtime_error("malformed timestamp: " + s);
    v = v * 10 + (s[i] - '0');
  }
  return v;
}

}  // namespace

std::int64_t parse_iso8601(const std::string& s) {
  // Strict "YYYY-MM-DDTHH:MM:SS" with optional trailing 'Z'.
  if (s.size() < 19 || s[4] != '-' || s[7] != '-' ||
      (s[10] != 'T' && s[10] != ' ') || s[13] != ':' || s[16] != ':')
    throw std::runtime_error("malformed timestamp: " + s);
  if (s.size() > 20 || (s.size() == 20 && s[19] != 'Z'))
    throw std::runtime_error("malformed timestamp: " + s);
  const int year = parse_fixed_int(s, 0, 4);
  const int month = parse_fixed_int(s, 5, 2);
  const int day = parse_fixed_int(s, 8, 2);
  const int hh = parse_fixed_int(s, 11, 2);
  const int mm = parse_fixed_int(s, 14, 2);
  const int ss = parse_fixed_int(s, 17, 2);
  if (month < 1 || month > 12 || day < 1 || day > 31 || hh > 23 || mm > 59 ||
      ss > 60)
    throw std::runtime_error("timestamp out of range: " + s);
  return days_from_civil(year, month, day) * 86400 + hh * 3600 + mm * 60 + ss;
}

std::string format_iso8601(std::int64_t seconds) {
  std::int64_t days = seconds / 86400;
  std::int64_t rem = seconds % 86400;
  if (rem < 0) {
    rem += 86400;
    --days;
  }
  int y;
  unsigned m, d;
  civil_from_days(days, y, m, d);
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%04d-%02u-%02uT%02lld:%02lld:%02lldZ", y, m,
                d, static_cast<long long>(rem / 3600),
                static_cast<long long>((rem / 60) % 60),
                static_cast<long long>(rem % 60));
  return buf;
}

Date parse_date(const std::string& s) {
  if (s.size() != 10 || s[4] != '-' || s[7] != '-')
    throw std::runtime_error("malformed date (want YYYY-MM-DD): " + s);
  Date d;
  d.year = parse_fixed_int(s, 0, 4);
  d.month = parse_fixed_int(s, 5, 2);
  d.day = parse_fixed_int(s, 8, 2);
  if (d.month < 1 || d.month > 12 || d.day < 1 || d.day > 31)
    throw std::runtime_error("date out of range: " + s);
  return d;
}

// ---------------------------------------------------------------------------

bool is_celebrity(std::int64_t followers_count, bool verified) {
  return followers_count > 10000 || verified;
}

namespace {

constexpr std::size_t kMaxTweetCodePoints = 10000;

Label parse_label(const nlohmann::json& j, std::size_t lineno) {
  if (j.is_null()) return Label::Unlabeled;
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "male") return Label::Male;
    if (s == "female") return Label::Female;
  }
  throw std::runtime_error("unknown label at line " + std::to_string(lineno));
}

std::vector<std::string> split_on(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t end = s.find(sep, start);
    if (end == std::string::npos) end = s.size();
    if (end > start) out.push_back(s.substr(start, end - start));
    start = end + 1;
  }
  return out;
}

std::string quote_bio(const std::string& bio) {
  std::string out = "\"";
  for (char c : bio) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += '"';
  return out;
}

std::string unquote_bio(const std::string& field, std::size_t lineno) {
  if (field.empty()) return "";
  if (field.size() < 2 || field.front() != '"' || field.back() != '"')
    throw std::runtime_error("malformed bio field at celebrities line " +
                             std::to_string(lineno));
  std::string out;
  for (std::size_t i = 1; i + 1 < field.size(); ++i) {
    if (field[i] == '"') {
      if (i + 2 >= field.size() || field[i + 1] != '"')
        throw std::runtime_error("malformed bio quoting at celebrities line " +
                                 std::to_string(lineno));
      ++i;
    }
    out += field[i];
  }
  return out;
}

}  // namespace

Dataset load_dataset(const std::string& users_path,
                     const std::string& celebrities_path, Date reference_date,
                     LoadStats* stats) {
  LoadStats local;
  LoadStats& st = stats ? *stats : local;

  Dataset ds;
  ds.reference_date = reference_date;

  std::ifstream uf(users_path);
  if (!uf) throw std::runtime_error("cannot open users file: " + users_path);
  std::string line;
  std::size_t lineno = 0;
  std::unordered_set<std::string> seen_ids;
  while (std::getline(uf, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;

    nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object())
      throw std::runtime_error("malformed JSON at line " + std::to_string(lineno) +
                               " in " + users_path);
    UserRecord u;
    try {
      u.user_id = j.at("id").get<std::string>();
      u.label = parse_label(j.at("label"), lineno);
      u.followers_count = j.at("followers").get<std::int64_t>();
      u.friends_count = j.at("friends").get<std::int64_t>();
      for (const auto& f : j.at("followed"))
        u.followed_ids.push_back(f.get<std::string>());
      for (const auto& tj : j.at("tweets")) {
        Tweet t;
        t.text = tj.at("text").get<std::string>();
        t.timestamp = parse_iso8601(tj.at("ts").get<std::string>());
        t.is_retweet = tj.at("rt").get<bool>();
        if (utf8_length(t.text) > kMaxTweetCodePoints)
          throw std::runtime_error("tweet text too long");
        t.hashtags = extract_hashtags(t.text);
        u.tweets.push_back(std::move(t));
      }
    } catch (const std::runtime_error& e) {
      const std::string what = e.what();
      if (what.find("at line") != std::string::npos) throw;
      throw std::runtime_error("malformed record at line " +
                               std::to_string(lineno) + " in " + users_path +
                               ": " + what);
    } catch (const nlohmann::json::exception& e) {
      throw std::runtime_error("malformed record at line " +
                               std::to_string(lineno) + " in " + users_path +
                               ": " + e.what());
    }
    if (u.followers_count < 0 || u.friends_count < 0)
      throw std::runtime_error("negative count at line " + std::to_string(lineno));
    if (!seen_ids.insert(u.user_id).second)
      throw std::runtime_error("duplicate user_id '" + u.user_id + "' at line " +
                               std::to_string(lineno));

    if (!std::is_sorted(u.tweets.begin(), u.tweets.end(),
                        [](const Tweet& a, const Tweet& b) {
                          return a.timestamp < b.timestamp;
                        })) {
      std::stable_sort(u.tweets.begin(), u.tweets.end(),
                       [](const Tweet& a, const Tweet& b) {
                         return a.timestamp < b.timestamp;
                       });
      ++st.tweets_resorted;
    }
    std::unordered_set<std::string> seen_followed;
    std::vector<std::string> deduped;
    for (auto& id : u.followed_ids) {
      if (seen_followed.insert(id).second)
        deduped.push_back(std::move(id));
      else
        ++st.duplicate_followed_removed;
    }
    u.followed_ids = std::move(deduped);
    if (u.tweets.empty()) ++st.empty_tweet_users;
    ds.users.push_back(std::move(u));
  }

  std::ifstream cf(celebrities_path);
  if (!cf)
    throw std::runtime_error("cannot open celebrities file: " + celebrities_path);
  lineno = 0;
  bool header_seen = false;
  while (std::getline(cf, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (!header_seen) {
      if (line.rfind("id\t", 0) != 0)
        throw std::runtime_error("celebrities file missing header: " +
                                 celebrities_path);
      header_seen = true;
      continue;
    }
    // id, followers, verified, birth_year, occupation, bio (quoted, last)
    std::vector<std::string> cols;
    std::size_t start = 0;
    for (int k = 0; k < 5; ++k) {
      std::size_t tab = line.find('\t', start);
      if (tab == std::string::npos)
        throw std::runtime_error("too few columns at celebrities line " +
                                 std::to_string(lineno));
      cols.push_back(line.substr(start, tab - start));
      start = tab + 1;
    }
    cols.push_back(line.substr(start));

    CelebrityRecord c;
    c.user_id = cols[0];
    try {
      c.followers_count = std::stoll(cols[1]);
      if (cols[2] != "0" && cols[2] != "1")
        throw std::invalid_argument("verified must be 0/1");
      c.verified = cols[2] == "1";
      if (!cols[3].empty()) c.birth_year = std::stoi(cols[3]);
    } catch (const std::exception&) {
      throw std::runtime_error("malformed field at celebrities line " +
                               std::to_string(lineno));
    }
    c.occupation_terms = split_on(cols[4], ';');
    c.biography = unquote_bio(cols[5], lineno);

    if (c.followers_count < 0)
      throw std::runtime_error("negative follower count at celebrities line " +
                               std::to_string(lineno));
    if (c.birth_year &&
        (*c.birth_year < 1850 || *c.birth_year > reference_date.year))
      throw std::runtime_error("birth year out of range at celebrities line " +
                               std::to_string(lineno));
    if (!is_celebrity(c.followers_count, c.verified)) {
      ++st.celebrities_filtered;  // row fails the popularity gate
      continue;
    }
    if (!ds.celebrities.emplace(c.user_id, std::move(c)).second)
      throw std::runtime_error("duplicate celebrity id at line " +
                               std::to_string(lineno));
  }
  if (!header_seen)
    throw std::runtime_error("celebrities file is empty: " + celebrities_path);

  return ds;
}

void save_dataset(const Dataset& ds, const std::string& users_path,
                  const std::string& celebrities_path) {
  std::ofstream uf(users_path);
  if (!uf) throw std::runtime_error("cannot write users file: " + users_path);
  for (const auto& u : ds.users) {
    nlohmann::ordered_json j;
    j["id"] = u.user_id;
    if (u.label == Label::Unlabeled)
      j["label"] = nullptr;
    else
      j["label"] = label_name(u.label);
    j["followers"] = u.followers_count;
    j["friends"] = u.friends_count;
    j["followed"] = u.followed_ids;
    auto tweets = nlohmann::ordered_json::array();
    for (const auto& t : u.tweets) {
      tweets.push_back({{"text", t.text},
                        {"ts", format_iso8601(t.timestamp)},
                        {"rt", t.is_retweet}});
    }
    j["tweets"] = std::move(tweets);
    uf << j.dump() << '\n';
  }

  std::ofstream cf(celebrities_path);
  if (!cf)
    throw std::runtime_error("cannot write celebrities file: " + celebrities_path);
  cf << "id\tfollowers\tverified\tbirth_year\toccupation\tbio\n";
  std::vector<const CelebrityRecord*> rows;
  rows.reserve(ds.celebrities.size());
  for (const auto& [id, c] : ds.celebrities) {
    (void)id;
    rows.push_back(&c);
  }
  std::sort(rows.begin(), rows.end(),
            [](const CelebrityRecord* a, const CelebrityRecord* b) {
              return a->user_id < b->user_id;
            });
  for (const CelebrityRecord* c : rows) {
    cf << c->user_id << '\t' << c->followers_count << '\t'
       << (c->verified ? 1 : 0) << '\t';
    if (c->birth_year) cf << *c->birth_year;
    cf << '\t';
    for (std::size_t i = 0; i < c->occupation_terms.size(); ++i) {
      if (i) cf << ';';
      cf << c->occupation_terms[i];
    }
    cf << '\t' << quote_bio(c->biography) << '\n';
  }
}

}  // namespace genfer
