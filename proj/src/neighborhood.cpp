#include "genfer/neighborhood.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

#include "genfer/utf8.hpp"

namespace genfer {

const char* age_bucket_name(AgeBucket b) {
  switch (b) {
    case AgeBucket::Under23: return "under23";
    case AgeBucket::A23to30: return "23to30";
    case AgeBucket::A30to40: return "30to40";
    case AgeBucket::A40to50: return "40to50";
    case AgeBucket::Over50: return "over50";
    case AgeBucket::UnknownAge: return "unknown";
  }
  return "?";
}

const char* celeb_gender_name(CelebGender g) {
  switch (g) {
    case CelebGender::Male: return "male";
    case CelebGender::Female: return "female";
    case CelebGender::Neutral: return "neutral";
  }
  return "?";
}

const char* famous_for_name(FamousFor f) {
  switch (f) {
    case FamousFor::Acting: return "Acting";
    case FamousFor::Art: return "Art";
    case FamousFor::Entertainment: return "Entertainment";
    case FamousFor::Entrepreneur: return "Entrepreneur";
    case FamousFor::Writing: return "Writing";
    case FamousFor::Music: return "Music";
    case FamousFor::Politics: return "Politics";
    case FamousFor::Religious: return "Religious";
    case FamousFor::ScienceTech: return "ScienceTech";
    case FamousFor::Security: return "Security";
    case FamousFor::Social: return "Social";
    case FamousFor::Sports: return "Sports";
    case FamousFor::Miscellaneous: return "Miscellaneous";
  }
  return "?";
}

std::optional<FamousFor> famous_for_from_name(std::string_view name) {
  for (int i = 0; i < kFamousForCount; ++i) {
    const auto f = static_cast<FamousFor>(i);
    if (name == famous_for_name(f)) return f;
  }
  return std::nullopt;
}

AgeBucket age_bucket(std::optional<int> birth_year, const Date& reference) {
  if (!birth_year) return AgeBucket::UnknownAge;
  const int age = reference.year - *birth_year;
  if (age < 0)
    throw std::invalid_argument("birth year " + std::to_string(*birth_year) +
                                " is after reference year " +
                                std::to_string(reference.year));
  if (age < 23) return AgeBucket::Under23;
  if (age <= 30) return AgeBucket::A23to30;
  if (age <= 40) return AgeBucket::A30to40;
  if (age <= 50) return AgeBucket::A40to50;
  return AgeBucket::Over50;
}

CelebGender infer_celebrity_gender(std::string_view biography) {
  long long male = 0, female = 0;
  std::size_t i = 0;
  const std::size_t n = biography.size();
  while (i < n) {
    if (!is_ascii_alpha(biography[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < n && is_ascii_alpha(biography[j])) ++j;
    const std::string w = ascii_lower(biography.substr(i, j - i));
    if (w == "he" || w == "his" || w == "him") ++male;
    else if (w == "she" || w == "her" || w == "hers") ++female;
    i = j;
  }
  if (male > female) return CelebGender::Male;
  if (female > male) return CelebGender::Female;
  return CelebGender::Neutral;
}

FamousMap load_famous_map(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open famous-for map: " + path);
  FamousMap map;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::size_t tab = line.find('\t');
    if (tab == std::string::npos || tab == 0 || tab + 1 >= line.size())
      throw std::runtime_error("malformed famous-for line " +
                               std::to_string(lineno) + " in " + path);
    const std::string term = ascii_lower(std::string_view(line).substr(0, tab));
    const std::string cat = line.substr(tab + 1);
    const auto f = famous_for_from_name(cat);
    if (!f)
      throw std::runtime_error("unknown famous-for category '" + cat +
                               "' at line " + std::to_string(lineno));
    if (!map.emplace(term, *f).second)
      throw std::runtime_error("duplicate famous-for term '" + term +
                               "' at line " + std::to_string(lineno));
  }
  return map;
}

FamousFor famous_for(const std::vector<std::string>& occupation_terms,
                     const FamousMap& mapping) {
  for (const auto& term : occupation_terms) {
    auto it = mapping.find(ascii_lower(term));
    if (it != mapping.end()) return it->second;
  }
  return FamousFor::Miscellaneous;
}

CelebrityProfile profile_celebrity(const CelebrityRecord& celeb,
                                   const Date& reference,
                                   const FamousMap& mapping) {
  CelebrityProfile p;
  p.age = age_bucket(celeb.birth_year, reference);
  p.gender = infer_celebrity_gender(celeb.biography);
  p.famous = famous_for(celeb.occupation_terms, mapping);
  return p;
}

ProfileMap build_profiles_serial(const Dataset& ds, const FamousMap& mapping) {
  ProfileMap out;
  out.reserve(ds.celebrities.size());
  for (const auto& [id, celeb] : ds.celebrities)
    out.emplace(id, profile_celebrity(celeb, ds.reference_date, mapping));
  return out;
}

ProfileMap build_profiles(const Dataset& ds, const FamousMap& mapping,
                          bool parallel) {
  if (!parallel) return build_profiles_serial(ds, mapping);
  std::vector<const CelebrityRecord*> celebs;
  celebs.reserve(ds.celebrities.size());
  for (const auto& [id, celeb] : ds.celebrities) {
    (void)id;
    celebs.push_back(&celeb);
  }
  std::vector<CelebrityProfile> profiles(celebs.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(celebs.size()); ++i)
    profiles[i] = profile_celebrity(*celebs[i], ds.reference_date, mapping);
  ProfileMap out;
  out.reserve(celebs.size());
  for (std::size_t i = 0; i < celebs.size(); ++i)
    out.emplace(celebs[i]->user_id, profiles[i]);
  return out;
}

NeighborhoodFeatures aggregate_neighborhood(
    const UserRecord& user,
    const std::unordered_map<std::string, CelebrityRecord>& celebrities,
    const ProfileMap& profiles) {
  std::array<std::int64_t, kAgeBucketCount> age_counts{};
  std::array<std::int64_t, 2> gender_counts{};
  std::array<std::int64_t, kFamousForCount> famous_counts{};
  std::int64_t famous_total = 0;

  std::vector<std::string> missing;
  for (const auto& id : user.followed_ids) {
    if (!celebrities.count(id)) continue;  // not a popular account
    auto it = profiles.find(id);
    if (it == profiles.end()) {
      missing.push_back(id);
      continue;
    }
    const CelebrityProfile& p = it->second;
    if (p.age != AgeBucket::UnknownAge)
      ++age_counts[static_cast<int>(p.age)];
    if (p.gender == CelebGender::Male) ++gender_counts[0];
    else if (p.gender == CelebGender::Female) ++gender_counts[1];
    ++famous_counts[static_cast<int>(p.famous)];
    ++famous_total;
  }
  if (!missing.empty()) {
    std::string msg = "followed celebrities missing from profiles:";
    for (const auto& id : missing) msg += " " + id;
    throw std::runtime_error(msg);
  }

  NeighborhoodFeatures f;
  std::int64_t age_total = 0;
  for (auto c : age_counts) age_total += c;
  if (age_total > 0)
    for (int i = 0; i < kAgeBucketCount; ++i)
      f.age_props[i] = static_cast<double>(age_counts[i]) / age_total;
  const std::int64_t gender_total = gender_counts[0] + gender_counts[1];
  if (gender_total > 0) {
    f.gender_props[0] = static_cast<double>(gender_counts[0]) / gender_total;
    f.gender_props[1] = static_cast<double>(gender_counts[1]) / gender_total;
  }
  if (famous_total > 0)
    for (int i = 0; i < kFamousForCount; ++i)
      f.famous_props[i] = static_cast<double>(famous_counts[i]) / famous_total;
  return f;
}

}  // namespace genfer
