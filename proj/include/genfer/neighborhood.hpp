#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "genfer/corpus.hpp"

namespace genfer {

enum class AgeBucket { Under23, A23to30, A30to40, A40to50, Over50, UnknownAge };
enum class CelebGender { Male, Female, Neutral };
enum class FamousFor {
  Acting,
  Art,
  Entertainment,
  Entrepreneur,
  Writing,
  Music,
  Politics,
  Religious,
  ScienceTech,
  Security,
  Social,
  Sports,
  Miscellaneous
};

inline constexpr int kAgeBucketCount = 5;     // known buckets
inline constexpr int kFamousForCount = 13;

const char* age_bucket_name(AgeBucket b);
const char* celeb_gender_name(CelebGender g);
const char* famous_for_name(FamousFor f);
std::optional<FamousFor> famous_for_from_name(std::string_view name);

struct CelebrityProfile {
  AgeBucket age = AgeBucket::UnknownAge;
  CelebGender gender = CelebGender::Neutral;
  FamousFor famous = FamousFor::Miscellaneous;
};

// Age buckets: <23, 23-30, 31-40, 41-50, >50; boundary years go to the
// lower-age bucket. Throws if birth_year is after the reference year.
AgeBucket age_bucket(std::optional<int> birth_year, const Date& reference);

// Majority vote of {he,his,him} vs {she,her,hers} tokens; ties (including an
// empty biography) are Neutral.
CelebGender infer_celebrity_gender(std::string_view biography);

using FamousMap = std::unordered_map<std::string, FamousFor>;

// TSV "term<TAB>category"; categories validated against the 13-name list.
FamousMap load_famous_map(const std::string& path);

// First occupation term with a mapping wins; none mapped -> Miscellaneous.
FamousFor famous_for(const std::vector<std::string>& occupation_terms,
                     const FamousMap& mapping);

CelebrityProfile profile_celebrity(const CelebrityRecord& celeb,
                                   const Date& reference,
                                   const FamousMap& mapping);

using ProfileMap = std::unordered_map<std::string, CelebrityProfile>;

ProfileMap build_profiles(const Dataset& ds, const FamousMap& mapping,
                          bool parallel = true);
ProfileMap build_profiles_serial(const Dataset& ds, const FamousMap& mapping);

struct NeighborhoodFeatures {
  std::array<double, kAgeBucketCount> age_props{};
  std::array<double, 2> gender_props{};  // male, female
  std::array<double, kFamousForCount> famous_props{};
};

// Proportions over followed celebrities with a known attribute (UnknownAge
// and Neutral are excluded from their group's denominator); a group with an
// empty denominator is all-zero. Throws if a followed celebrity is missing
// from the profile map, listing the ids.
NeighborhoodFeatures aggregate_neighborhood(
    const UserRecord& user,
    const std::unordered_map<std::string, CelebrityRecord>& celebrities,
    const ProfileMap& profiles);

}  // namespace genfer
