#include "verso/criteria.h"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "verso/error.h"

namespace verso {

namespace {

// One reference's stressed-syllable value: equal texts anywhere plus equal
// texts in place, over twice the smaller stressed count.
double stAgainst(const StressProfile& candidate, const StressProfile& reference) {
  std::unordered_map<std::string, int> counts;
  for (const auto& [pos, text] : reference.stressed) ++counts[text];
  int by_text = 0;
  for (const auto& [pos, text] : candidate.stressed) {
    const auto it = counts.find(text);
    if (it != counts.end() && it->second > 0) {
      --it->second;
      ++by_text;
    }
  }
  std::unordered_map<int, const std::string*> at_position;
  for (const auto& [pos, text] : reference.stressed) at_position[pos] = &text;
  int in_place = 0;
  for (const auto& [pos, text] : candidate.stressed) {
    const auto it = at_position.find(pos);
    if (it != at_position.end() && *it->second == text) ++in_place;
  }
  const double denom = static_cast<double>(
      std::min(candidate.stressed.size(), reference.stressed.size()));
  return (by_text + in_place) / (2.0 * denom);
}

}  // namespace

StressProfile stressProfile(const ScannedVerse& verse) {
  StressProfile profile;
  profile.positions = verse.tonic_positions;
  for (size_t i = 0; i < verse.syllables.size(); ++i) {
    if (verse.syllables[i].stressed) {
      profile.stressed.emplace_back(static_cast<int>(i) + 1,
                                    verse.syllables[i].normalized);
    }
  }
  return profile;
}

double jaccard(const std::vector<int>& u, const std::vector<int>& v) {
  size_t i = 0, j = 0, common = 0;
  while (i < u.size() && j < v.size()) {
    if (u[i] == v[j]) {
      ++common;
      ++i;
      ++j;
    } else if (u[i] < v[j]) {
      ++i;
    } else {
      ++j;
    }
  }
  const size_t unions = u.size() + v.size() - common;
  return static_cast<double>(common) / static_cast<double>(unions);
}

double scoreEr(const StressProfile& candidate, const StressProfile& stanza_first,
               const StressProfile& previous) {
  return (jaccard(candidate.positions, stanza_first.positions) +
          jaccard(candidate.positions, previous.positions)) /
         2.0;
}

double scoreSt(const StressProfile& candidate, const StressProfile& stanza_first,
               const StressProfile& previous) {
  return (stAgainst(candidate, stanza_first) + stAgainst(candidate, previous)) /
         2.0;
}

double scoreAc(const ScannedVerse& candidate, const ScannedVerse& reference) {
  return candidate.accent_class == reference.accent_class ? 1.0 : 0.0;
}

double scoreRtc(const ScannedVerse& candidate, const ScannedVerse& reference) {
  if (candidate.rhyme_suffix == reference.rhyme_suffix) return 1.0;
  if (candidate.tonic_vowel == reference.tonic_vowel) return 0.5;
  return 0.0;
}

double scoreRi(const ScannedVerse& candidate) {
  std::set<std::string> distinct;
  for (const Syllable& syllable : candidate.syllables) {
    distinct.insert(syllable.normalized);
  }
  return 1.0 - static_cast<double>(distinct.size()) /
                   static_cast<double>(candidate.syllables.size());
}

double combineScore(const CandidateScore& values, const CriterionWeights& weights) {
  const std::pair<const std::optional<double>*, double> items[] = {
      {&values.er, weights.er},   {&values.st, weights.st},
      {&values.ac, weights.ac},   {&values.ri, weights.ri},
      {&values.rtc, weights.rtc},
  };
  double numerator = 0.0;
  double denominator = 0.0;
  bool any = false;
  for (const auto& [value, weight] : items) {
    if (!value->has_value()) continue;
    any = true;
    numerator += weight * **value;
    denominator += weight;
  }
  if (!any) throw Error(Errc::kAllSkipped, "every criterion was skipped");
  if (denominator == 0.0) return 0.0;
  return numerator / denominator;
}

CandidateScore evaluateCandidate(const ScannedVerse& candidate,
                                 const ReferenceContext& context,
                                 const CriterionWeights& weights) {
  const StressProfile profile = stressProfile(candidate);
  const StressProfile first = stressProfile(*context.stanza_first);
  const StressProfile previous = stressProfile(*context.previous);

  CandidateScore result;
  result.er = scoreEr(profile, first, previous);
  result.st = scoreSt(profile, first, previous);
  result.ri = scoreRi(candidate);
  if (context.same_letter_latest != nullptr) {
    result.ac = scoreAc(candidate, *context.same_letter_latest);
    result.rtc = scoreRtc(candidate, *context.same_letter_latest);
  }
  result.score = combineScore(result, weights);
  return result;
}

}  // namespace verso
