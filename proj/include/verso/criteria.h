// The five per-candidate scoring criteria and their weighted combination.
//
// A candidate is scored against up to three reference verses:
//   - the first verse of its stanza and the immediately preceding verse
//     drive the rhythmic-pattern (ER) and stressed-syllable (ST) criteria,
//     each criterion averaging its two per-reference values;
//   - the most recently placed verse carrying the candidate's rhyme letter
//     drives the accent (AC) and consonant/assonant rhyme (RTC) criteria.
//     When no such verse exists yet, AC and RTC are skipped.
// Internal rhyme (RI) needs no reference.

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "verso/scansion.h"
#include "verso/scheme.h"

namespace verso {

struct StressProfile {
  std::vector<int> positions;  // 1-based stressed positions, increasing
  std::vector<std::pair<int, std::string>> stressed;  // (position, normalized text)
};

StressProfile stressProfile(const ScannedVerse& verse);

/// |u n v| / |u u v| over sorted position vectors. Both sets non-empty.
double jaccard(const std::vector<int>& u, const std::vector<int>& v);

struct ReferenceContext {
  const ScannedVerse* stanza_first = nullptr;
  const ScannedVerse* previous = nullptr;
  const ScannedVerse* same_letter_latest = nullptr;  // null until the letter repeats
};

/// Mean Jaccard of stressed positions against the stanza-first and previous
/// verses. Equals a single Jaccard when the two references coincide.
double scoreEr(const StressProfile& candidate, const StressProfile& stanza_first,
               const StressProfile& previous);

/// Per reference: (matches by text regardless of position + matches by text
/// at the same position) / (2 * min stressed count). Text matching pairs
/// each occurrence at most once. Result is the mean over both references.
double scoreSt(const StressProfile& candidate, const StressProfile& stanza_first,
               const StressProfile& previous);

/// 1 when the rhyme accent classes match, else 0.
double scoreAc(const ScannedVerse& candidate, const ScannedVerse& reference);

/// 1 for an identical rhyme suffix (consonant rhyme), 0.5 for an equal tonic
/// vowel (assonant rhyme), else 0.
double scoreRtc(const ScannedVerse& candidate, const ScannedVerse& reference);

/// 1 - distinct/total over the normalized syllable texts of the verse.
double scoreRi(const ScannedVerse& candidate);

struct CandidateScore {
  std::optional<double> er, st, ac, ri, rtc;  // nullopt = skipped
  double score = 0.0;
};

/// Weighted mean over the non-skipped criteria; 0 when their weights sum to
/// zero. Throws kAllSkipped when every criterion is skipped.
double combineScore(const CandidateScore& values, const CriterionWeights& weights);

/// Scores one candidate for a non-stanza-initial slot. ER, ST and RI are
/// always computed; AC and RTC only when a same-letter reference exists.
CandidateScore evaluateCandidate(const ScannedVerse& candidate,
                                 const ReferenceContext& context,
                                 const CriterionWeights& weights);

}  // namespace verso
