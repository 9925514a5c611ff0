// Rhyme-scheme string, per-verse meter plan and criterion weights.

#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "verso/rng.h"

namespace verso {

struct VerseSlot {
  int index = 0;   // 0-based position in the poem
  int stanza = 0;  // 0-based stanza number
  char letter = 'A';
  bool stanza_first = false;
};

struct RhymeScheme {
  std::vector<std::string> stanzas;  // one letter per verse, e.g. {"AAB", "BBA"}
  std::vector<VerseSlot> flat;
};

/// Whitespace-separated tokens are stanzas; each character is a verse letter.
/// Letters are global across the poem, so "ABAB ABAB" reuses A and B.
/// Lowercase input is folded to uppercase. Throws kEmptyScheme or
/// kInvalidSchemeChar.
RhymeScheme parseScheme(std::string_view text);

std::string renderScheme(const RhymeScheme& scheme);

/// Letters in first-appearance order; the group assignment order.
std::vector<char> letterOrder(const RhymeScheme& scheme);

struct MeterPlan {
  std::vector<std::optional<int>> per_verse;  // nullopt = draw at run time
};

/// Unspecified entries get a uniform seeded draw over the distinct meters
/// with supply in the index; specified entries pass through. Throws
/// kNoAvailableMeter when a draw is needed but no meter has supply.
std::vector<int> resolveMeters(const MeterPlan& plan,
                               const std::set<int>& available, Rng& rng);

struct CriterionWeights {
  double er = 1.0;   // rhythmic-pattern similarity
  double st = 1.0;   // stressed-syllable equality
  double ac = 1.0;   // rhyme accent class
  double ri = 1.0;   // internal rhyme
  double rtc = 1.0;  // consonant/assonant rhyme
};

/// All weights must be non-negative with at least one positive.
void validateWeights(const CriterionWeights& weights);

}  // namespace verso
