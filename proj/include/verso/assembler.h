// Group feasibility, letter-to-group assignment and the greedy verse-by-verse
// assembly with its exclusion rules.

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "verso/corpus.h"
#include "verso/criteria.h"
#include "verso/rng.h"
#include "verso/scheme.h"

namespace verso {

/// Slots each letter must fill, per meter.
using LetterRequirements = std::map<char, std::map<int, int>>;

LetterRequirements letterRequirements(const RhymeScheme& scheme,
                                      const std::vector<int>& meters);

/// A group qualifies for a letter when every required meter has enough
/// distinct final words and the distinct final words across the letter's
/// required meters cover its total slot count (a word shared between meter
/// buckets counts once).
std::map<char, std::vector<std::string>> feasibleGroups(
    const LetterRequirements& requirements, const RhymeIndex& index);

/// Draws one group per letter, in first-appearance order, injectively.
/// Each letter's feasible list is shuffled once up front; dead ends
/// backtrack exhaustively without consuming more randomness. Throws
/// kInfeasible naming the first letter that cannot be served.
std::map<char, std::string> assignGroups(
    const std::map<char, std::vector<std::string>>& feasible,
    const std::vector<char>& letter_order, Rng& rng);

struct PlacedVerse {
  ScannedVerse verse;
  std::optional<CandidateScore> score;  // nullopt for stanza-initial slots
  int slot = 0;
  int stanza = 0;
  char letter = 'A';
  bool stanza_first = false;
};

struct SlotCandidateTrace {
  ScannedVerse verse;
  CandidateScore score;
  bool chosen = false;
};

struct SlotTrace {
  int slot = 0;
  std::vector<SlotCandidateTrace> candidates;
};

struct BuildState {
  std::vector<PlacedVerse> placed;
  std::map<char, std::string> assignment;
  std::vector<int> meters;
  std::vector<SlotTrace> traces;  // one per scored slot when recording
};

struct BuildOptions {
  bool record_traces = false;
  bool parallel = false;  // scores candidates on multiple threads; same result
};

/// Fills the slots in order. Stanza-initial slots draw uniformly from the
/// letter's group at the slot's meter (eligible candidates only) and stay
/// unscored; other slots take the highest-scoring eligible candidate, ties
/// resolved by lowest corpus ordinal. Choosing a verse retires its final
/// word within the letter and every scansion of its sentence globally.
/// Throws kExhaustedCandidates with the emptied slot.
BuildState buildPoem(const RhymeScheme& scheme, const std::vector<int>& meters,
                     const CriterionWeights& weights, const RhymeIndex& index,
                     const std::map<char, std::string>& assignment, Rng& rng,
                     const BuildOptions& options = {});

/// Scores a fixed sequence of placements as buildPoem would have, without
/// any drawing. Used to re-evaluate a poem under different weights.
BuildState scorePlacements(const RhymeScheme& scheme,
                           const CriterionWeights& weights,
                           const std::vector<ScannedVerse>& verses);

}  // namespace verso
