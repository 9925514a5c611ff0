#include "verso/assembler.h"

#include <algorithm>
#include <functional>
#include <set>
#include <thread>

#include "verso/error.h"

namespace verso {

namespace {

int distinctSupplyAt(const RhymeGroup& group, int meter) {
  const auto it = group.distinct_supply.find(meter);
  return it == group.distinct_supply.end() ? 0 : it->second;
}

void scoreCandidates(const std::vector<const ScannedVerse*>& candidates,
                     const ReferenceContext& context,
                     const CriterionWeights& weights,
                     std::vector<CandidateScore>& scores, bool parallel) {
  scores.resize(candidates.size());
  auto scoreRange = [&](size_t begin, size_t end) {
    for (size_t i = begin; i < end; ++i) {
      scores[i] = evaluateCandidate(*candidates[i], context, weights);
    }
  };
  const size_t hw = std::thread::hardware_concurrency();
  if (!parallel || candidates.size() < 32 || hw < 2) {
    scoreRange(0, candidates.size());
    return;
  }
  const size_t workers = std::min<size_t>(hw, 8);
  const size_t chunk = (candidates.size() + workers - 1) / workers;
  std::vector<std::thread> threads;
  for (size_t w = 0; w < workers; ++w) {
    const size_t begin = w * chunk;
    const size_t end = std::min(begin + chunk, candidates.size());
    if (begin >= end) break;
    threads.emplace_back(scoreRange, begin, end);
  }
  for (std::thread& thread : threads) thread.join();
}

}  // namespace

LetterRequirements letterRequirements(const RhymeScheme& scheme,
                                      const std::vector<int>& meters) {
  LetterRequirements requirements;
  for (const VerseSlot& slot : scheme.flat) {
    ++requirements[slot.letter][meters[slot.index]];
  }
  return requirements;
}

std::map<char, std::vector<std::string>> feasibleGroups(
    const LetterRequirements& requirements, const RhymeIndex& index) {
  std::map<char, std::vector<std::string>> feasible;
  for (const auto& [letter, needs] : requirements) {
    std::vector<std::string>& groups = feasible[letter];
    int total_slots = 0;
    for (const auto& [meter, count] : needs) total_slots += count;
    for (const auto& [key, group] : index) {
      bool ok = true;
      for (const auto& [meter, count] : needs) {
        if (distinctSupplyAt(group, meter) < count) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      // A final word present in two meter buckets can serve only one slot.
      std::set<std::string> distinct_words;
      for (const auto& [meter, count] : needs) {
        const auto bucket = group.by_meter.find(meter);
        if (bucket == group.by_meter.end()) continue;
        for (const ScannedVerse& verse : bucket->second) {
          distinct_words.insert(verse.final_word);
        }
      }
      if (static_cast<int>(distinct_words.size()) < total_slots) continue;
      groups.push_back(key);
    }
  }
  return feasible;
}

std::map<char, std::string> assignGroups(
    const std::map<char, std::vector<std::string>>& feasible,
    const std::vector<char>& letter_order, Rng& rng) {
  // All shuffles happen before the search so the randomness consumed is
  // independent of how much backtracking the search needs.
  std::vector<std::vector<std::string>> shuffled;
  shuffled.reserve(letter_order.size());
  for (char letter : letter_order) {
    const auto it = feasible.find(letter);
    std::vector<std::string> groups =
        it == feasible.end() ? std::vector<std::string>{} : it->second;
    rng.shuffle(groups);
    shuffled.push_back(std::move(groups));
  }

  std::map<char, std::string> chosen;
  std::set<std::string> used;
  size_t deepest = 0;
  std::function<bool(size_t)> search = [&](size_t depth) {
    if (depth == letter_order.size()) return true;
    deepest = std::max(deepest, depth);
    for (const std::string& group : shuffled[depth]) {
      if (used.count(group)) continue;
      used.insert(group);
      chosen[letter_order[depth]] = group;
      if (search(depth + 1)) return true;
      used.erase(group);
      chosen.erase(letter_order[depth]);
    }
    return false;
  };
  if (!search(0)) {
    throw Error(Errc::kInfeasible,
                std::string("no rhyme group assignment can serve letter '") +
                    letter_order[deepest] + "'");
  }
  return chosen;
}

BuildState buildPoem(const RhymeScheme& scheme, const std::vector<int>& meters,
                     const CriterionWeights& weights, const RhymeIndex& index,
                     const std::map<char, std::string>& assignment, Rng& rng,
                     const BuildOptions& options) {
  BuildState state;
  state.assignment = assignment;
  state.meters = meters;
  state.placed.reserve(scheme.flat.size());

  std::map<char, std::set<std::string>> retired_words;
  std::set<std::string> retired_ids;
  int stanza_first_index = -1;
  std::map<char, int> latest_by_letter;

  for (const VerseSlot& slot : scheme.flat) {
    const RhymeGroup& group = index.at(assignment.at(slot.letter));
    const int meter = meters[slot.index];

    std::vector<const ScannedVerse*> eligible;
    const auto bucket = group.by_meter.find(meter);
    if (bucket != group.by_meter.end()) {
      const std::set<std::string>& words = retired_words[slot.letter];
      for (const ScannedVerse& verse : bucket->second) {
        if (!words.count(verse.final_word) && !retired_ids.count(verse.source_id)) {
          eligible.push_back(&verse);
        }
      }
    }
    if (eligible.empty()) {
      throw Error(Errc::kExhaustedCandidates,
                  "slot " + std::to_string(slot.index + 1) + " (letter '" +
                      slot.letter + "', meter " + std::to_string(meter) +
                      "): no eligible candidate left in group \"" + group.key +
                      "\"");
    }

    PlacedVerse placed;
    placed.slot = slot.index;
    placed.stanza = slot.stanza;
    placed.letter = slot.letter;
    placed.stanza_first = slot.stanza_first;

    if (slot.stanza_first) {
      placed.verse = *eligible[rng.uniform(eligible.size())];
    } else {
      const auto latest = latest_by_letter.find(slot.letter);
      ReferenceContext context;
      context.stanza_first = &state.placed[stanza_first_index].verse;
      context.previous = &state.placed.back().verse;
      context.same_letter_latest = latest == latest_by_letter.end()
                                       ? nullptr
                                       : &state.placed[latest->second].verse;
      std::vector<CandidateScore> scores;
      scoreCandidates(eligible, context, weights, scores, options.parallel);
      size_t best = 0;
      for (size_t i = 1; i < scores.size(); ++i) {
        if (scores[i].score > scores[best].score) best = i;
      }
      if (options.record_traces) {
        SlotTrace trace;
        trace.slot = slot.index;
        for (size_t i = 0; i < eligible.size(); ++i) {
          trace.candidates.push_back({*eligible[i], scores[i], i == best});
        }
        state.traces.push_back(std::move(trace));
      }
      placed.verse = *eligible[best];
      placed.score = scores[best];
    }

    const int placed_index = static_cast<int>(state.placed.size());
    if (slot.stanza_first) stanza_first_index = placed_index;
    latest_by_letter[slot.letter] = placed_index;
    retired_words[slot.letter].insert(placed.verse.final_word);
    retired_ids.insert(placed.verse.source_id);
    state.placed.push_back(std::move(placed));
  }
  return state;
}

BuildState scorePlacements(const RhymeScheme& scheme,
                           const CriterionWeights& weights,
                           const std::vector<ScannedVerse>& verses) {
  BuildState state;
  state.placed.reserve(verses.size());
  int stanza_first_index = -1;
  std::map<char, int> latest_by_letter;

  for (const VerseSlot& slot : scheme.flat) {
    const ScannedVerse& verse = verses.at(slot.index);
    PlacedVerse placed;
    placed.verse = verse;
    placed.slot = slot.index;
    placed.stanza = slot.stanza;
    placed.letter = slot.letter;
    placed.stanza_first = slot.stanza_first;
    if (!slot.stanza_first) {
      const auto latest = latest_by_letter.find(slot.letter);
      ReferenceContext context;
      context.stanza_first = &state.placed[stanza_first_index].verse;
      context.previous = &state.placed.back().verse;
      context.same_letter_latest = latest == latest_by_letter.end()
                                       ? nullptr
                                       : &state.placed[latest->second].verse;
      placed.score = evaluateCandidate(verse, context, weights);
    }
    const int placed_index = static_cast<int>(state.placed.size());
    if (slot.stanza_first) stanza_first_index = placed_index;
    latest_by_letter[slot.letter] = placed_index;
    state.placed.push_back(std::move(placed));
    state.meters.push_back(verse.meter);
  }
  return state;
}

}  // namespace verso
