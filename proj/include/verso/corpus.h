// Corpus ingestion and the rhyme-group index:
// final syllable -> meter -> candidate verses, with duplicate-final-word
// supply counts.

#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "verso/scansion.h"

namespace verso {

struct CorpusEntry {
  std::string id;
  std::string text;
  std::vector<std::string> scansions;  // a sentence may scan several ways
  nlohmann::json meta;                 // free-form, ignored by the engine
};

/// One record per line: a JSON object with "id", "text" (optional) and
/// "scansions". Order is preserved; it is the deterministic tie-break order
/// downstream. Every scansion is parsed here so malformed records fail with
/// their line number and id.
std::vector<CorpusEntry> loadCorpus(const std::filesystem::path& path);

/// Plain fixture format: one scansion string per line, blank lines skipped.
/// Ids are assigned from 1 and the sentence text is reconstructed from the
/// scansion.
std::vector<CorpusEntry> loadPlain(const std::filesystem::path& path);

void writeCorpusJsonl(const std::vector<CorpusEntry>& entries, std::ostream& out);

struct RhymeGroup {
  std::string key;  // shared final syllable
  std::map<int, std::vector<ScannedVerse>> by_meter;
  std::map<int, int> distinct_supply;  // distinct final words per meter
};

using RhymeIndex = std::map<std::string, RhymeGroup>;

/// Each scansion variant becomes one ScannedVerse in exactly one
/// (group, meter) bucket. Bucket order follows corpus order and each verse
/// carries its corpus-wide ordinal.
RhymeIndex buildIndex(const std::vector<CorpusEntry>& entries);

std::set<int> availableMeters(const RhymeIndex& index);

}  // namespace verso
