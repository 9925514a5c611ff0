#include "verso/corpus.h"

#include <fstream>
#include <ostream>
#include <set>
#include <string>

#include "verso/error.h"
#include "verso/text.h"

namespace verso {

namespace {

using nlohmann::json;

std::string idFromJson(const json& value) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_number_integer()) return std::to_string(value.get<long long>());
  throw Error(Errc::kCorpusParse, "\"id\" must be a string or integer");
}

CorpusEntry entryFromJson(const json& record) {
  if (!record.is_object()) {
    throw Error(Errc::kCorpusParse, "record is not a JSON object");
  }
  if (!record.contains("id")) {
    throw Error(Errc::kCorpusParse, "record has no \"id\"");
  }
  CorpusEntry entry;
  entry.id = idFromJson(record.at("id"));
  if (record.contains("text")) {
    if (!record.at("text").is_string()) {
      throw Error(Errc::kCorpusParse, "\"text\" must be a string");
    }
    entry.text = record.at("text").get<std::string>();
  }
  if (!record.contains("scansions") || !record.at("scansions").is_array() ||
      record.at("scansions").empty()) {
    throw Error(Errc::kCorpusParse, "\"scansions\" must be a non-empty array");
  }
  for (const json& item : record.at("scansions")) {
    if (!item.is_string()) {
      throw Error(Errc::kCorpusParse, "\"scansions\" entries must be strings");
    }
    entry.scansions.push_back(item.get<std::string>());
  }
  if (record.contains("meta")) entry.meta = record.at("meta");
  return entry;
}

std::ifstream openOrThrow(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(Errc::kFileNotFound, "cannot open corpus file: " + path.string());
  }
  return in;
}

// Validates every scansion so a bad record fails here, naming the line/id.
void checkScansions(const CorpusEntry& entry, size_t lineno) {
  for (const std::string& scansion : entry.scansions) {
    try {
      parseScansion(scansion, entry.id, entry.text);
    } catch (const Error& e) {
      throw Error(Errc::kCorpusParse, "corpus line " + std::to_string(lineno) +
                                          " (id \"" + entry.id +
                                          "\"): " + e.what());
    }
  }
}

}  // namespace

std::vector<CorpusEntry> loadCorpus(const std::filesystem::path& path) {
  std::ifstream in = openOrThrow(path);
  std::vector<CorpusEntry> entries;
  std::set<std::string> seen_ids;
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string_view trimmed = trimAscii(line);
    if (trimmed.empty()) continue;
    json record;
    try {
      record = json::parse(trimmed);
    } catch (const json::exception& e) {
      throw Error(Errc::kCorpusParse,
                  "corpus line " + std::to_string(lineno) + ": " + e.what());
    }
    CorpusEntry entry;
    try {
      entry = entryFromJson(record);
    } catch (const Error& e) {
      throw Error(Errc::kCorpusParse,
                  "corpus line " + std::to_string(lineno) + ": " + e.what());
    }
    if (!seen_ids.insert(entry.id).second) {
      throw Error(Errc::kDuplicateId, "corpus line " + std::to_string(lineno) +
                                          ": duplicate id \"" + entry.id + "\"");
    }
    checkScansions(entry, lineno);
    entries.push_back(std::move(entry));
  }
  return entries;
}

std::vector<CorpusEntry> loadPlain(const std::filesystem::path& path) {
  std::ifstream in = openOrThrow(path);
  std::vector<CorpusEntry> entries;
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string_view trimmed = trimAscii(line);
    if (trimmed.empty()) continue;
    CorpusEntry entry;
    entry.id = std::to_string(entries.size() + 1);
    try {
      entry.text = parseScansion(trimmed).display_text;
    } catch (const Error& e) {
      throw Error(Errc::kCorpusParse,
                  "plain corpus line " + std::to_string(lineno) + ": " + e.what());
    }
    entry.scansions.emplace_back(trimmed);
    entries.push_back(std::move(entry));
  }
  return entries;
}

void writeCorpusJsonl(const std::vector<CorpusEntry>& entries, std::ostream& out) {
  for (const CorpusEntry& entry : entries) {
    json record;
    record["id"] = entry.id;
    record["text"] = entry.text;
    record["scansions"] = entry.scansions;
    if (!entry.meta.is_null()) record["meta"] = entry.meta;
    out << record.dump() << '\n';
  }
}

RhymeIndex buildIndex(const std::vector<CorpusEntry>& entries) {
  RhymeIndex index;
  int ordinal = 0;
  for (const CorpusEntry& entry : entries) {
    for (const std::string& scansion : entry.scansions) {
      ScannedVerse verse = parseScansion(scansion, entry.id, entry.text);
      verse.ordinal = ordinal++;
      RhymeGroup& group = index[verse.final_syllable];
      group.by_meter[verse.meter].push_back(std::move(verse));
    }
  }
  for (auto& [key, group] : index) {
    group.key = key;
    for (const auto& [meter, verses] : group.by_meter) {
      std::set<std::string> words;
      for (const ScannedVerse& verse : verses) words.insert(verse.final_word);
      group.distinct_supply[meter] = static_cast<int>(words.size());
    }
  }
  return index;
}

std::set<int> availableMeters(const RhymeIndex& index) {
  std::set<int> meters;
  for (const auto& [key, group] : index) {
    for (const auto& [meter, verses] : group.by_meter) {
      if (!verses.empty()) meters.insert(meter);
    }
  }
  return meters;
}

}  // namespace verso
