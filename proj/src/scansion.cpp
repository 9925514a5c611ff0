#include "verso/scansion.h"

#include <string>

#include "verso/error.h"
#include "verso/text.h"

namespace verso {

namespace {

std::vector<std::string> splitSegments(std::string_view line) {
  std::vector<std::string> segments;
  size_t start = 0;
  while (true) {
    const size_t slash = line.find('/', start);
    if (slash == std::string_view::npos) {
      segments.emplace_back(line.substr(start));
      break;
    }
    segments.emplace_back(line.substr(start, slash - start));
    start = slash + 1;
  }
  return segments;
}

// '/'-less and '#'-less concatenation of the segments, with space runs
// collapsed. Used when the corpus record carries no original sentence.
std::string reconstructDisplay(const std::vector<std::string>& segments) {
  std::string joined;
  for (const std::string& segment : segments) joined += segment;
  std::u32string out;
  bool pending_space = false;
  for (char32_t cp : decodeUtf8(joined)) {
    if (cp == U'#') continue;
    if (isSpaceCp(cp)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) {
      out.push_back(U' ');
      pending_space = false;
    }
    out.push_back(cp);
  }
  return encodeUtf8(out);
}

}  // namespace

const char* accentClassName(AccentClass accent) {
  switch (accent) {
    case AccentClass::kAguda: return "aguda";
    case AccentClass::kGrave: return "grave";
    case AccentClass::kEsdruxula: return "esdruxula";
  }
  return "unknown";
}

std::string normalizeSyllable(std::string_view raw) { return normalizeText(raw); }

std::string rhymeSuffixOf(const std::vector<Syllable>& syllables) {
  size_t last_stressed = syllables.size();
  for (size_t i = syllables.size(); i-- > 0;) {
    if (syllables[i].stressed) {
      last_stressed = i;
      break;
    }
  }
  std::string tail;
  for (size_t i = last_stressed; i < syllables.size(); ++i) {
    if (i == last_stressed) {
      const size_t hash = syllables[i].raw.find('#');
      tail += syllables[i].raw.substr(hash + 1);
    } else {
      tail += syllables[i].raw;
    }
  }
  return normalizeText(tail);
}

ScannedVerse parseScansion(std::string_view line, std::string_view source_id,
                           std::string_view display_text) {
  const std::string_view trimmed = trimAscii(line);
  if (trimmed.empty()) throw Error(Errc::kEmptyLine, "empty scansion line");

  ScannedVerse verse;
  verse.source_id = std::string(source_id);
  verse.scansion = std::string(trimmed);

  const std::vector<std::string> segments = splitSegments(trimmed);
  std::vector<std::string> raw_segments;
  raw_segments.reserve(segments.size());

  for (size_t i = 0; i < segments.size(); ++i) {
    const std::string& segment = segments[i];
    const size_t hash = segment.find('#');
    const bool stressed = hash != std::string::npos;
    if (stressed) {
      if (segment.find('#', hash + 1) != std::string::npos) {
        throw Error(Errc::kMalformedMarker,
                    "more than one '#' in syllable \"" + segment + "\"");
      }
      if (hash + 1 >= segment.size() ||
          !isVowelCp(firstCodepoint(segment.substr(hash + 1)))) {
        throw Error(Errc::kMalformedMarker,
                    "'#' not followed by a vowel in \"" + segment + "\"");
      }
    }
    const std::string normalized = normalizeText(segment);
    if (normalized.empty()) {
      throw Error(Errc::kEmptySyllable,
                  "empty syllable at position " + std::to_string(i + 1));
    }
    verse.syllables.push_back({segment, normalized, stressed});
    if (stressed) verse.tonic_positions.push_back(static_cast<int>(i) + 1);
    raw_segments.push_back(segment);
  }

  if (verse.tonic_positions.empty()) {
    throw Error(Errc::kNoStressMarker, "no '#' stress marker in line");
  }

  verse.meter = verse.tonic_positions.back();
  verse.final_syllable = verse.syllables.back().normalized;
  verse.rhyme_suffix = rhymeSuffixOf(verse.syllables);
  verse.tonic_vowel =
      encodeUtf8(std::u32string(1, stripDiacriticCp(firstCodepoint(verse.rhyme_suffix))));

  const int after_stress = static_cast<int>(verse.syllables.size()) - verse.meter;
  verse.accent_class = after_stress == 0   ? AccentClass::kAguda
                       : after_stress == 1 ? AccentClass::kGrave
                                           : AccentClass::kEsdruxula;

  verse.display_text = display_text.empty() ? reconstructDisplay(raw_segments)
                                            : std::string(display_text);
  verse.final_word = finalWordOf(verse.display_text);
  return verse;
}

ScannedVerse parseScansion(std::string_view line) {
  return parseScansion(line, "", "");
}

}  // namespace verso
