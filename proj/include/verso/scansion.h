// Parser for scanned verse lines: "/" separates poetic syllables and "#"
// marks a stressed syllable, placed immediately before its vowel.

#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace verso {

enum class AccentClass { kAguda, kGrave, kEsdruxula };

const char* accentClassName(AccentClass accent);

struct Syllable {
  std::string raw;         // as written, may hold '#', elision spaces, punctuation
  std::string normalized;  // lowercase, '#'/space/punctuation stripped, diacritics kept
  bool stressed = false;
};

struct ScannedVerse {
  std::string source_id;
  std::string display_text;
  std::string scansion;  // the input line, outer whitespace trimmed
  std::vector<Syllable> syllables;
  std::vector<int> tonic_positions;  // 1-based, strictly increasing
  int meter = 0;                     // position of the last stressed syllable
  std::string final_syllable;        // normalized text of the last syllable
  std::string rhyme_suffix;          // from the last stressed vowel to the end
  std::string tonic_vowel;           // first codepoint of rhyme_suffix, diacritics folded
  AccentClass accent_class = AccentClass::kAguda;
  std::string final_word;            // last token of display_text, lowercased
  int ordinal = -1;                  // corpus-wide load order, set by the index
};

/// Parse one scansion line. Throws Error with kEmptyLine, kNoStressMarker,
/// kMalformedMarker or kEmptySyllable. When display_text is empty it is
/// reconstructed from the line ('/' and '#' dropped, space runs collapsed).
ScannedVerse parseScansion(std::string_view line, std::string_view source_id,
                           std::string_view display_text);

ScannedVerse parseScansion(std::string_view line);

/// Normalized syllable text: lowercase, '#'/whitespace/punctuation removed,
/// diacritics preserved. Idempotent.
std::string normalizeSyllable(std::string_view raw);

/// Rhyme tail of a parsed syllable sequence: raw text from the last stressed
/// syllable onward, cut just after the '#', then normalized.
std::string rhymeSuffixOf(const std::vector<Syllable>& syllables);

}  // namespace verso
