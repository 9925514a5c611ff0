// UTF-8 text helpers: codepoint classification, lowercasing, diacritic
// folding and the syllable normalization used across the engine.

#pragma once

#include <string>
#include <string_view>

namespace verso {

std::u32string decodeUtf8(std::string_view text);
std::string encodeUtf8(std::u32string_view codepoints);

char32_t toLowerCp(char32_t cp);
char32_t stripDiacriticCp(char32_t cp);
bool isVowelCp(char32_t cp);
bool isSpaceCp(char32_t cp);
bool isPunctCp(char32_t cp);

/// Lowercase; '#', whitespace and punctuation removed; diacritics kept.
/// May return an empty string; callers reject empty syllables.
std::string normalizeText(std::string_view raw);

std::string lowercaseText(std::string_view text);

/// First codepoint of a non-empty UTF-8 string.
char32_t firstCodepoint(std::string_view text);

/// Last whitespace-delimited token with surrounding punctuation stripped,
/// lowercased. Tokens that are punctuation-only are skipped.
std::string finalWordOf(std::string_view text);

std::string_view trimAscii(std::string_view text);

}  // namespace verso
