#include "verso/text.h"

#include <vector>

#include "verso/error.h"

namespace verso {

std::u32string decodeUtf8(std::string_view text) {
  std::u32string out;
  out.reserve(text.size());
  size_t i = 0;
  auto fail = [&]() {
    throw Error(Errc::kInvalidEncoding,
                "invalid UTF-8 at byte " + std::to_string(i));
  };
  while (i < text.size()) {
    const unsigned char lead = static_cast<unsigned char>(text[i]);
    char32_t cp = 0;
    int extra = 0;
    if (lead < 0x80) {
      cp = lead;
    } else if ((lead >> 5) == 0x6) {
      cp = lead & 0x1F;
      extra = 1;
    } else if ((lead >> 4) == 0xE) {
      cp = lead & 0x0F;
      extra = 2;
    } else if ((lead >> 3) == 0x1E) {
      cp = lead & 0x07;
      extra = 3;
    } else {
      fail();
    }
    if (i + extra >= text.size()) fail();
    for (int k = 1; k <= extra; ++k) {
      const unsigned char cont = static_cast<unsigned char>(text[i + k]);
      if ((cont >> 6) != 0x2) fail();
      cp = (cp << 6) | (cont & 0x3F);
    }
    i += extra + 1;
    out.push_back(cp);
  }
  return out;
}

std::string encodeUtf8(std::u32string_view codepoints) {
  std::string out;
  out.reserve(codepoints.size());
  for (char32_t cp : codepoints) {
    if (cp < 0x80) {
      out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
      out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
      out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
      out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
  }
  return out;
}

char32_t toLowerCp(char32_t cp) {
  if (cp >= U'A' && cp <= U'Z') return cp + 0x20;
  // Latin-1 supplement uppercase block, skipping the multiplication sign.
  if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return cp + 0x20;
  return cp;
}

char32_t stripDiacriticCp(char32_t cp) {
  switch (toLowerCp(cp)) {
    case 0xE0: case 0xE1: case 0xE2: case 0xE3: case 0xE4: case 0xE5:
      return U'a';
    case 0xE8: case 0xE9: case 0xEA: case 0xEB:
      return U'e';
    case 0xEC: case 0xED: case 0xEE: case 0xEF:
      return U'i';
    case 0xF2: case 0xF3: case 0xF4: case 0xF5: case 0xF6:
      return U'o';
    case 0xF9: case 0xFA: case 0xFB: case 0xFC:
      return U'u';
    case 0xE7:
      return U'c';
    case 0xF1:
      return U'n';
    default:
      return toLowerCp(cp);
  }
}

bool isVowelCp(char32_t cp) {
  const char32_t base = stripDiacriticCp(cp);
  return base == U'a' || base == U'e' || base == U'i' || base == U'o' ||
         base == U'u';
}

bool isSpaceCp(char32_t cp) {
  return cp == U' ' || cp == U'\t' || cp == 0xA0;
}

bool isPunctCp(char32_t cp) {
  switch (cp) {
    case U'.': case U',': case U';': case U':': case U'!': case U'?':
    case U'"': case U'\'': case U'(': case U')': case U'-':
    case 0xAB:    // «
    case 0xBB:    // »
    case 0x2010:  // hyphen
    case 0x2013:  // en dash
    case 0x2014:  // em dash
    case 0x2018: case 0x2019:  // single quotes
    case 0x201C: case 0x201D:  // double quotes
    case 0x2026:  // ellipsis
      return true;
    default:
      return false;
  }
}

std::string normalizeText(std::string_view raw) {
  std::u32string out;
  for (char32_t cp : decodeUtf8(raw)) {
    if (cp == U'#' || isSpaceCp(cp) || isPunctCp(cp)) continue;
    out.push_back(toLowerCp(cp));
  }
  return encodeUtf8(out);
}

std::string lowercaseText(std::string_view text) {
  std::u32string out = decodeUtf8(text);
  for (char32_t& cp : out) cp = toLowerCp(cp);
  return encodeUtf8(out);
}

char32_t firstCodepoint(std::string_view text) {
  return decodeUtf8(text).at(0);
}

std::string finalWordOf(std::string_view text) {
  const std::u32string cps = decodeUtf8(text);
  std::vector<std::u32string> tokens(1);
  for (char32_t cp : cps) {
    if (isSpaceCp(cp)) {
      if (!tokens.back().empty()) tokens.emplace_back();
    } else {
      tokens.back().push_back(cp);
    }
  }
  for (auto it = tokens.rbegin(); it != tokens.rend(); ++it) {
    std::u32string token = *it;
    size_t begin = 0;
    size_t end = token.size();
    while (begin < end && isPunctCp(token[begin])) ++begin;
    while (end > begin && isPunctCp(token[end - 1])) --end;
    if (begin == end) continue;
    std::u32string word = token.substr(begin, end - begin);
    for (char32_t& cp : word) cp = toLowerCp(cp);
    return encodeUtf8(word);
  }
  return "";
}

std::string_view trimAscii(std::string_view text) {
  const char* ws = " \t\r\n";
  const size_t begin = text.find_first_not_of(ws);
  if (begin == std::string_view::npos) return {};
  const size_t end = text.find_last_not_of(ws);
  return text.substr(begin, end - begin + 1);
}

}  // namespace verso
