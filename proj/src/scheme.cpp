#include "verso/scheme.h"

#include <algorithm>
#include <cctype>

#include "verso/error.h"
#include "verso/text.h"

namespace verso {

RhymeScheme parseScheme(std::string_view text) {
  RhymeScheme scheme;
  std::string token;
  auto flushToken = [&]() {
    if (token.empty()) return;
    const int stanza = static_cast<int>(scheme.stanzas.size());
    for (size_t i = 0; i < token.size(); ++i) {
      scheme.flat.push_back({static_cast<int>(scheme.flat.size()), stanza,
                             token[i], i == 0});
    }
    scheme.stanzas.push_back(token);
    token.clear();
  };
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      flushToken();
      continue;
    }
    if (!std::isalpha(static_cast<unsigned char>(c))) {
      throw Error(Errc::kInvalidSchemeChar,
                  std::string("invalid scheme character '") + c + "'");
    }
    token.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  }
  flushToken();
  if (scheme.flat.empty()) {
    throw Error(Errc::kEmptyScheme, "rhyme scheme is empty");
  }
  return scheme;
}

std::string renderScheme(const RhymeScheme& scheme) {
  std::string out;
  for (const std::string& stanza : scheme.stanzas) {
    if (!out.empty()) out += ' ';
    out += stanza;
  }
  return out;
}

std::vector<char> letterOrder(const RhymeScheme& scheme) {
  std::vector<char> order;
  for (const VerseSlot& slot : scheme.flat) {
    if (std::find(order.begin(), order.end(), slot.letter) == order.end()) {
      order.push_back(slot.letter);
    }
  }
  return order;
}

std::vector<int> resolveMeters(const MeterPlan& plan,
                               const std::set<int>& available, Rng& rng) {
  const std::vector<int> choices(available.begin(), available.end());
  std::vector<int> resolved;
  resolved.reserve(plan.per_verse.size());
  for (const std::optional<int>& meter : plan.per_verse) {
    if (meter) {
      resolved.push_back(*meter);
      continue;
    }
    if (choices.empty()) {
      throw Error(Errc::kNoAvailableMeter,
                  "no meter has supply in the corpus index");
    }
    resolved.push_back(choices[rng.uniform(choices.size())]);
  }
  return resolved;
}

void validateWeights(const CriterionWeights& weights) {
  const double values[] = {weights.er, weights.st, weights.ac, weights.ri,
                           weights.rtc};
  bool any_positive = false;
  for (double w : values) {
    if (w < 0.0) {
      throw Error(Errc::kBadConfig, "criterion weights must be non-negative");
    }
    if (w > 0.0) any_positive = true;
  }
  if (!any_positive) {
    throw Error(Errc::kBadConfig, "at least one criterion weight must be positive");
  }
}

}  // namespace verso
