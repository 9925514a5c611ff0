// Error codes and the exception type shared by all verso modules.

#pragma once

#include <stdexcept>
#include <string>

namespace verso {

enum class Errc {
  // scansion
  kEmptyLine,
  kNoStressMarker,
  kMalformedMarker,
  kEmptySyllable,
  kInvalidEncoding,
  // corpus
  kFileNotFound,
  kCorpusParse,
  kDuplicateId,
  // scheme / configuration
  kEmptyScheme,
  kInvalidSchemeChar,
  kNoAvailableMeter,
  kBadConfig,
  // assembly
  kInfeasible,
  kExhaustedCandidates,
  // scoring
  kAllSkipped,
};

inline const char* errcName(Errc code) {
  switch (code) {
    case Errc::kEmptyLine: return "empty-line";
    case Errc::kNoStressMarker: return "no-stress-marker";
    case Errc::kMalformedMarker: return "malformed-marker";
    case Errc::kEmptySyllable: return "empty-syllable";
    case Errc::kInvalidEncoding: return "invalid-encoding";
    case Errc::kFileNotFound: return "file-not-found";
    case Errc::kCorpusParse: return "corpus-parse";
    case Errc::kDuplicateId: return "duplicate-id";
    case Errc::kEmptyScheme: return "empty-scheme";
    case Errc::kInvalidSchemeChar: return "invalid-scheme-char";
    case Errc::kNoAvailableMeter: return "no-available-meter";
    case Errc::kBadConfig: return "bad-config";
    case Errc::kInfeasible: return "infeasible";
    case Errc::kExhaustedCandidates: return "exhausted-candidates";
    case Errc::kAllSkipped: return "all-skipped";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace verso
