#pragma once

#include <optional>
#include <string>

#include "rxmeet/canonical.hpp"

namespace rxmeet {

enum class Verdict : std::uint8_t { Empty, NonEmpty };

// Result of an emptiness decision. `witness` is engaged exactly when the
// verdict is NonEmpty (the empty word is a valid witness). Some routes also
// report a canonical form for (part of) the intersection language.
struct Answer {
  Verdict verdict = Verdict::Empty;
  std::optional<Word> witness;
  std::optional<CanonicalForm> intersection;
  std::string algo;

  bool nonempty() const { return verdict == Verdict::NonEmpty; }
};

}  // namespace rxmeet
