#pragma once

// Independent re-verification of certificates. Uses only element arithmetic
// and explicit element sets (no Howell forms or kernels) whenever the ring is
// small enough to enumerate.

#include <cstdint>
#include <string>

#include "finring/certificate.hpp"
#include "finring/ring.hpp"

namespace finring {

struct CheckOutcome {
  bool ok = false;
  std::string reason;
};

inline constexpr std::uint64_t kCheckerEnumerationCap = std::uint64_t{1} << 22;

CheckOutcome recheck(const Ring& r, const Certificate& cert);

}  // namespace finring
