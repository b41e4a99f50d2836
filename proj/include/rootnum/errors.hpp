#pragma once

#include <stdexcept>

namespace rootnum {

// Precondition failure: the caller handed us a value outside the operation's
// domain.
inline void require(bool ok, const char* what) {
  if (!ok) throw std::domain_error(what);
}

// Tripwire for facts the mathematics guarantees. Firing means a bug in this
// library, not bad input.
inline void internal_check(bool ok, const char* what) {
  if (!ok) throw std::logic_error(what);
}

}  // namespace rootnum
