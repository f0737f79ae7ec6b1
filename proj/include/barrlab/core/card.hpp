#pragma once

#include <cstdint>
#include <optional>

namespace barrlab {

/// Index of an element in the canonical enumeration of a finite set.
using Element = std::uint64_t;

/// Cardinality of a finite set. Sets whose size does not fit are not representable.
using Card = std::uint64_t;

std::optional<Card> checked_add(Card a, Card b);
std::optional<Card> checked_mul(Card a, Card b);
std::optional<Card> checked_pow(Card base, Card exponent);

/// Upper bound on the number of elements any operation will enumerate.
/// Defaults to 10^6; overridden by the BARRLAB_BLOWUP_GUARD environment variable
/// or by set_blowup_guard().
Card blowup_guard();
void set_blowup_guard(Card limit);

/// Restores the guard for the lifetime of the object.
class ScopedBlowupGuard {
 public:
  explicit ScopedBlowupGuard(Card limit);
  ~ScopedBlowupGuard();
  ScopedBlowupGuard(const ScopedBlowupGuard&) = delete;
  ScopedBlowupGuard& operator=(const ScopedBlowupGuard&) = delete;

 private:
  Card previous_;
};

}  // namespace barrlab
