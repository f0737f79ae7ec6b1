#include "barrlab/core/card.hpp"

#include <atomic>
#include <cstdlib>
#include <limits>
#include <string>

#include "barrlab/error.hpp"

namespace barrlab {

namespace {

constexpr Card kDefaultGuard = 1'000'000;

Card initial_guard() {
  if (const char* env = std::getenv("BARRLAB_BLOWUP_GUARD")) {
    try {
      return static_cast<Card>(std::stoull(env));
    } catch (const std::exception&) {
      throw Error(ErrorKind::InvalidInput,
                  std::string("BARRLAB_BLOWUP_GUARD is not an integer: ") + env);
    }
  }
  return kDefaultGuard;
}

std::atomic<Card>& guard_storage() {
  static std::atomic<Card> guard{initial_guard()};
  return guard;
}

}  // namespace

std::optional<Card> checked_add(Card a, Card b) {
  if (a > std::numeric_limits<Card>::max() - b) return std::nullopt;
  return a + b;
}

std::optional<Card> checked_mul(Card a, Card b) {
  if (a != 0 && b > std::numeric_limits<Card>::max() / a) return std::nullopt;
  return a * b;
}

std::optional<Card> checked_pow(Card base, Card exponent) {
  Card result = 1;
  if (base == 0) return exponent == 0 ? 1 : 0;
  if (base == 1) return 1;
  for (Card i = 0; i < exponent; ++i) {
    auto next = checked_mul(result, base);
    if (!next) return std::nullopt;
    result = *next;
  }
  return result;
}

Card blowup_guard() { return guard_storage().load(); }

void set_blowup_guard(Card limit) { guard_storage().store(limit); }

ScopedBlowupGuard::ScopedBlowupGuard(Card limit) : previous_(blowup_guard()) {
  set_blowup_guard(limit);
}

ScopedBlowupGuard::~ScopedBlowupGuard() { set_blowup_guard(previous_); }

}  // namespace barrlab
