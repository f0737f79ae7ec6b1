#pragma once

#include <string>

#include "barrlab/core/card.hpp"

namespace barrlab {

/// A distance of the form 2^-n, or an upper bound 2^-n when two points could
/// not be told apart up to the probe depth n. Never a floating-point value.
struct DyadicDist {
  bool exact = false;
  Card depth = 0;

  static DyadicDist at(Card n) { return {true, n}; }
  static DyadicDist beyond(Card probe) { return {false, probe}; }

  /// True when the distance is known to be at most 2^-n.
  bool within(Card n) const { return depth >= n; }
  /// Larger of the two distances (the smaller depth); an exact value wins ties.
  static DyadicDist max(const DyadicDist& a, const DyadicDist& b);
  /// d(a) <= d(b) as far as the information allows.
  static bool at_most(const DyadicDist& a, const DyadicDist& b);

  std::string to_string() const;
  friend bool operator==(const DyadicDist&, const DyadicDist&) = default;
};

}  // namespace barrlab
