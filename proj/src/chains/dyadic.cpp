#include "barrlab/chains/dyadic.hpp"

namespace barrlab {

DyadicDist DyadicDist::max(const DyadicDist& a, const DyadicDist& b) {
  if (a.depth != b.depth) return a.depth < b.depth ? a : b;
  return a.exact ? a : b;
}

bool DyadicDist::at_most(const DyadicDist& a, const DyadicDist& b) {
  if (!b.exact) return !a.exact && a.depth >= b.depth;
  return a.depth >= b.depth;
}

std::string DyadicDist::to_string() const {
  if (exact) return "2^-" + std::to_string(depth);
  return "<= 2^-" + std::to_string(depth) + " (no difference up to depth " +
         std::to_string(depth) + ")";
}

}  // namespace barrlab
