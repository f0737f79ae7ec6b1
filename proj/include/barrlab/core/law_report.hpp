#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "barrlab/core/finset.hpp"

namespace barrlab {

enum class Verdict { Pass, Fail, Skipped };

std::string_view to_string(Verdict v);

/// The first element (in canonical order) at which the two sides of a law differ.
struct Counterexample {
  std::string carrier;
  Element element = 0;
  std::string label;
  std::string lhs;
  std::string rhs;
  std::string context;  // e.g. the function f a naturality square was instantiated at
};

struct LawResult {
  std::string law;
  std::string scope;
  Verdict verdict = Verdict::Pass;
  std::uint64_t checked = 0;
  std::optional<Counterexample> counterexample;
  std::string note;
};

struct LawReport {
  std::string subject;
  std::vector<LawResult> results;

  bool passed() const;   // every law passed
  bool failed() const;   // some law failed
  bool complete() const; // nothing skipped
  std::uint64_t checked() const;
  void append(const LawReport& other);
  const LawResult* find(std::string_view law, std::string_view scope = {}) const;
};

/// Both sides of an equation evaluated at one element of the check domain.
using SidesFn = std::function<std::pair<Element, Element>(Element)>;
using LabelFn = std::function<std::string(Element)>;

struct PointwiseLaw {
  std::string law;
  std::string scope;
  std::string carrier;  // name of the check domain
  Card count = 0;
  SidesFn sides;
  LabelFn element_label;  // label of a domain element
  LabelFn value_label;    // label of a value of either side
  std::function<std::string(Element)> context;  // optional
};

/// Exhaustively compares both sides over 0..count-1. Domains above the
/// enumeration guard are reported as Skipped, never sampled.
LawResult check_pointwise(const PointwiseLaw& law);

/// Builds a law lazily; size or guard errors raised while building become a
/// Skipped result with the error as note.
LawResult check_or_skip(const std::string& law, const std::string& scope,
                        const std::function<PointwiseLaw()>& build);

std::string scope_of(Card n);
std::string scope_of(Card n, Card m);

}  // namespace barrlab
