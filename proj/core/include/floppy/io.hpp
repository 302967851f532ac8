#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "floppy/arf.hpp"
#include "floppy/checks.hpp"
#include "floppy/curve.hpp"

namespace floppy {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Curve files: the diagram plus the "global" hypothesis block. Parsing
// validates shape only; run_all_checks does the semantic validation.
FloppyCurve curve_from_json(const std::string& text);
std::string curve_to_json(const FloppyCurve& F, int indent = 2);

// "link" block, standalone or embedded in a script.
LinkInstance link_from_json(const std::string& text);
std::string link_to_json(const LinkInstance& L, int indent = 2);

struct Derivation {
  FloppyCurve curve;
  std::optional<LinkInstance> link;
};

// Replay a derivation script: a base scheme, optional global hypothesis
// overrides, an ordered move list, and an optional link block. Throws
// ParseError on malformed input and std::runtime_error when a move does not
// apply.
Derivation run_derivation(const std::string& text);

// Deterministic report serializations; all numbers exact fractions.
std::string verdict_to_json(const Verdict& v, int indent = 2);
std::string verdict_to_text(const Verdict& v);

std::string read_file(const std::string& path);

}  // namespace floppy
