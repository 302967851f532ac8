#pragma once

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace floppy {

// Topological scheme of a curve in the projective plane, written in nested
// bracket notation: "1<1>" is a nest of two ovals, "J+1" a one-sided
// component plus an oval, "1<2+1<18>>" an oval containing two empty ovals and
// an 18-oval nest. Separators '+', '⊔' (or the ASCII alias 'u') are
// interchangeable; whitespace is ignored; a bare count n means n empty ovals.

struct SchemeItem;

struct SchemeExpr {
  std::vector<SchemeItem> items;

  bool operator==(const SchemeExpr&) const;
};

struct SchemeItem {
  bool one_sided = false;  // the J component; count/contents unused when set
  long long count = 1;     // multiplicity, >= 1
  SchemeExpr contents;     // what each of the `count` ovals contains

  bool operator==(const SchemeItem&) const = default;
};

inline bool SchemeExpr::operator==(const SchemeExpr& o) const { return items == o.items; }

struct SchemeParseError : std::runtime_error {
  std::size_t offset;  // 0-based byte offset into the input
  SchemeParseError(std::string msg, std::size_t off)
      : std::runtime_error(std::move(msg) + " (byte " + std::to_string(off) + ")"), offset(off) {}
};

// Parse and structural validation (counts >= 1, at most one J, J only at top
// level). Empty / whitespace-only input is the empty scheme.
SchemeExpr parse_scheme(const std::string& text);

// Fixed total order: J first, then ovals by (subtree depth, rendered
// contents, count); adjacent ovals with identical contents merge by summing
// counts. Idempotent, and parse(render(e)) == canonicalize(e).
SchemeExpr canonicalize(const SchemeExpr& e);

// Renders the canonical form using '+' separators.
std::string render(const SchemeExpr& e);

// Number of ovals denoted, nested multiplicities multiplying out.
long long oval_count(const SchemeExpr& e);

bool has_one_sided(const SchemeExpr& e);

}  // namespace floppy
