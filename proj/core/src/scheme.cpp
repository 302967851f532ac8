#include "floppy/scheme.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace floppy {
namespace {

struct Parser {
  const std::string& s;
  std::size_t pos = 0;
  bool seen_j = false;

  explicit Parser(const std::string& text) : s(text) {}

  void skip_ws() {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t' || s[pos] == '\n' || s[pos] == '\r'))
      ++pos;
  }

  bool at_end() {
    skip_ws();
    return pos >= s.size();
  }

  // '+' or 'u' or UTF-8 '⊔' (e2 8a 94)
  bool eat_separator() {
    skip_ws();
    if (pos >= s.size()) return false;
    if (s[pos] == '+' || s[pos] == 'u') {
      ++pos;
      return true;
    }
    if (s.compare(pos, 3, "\xe2\x8a\x94") == 0) {
      pos += 3;
      return true;
    }
    return false;
  }

  SchemeItem parse_item(bool top_level) {
    skip_ws();
    if (pos >= s.size()) throw SchemeParseError("expected scheme item", pos);
    if (s[pos] == 'J') {
      if (!top_level) throw SchemeParseError("nested 'J'", pos);
      if (seen_j) throw SchemeParseError("more than one 'J'", pos);
      seen_j = true;
      ++pos;
      SchemeItem it;
      it.one_sided = true;
      return it;
    }
    if (!std::isdigit(static_cast<unsigned char>(s[pos])))
      throw SchemeParseError("expected count or 'J'", pos);
    std::size_t count_at = pos;
    long long count = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      count = count * 10 + (s[pos] - '0');
      if (count > 1'000'000'000) throw SchemeParseError("count out of range", count_at);
      ++pos;
    }
    if (count == 0) throw SchemeParseError("multiplicity 0", count_at);
    SchemeItem it;
    it.count = count;
    skip_ws();
    if (pos < s.size() && s[pos] == '<') {
      ++pos;
      it.contents = parse_expr(false);
      skip_ws();
      if (pos >= s.size() || s[pos] != '>') throw SchemeParseError("expected '>'", pos);
      ++pos;
    }
    return it;
  }

  SchemeExpr parse_expr(bool top_level) {
    SchemeExpr e;
    e.items.push_back(parse_item(top_level));
    while (eat_separator()) e.items.push_back(parse_item(top_level));
    return e;
  }
};

int subtree_depth(const SchemeItem& it) {
  if (it.one_sided) return 0;
  int d = 0;
  for (const auto& c : it.contents.items) d = std::max(d, subtree_depth(c));
  return 1 + d;
}

std::string render_expr(const SchemeExpr& e);

std::string render_item(const SchemeItem& it) {
  if (it.one_sided) return "J";
  std::string s = std::to_string(it.count);
  if (!it.contents.items.empty()) s += "<" + render_expr(it.contents) + ">";
  return s;
}

std::string render_expr(const SchemeExpr& e) {
  std::string out;
  for (std::size_t i = 0; i < e.items.size(); ++i) {
    if (i) out += "+";
    out += render_item(e.items[i]);
  }
  return out;
}

}  // namespace

SchemeExpr parse_scheme(const std::string& text) {
  Parser p(text);
  if (p.at_end()) return {};
  SchemeExpr e = p.parse_expr(true);
  p.skip_ws();
  if (p.pos != text.size()) throw SchemeParseError("trailing input", p.pos);
  return e;
}

SchemeExpr canonicalize(const SchemeExpr& e) {
  // canonical children first, then merge items with identical contents
  bool one_sided = false;
  std::map<std::string, SchemeItem> groups;
  for (const auto& it : e.items) {
    if (it.one_sided) {
      one_sided = true;
      continue;
    }
    SchemeItem c = it;
    c.contents = canonicalize(c.contents);
    std::string key = render_expr(c.contents);
    auto [pos, fresh] = groups.emplace(key, c);
    if (!fresh) pos->second.count += c.count;
  }
  SchemeExpr out;
  if (one_sided) {
    SchemeItem j;
    j.one_sided = true;
    out.items.push_back(j);
  }
  for (auto& [key, it] : groups) out.items.push_back(std::move(it));
  // J first, then (depth of subtree, rendered item)
  std::stable_sort(out.items.begin(), out.items.end(),
                   [](const SchemeItem& a, const SchemeItem& b) {
                     auto key = [](const SchemeItem& it) {
                       return std::tuple<int, int, std::string>(it.one_sided ? 0 : 1,
                                                                subtree_depth(it), render_item(it));
                     };
                     return key(a) < key(b);
                   });
  return out;
}

std::string render(const SchemeExpr& e) { return render_expr(canonicalize(e)); }

long long oval_count(const SchemeExpr& e) {
  long long total = 0;
  for (const auto& it : e.items)
    if (!it.one_sided) total += it.count * (1 + oval_count(it.contents));
  return total;
}

bool has_one_sided(const SchemeExpr& e) {
  for (const auto& it : e.items)
    if (it.one_sided) return true;
  return false;
}

}  // namespace floppy
