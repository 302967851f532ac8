#include "check_tool.hpp"

#include <optional>

#include "CLI11.hpp"

#include "floppy/io.hpp"

namespace floppy::cli {

namespace {

struct Input {
  std::string label;
  FloppyCurve curve;
  std::optional<LinkInstance> link;
};

}  // namespace

int run_check(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Decide whether a curve candidate is prohibited by the obstruction checks"};
  app.name("check");

  std::vector<std::string> schemes, diagram_files, derivation_files;
  long long degree = 0;
  std::string link_file;
  bool strict = false, assume_ok = false, json = false, dot = false;

  app.add_option("--scheme", schemes, "nonsingular scheme in bracket notation (repeatable)");
  app.add_option("--degree", degree, "curve degree for --scheme inputs (even)");
  app.add_option("--diagram", diagram_files, "curve file (repeatable)");
  app.add_option("--derivation", derivation_files, "derivation script (repeatable)");
  app.add_option("--link", link_file, "link block applied to every input");
  app.add_flag("--strict", strict, "treat validity failures as prohibitions");
  app.add_flag("--assume-ok", assume_ok,
               "let prohibitions that rest on unverified assumptions drive the exit code");
  app.add_flag("--json", json, "machine-readable reports");
  app.add_flag("--dot", dot, "dump the face-adjacency graph instead of a report");

  // CLI11 wants argv-style reversed arguments
  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "check: " << e.what() << "\n";
    return 1;
  }

  if (schemes.empty() && diagram_files.empty() && derivation_files.empty()) {
    err << "check: no input; give --scheme, --diagram, or --derivation\n";
    return 1;
  }
  if (!schemes.empty() && (degree < 2 || degree % 2)) {
    err << "check: --scheme needs --degree (even, at least 2)\n";
    return 1;
  }

  std::vector<Input> inputs;
  try {
    std::optional<LinkInstance> forced_link;
    if (!link_file.empty()) forced_link = link_from_json(read_file(link_file));
    for (const auto& s : schemes) {
      Input in;
      in.label = "scheme " + s;
      in.curve = expand_scheme(parse_scheme(s), degree);
      in.link = forced_link;
      inputs.push_back(std::move(in));
    }
    for (const auto& f : diagram_files) {
      Input in;
      in.label = f;
      in.curve = curve_from_json(read_file(f));
      in.link = forced_link;
      inputs.push_back(std::move(in));
    }
    for (const auto& f : derivation_files) {
      Input in;
      in.label = f;
      Derivation d = run_derivation(read_file(f));
      in.curve = std::move(d.curve);
      in.link = forced_link ? forced_link : d.link;
      inputs.push_back(std::move(in));
    }
  } catch (const std::exception& e) {
    err << "check: " << e.what() << "\n";
    return 1;
  }

  bool any_prohibited = false;
  bool any_invalid = false;
  for (const auto& in : inputs) {
    Verdict v = run_all_checks(in.curve, in.link, strict);
    if (dot) {
      out << dot_dump(in.curve.diagram);
    } else if (json) {
      out << verdict_to_json(v);
    } else {
      if (inputs.size() > 1) out << "== " << in.label << " ==\n";
      out << verdict_to_text(v);
    }
    if (v.verdict == "invalid") any_invalid = true;
    if (v.verdict == "prohibited") any_prohibited = true;
    if (v.verdict == "prohibited_under_assumptions" && assume_ok) any_prohibited = true;
  }
  if (any_invalid) return 1;
  return any_prohibited ? 2 : 0;
}

}  // namespace floppy::cli
