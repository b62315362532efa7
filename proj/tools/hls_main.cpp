// hls: load, validate and analyze Hom-Lie superalgebras given by exact
// rational structure constants; solve for biderivation / centroid /
// commuting-map spaces; run the full identity verification suite.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hls/algebra.hpp"
#include "hls/algebra_io.hpp"
#include "hls/errors.hpp"
#include "hls/report_io.hpp"
#include "hls/verification.hpp"
#include "hls/zoo.hpp"

namespace {

using namespace hls;

std::string read_stream(std::istream& in) {
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ZooParams parse_params(const std::vector<std::string>& kvs) {
  ZooParams out;
  for (const std::string& kv : kvs) {
    auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw InputError("bad --param '" + kv + "': expected key=value");
    }
    std::string key = kv.substr(0, eq);
    if (out.count(key)) throw InputError("duplicate --param key '" + key + "'");
    out.emplace(std::move(key), Rational::parse(kv.substr(eq + 1)));
  }
  return out;
}

enum class InputKind { File, Stdin, Zoo };

InputKind classify_input(const std::string& input) {
  if (input == "-") return InputKind::Stdin;
  if (std::filesystem::exists(input)) return InputKind::File;
  return InputKind::Zoo;
}

bool zoo_has(const std::string& name) {
  for (const ZooEntry& e : zoo_catalog()) {
    if (e.name == name) return true;
  }
  return false;
}

std::string slurp(const std::string& input, InputKind kind) {
  if (kind == InputKind::Stdin) return read_stream(std::cin);
  std::ifstream f(input);
  if (!f) throw InputError("cannot open file: " + input);
  return read_stream(f);
}

/// Input resolution shared by all algebra commands: an existing file path,
/// "-" for stdin, or a zoo entry name. --param values apply to zoo entries.
std::string text_or_zoo(const std::string& input, const ZooParams& params,
                        InputKind& kind_out) {
  kind_out = classify_input(input);
  if (kind_out == InputKind::Zoo) {
    if (!zoo_has(input)) throw InputError("no such file or zoo entry: " + input);
    return {};
  }
  if (!params.empty()) throw InputError("--param only applies to zoo inputs");
  return slurp(input, kind_out);
}

HomLieSuperalgebra load_checked(const std::string& input, const ZooParams& params) {
  InputKind kind;
  std::string text = text_or_zoo(input, params, kind);
  if (kind == InputKind::Zoo) return zoo_get(input, params);
  return load_algebra(text);
}

struct Options {
  std::string input;
  std::vector<std::string> params;
  std::string format = "text";
  std::string convention = "skew";
  std::string degree = "all";
};

SymmetryConvention to_convention(const std::string& s) {
  return s == "printed" ? SymmetryConvention::Printed : SymmetryConvention::Skew;
}

DegreeFilter to_filter(const std::string& s) {
  if (s == "0") return DegreeFilter::Even;
  if (s == "1") return DegreeFilter::Odd;
  return DegreeFilter::All;
}

int cmd_validate(const Options& o) {
  ZooParams params = parse_params(o.params);
  InputKind kind;
  std::string text = text_or_zoo(o.input, params, kind);
  HomLieSuperalgebra h = kind == InputKind::Zoo
                             ? zoo_get(o.input, params)
                             : assemble_unchecked(parse_description(text));
  ValidationReport r = validate(h);
  if (o.format == "json") {
    std::cout << validation_json(h, r).dump(2) << "\n";
  } else {
    std::cout << validation_text(h, r);
  }
  return r.axioms_ok() ? 0 : 1;
}

int cmd_analyze(const Options& o) {
  HomLieSuperalgebra h = load_checked(o.input, parse_params(o.params));
  AnalyzeReport a = analyze(h);
  if (o.format == "json") {
    std::cout << analyze_json(h, a).dump(2) << "\n";
  } else {
    std::cout << analyze_text(h, a);
  }
  return 0;
}

int cmd_spaces(const Options& o) {
  HomLieSuperalgebra h = load_checked(o.input, parse_params(o.params));
  DegreeFilter f = to_filter(o.degree);
  SymmetryConvention conv = to_convention(o.convention);
  if (o.format == "json") {
    std::cout << spaces_json(h, f, conv).dump(2) << "\n";
  } else {
    std::cout << spaces_text(h, f, conv);
  }
  return 0;
}

int cmd_verify(const Options& o) {
  HomLieSuperalgebra h = load_checked(o.input, parse_params(o.params));
  VerifyReport r = run_verification(h, to_convention(o.convention));
  if (o.format == "json") {
    std::cout << verify_json(r).dump(2) << "\n";
  } else {
    std::cout << render_text(r);
  }
  return r.all_passed() ? 0 : 3;
}

int cmd_zoo_list(const Options& o) {
  if (o.format == "json") {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const ZooEntry& e : zoo_catalog()) {
      nlohmann::ordered_json j;
      j["name"] = e.name;
      j["summary"] = e.summary;
      j["params"] = e.params;
      arr.push_back(std::move(j));
    }
    std::cout << arr.dump(2) << "\n";
  } else {
    for (const ZooEntry& e : zoo_catalog()) {
      std::cout << e.name;
      for (std::size_t i = e.name.size(); i < 16; ++i) std::cout << ' ';
      std::cout << e.summary;
      if (!e.params.empty()) {
        std::cout << " (params:";
        for (const std::string& p : e.params) std::cout << " " << p;
        std::cout << ")";
      }
      std::cout << "\n";
    }
  }
  return 0;
}

int cmd_zoo_emit(const Options& o) {
  if (!zoo_has(o.input)) throw InputError("unknown zoo entry: " + o.input);
  std::cout << emit_description(zoo_get(o.input, parse_params(o.params)));
  return 0;
}

void add_format(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
}

void add_input(CLI::App* cmd, Options& o) {
  cmd->add_option("input", o.input, "algebra file, '-' for stdin, or zoo entry name")
      ->required();
  cmd->add_option("--param", o.params, "zoo parameter as key=value (repeatable)");
}

void add_convention(CLI::App* cmd, Options& o) {
  cmd->add_option("--convention", o.convention,
                  "symmetry convention for bilinear maps")
      ->check(CLI::IsMember({"skew", "printed"}))
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact structure-constant toolkit for Hom-Lie superalgebras"};
  app.require_subcommand(1);

  Options o;
  int rc = 0;

  CLI::App* validate_cmd =
      app.add_subcommand("validate", "check the axioms and report witnesses");
  add_input(validate_cmd, o);
  add_format(validate_cmd, o);
  validate_cmd->callback([&]() { rc = cmd_validate(o); });

  CLI::App* analyze_cmd =
      app.add_subcommand("analyze", "structural summary: derived subalgebra, "
                                    "center, centralizer, flags");
  add_input(analyze_cmd, o);
  add_format(analyze_cmd, o);
  analyze_cmd->callback([&]() { rc = cmd_analyze(o); });

  CLI::App* spaces_cmd = app.add_subcommand(
      "spaces", "solve for biderivation, centroid and commuting-map spaces");
  add_input(spaces_cmd, o);
  add_format(spaces_cmd, o);
  add_convention(spaces_cmd, o);
  spaces_cmd->add_option("--degree", o.degree, "graded degree filter")
      ->check(CLI::IsMember({"0", "1", "all"}))
      ->capture_default_str();
  spaces_cmd->callback([&]() { rc = cmd_spaces(o); });

  CLI::App* verify_cmd =
      app.add_subcommand("verify", "run every applicable identity and theorem check");
  add_input(verify_cmd, o);
  add_format(verify_cmd, o);
  add_convention(verify_cmd, o);
  verify_cmd->callback([&]() { rc = cmd_verify(o); });

  CLI::App* zoo_cmd = app.add_subcommand("zoo", "built-in algebra catalog");
  zoo_cmd->require_subcommand(1);
  CLI::App* list_cmd = zoo_cmd->add_subcommand("list", "list catalog entries");
  add_format(list_cmd, o);
  list_cmd->callback([&]() { rc = cmd_zoo_list(o); });
  CLI::App* emit_cmd =
      zoo_cmd->add_subcommand("emit", "print a catalog entry as an algebra file");
  emit_cmd->add_option("name", o.input, "zoo entry name")->required();
  emit_cmd->add_option("--param", o.params, "zoo parameter as key=value (repeatable)");
  add_format(emit_cmd, o);
  emit_cmd->callback([&]() { rc = cmd_zoo_emit(o); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const hls::TheoremViolation& e) {
    std::cerr << "theorem violation: " << e.what() << "\n";
    return 3;
  } catch (const hls::ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 1;
  } catch (const hls::PreconditionError& e) {
    std::cerr << "precondition error: " << e.what() << "\n";
    return 2;
  } catch (const hls::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
