// quadlie: check, construct and analyze quadratic Lie algebras from JSON.

#include "quadlie/commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw quadlie::document_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw quadlie::document_error("cannot write " + path);
  out << text;
}

std::vector<std::size_t> parse_indices(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
      throw quadlie::document_error("--ideal: expected comma-separated indices, got \"" + text + "\"");
    out.push_back(std::stoul(item));
  }
  if (out.empty()) throw quadlie::document_error("--ideal: empty index list");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with quadratic Lie algebras containing a Heisenberg ideal"};
  app.require_subcommand(1);
  std::string input = "-";
  std::string out;
  std::string ideal;
  std::optional<std::uint64_t> seed;
  bool lie_only = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("input", input, "input JSON document, - for stdin");
    sub->add_option("--out", out, "write the result here instead of stdout");
    sub->add_option("--seed", seed, "seed for randomized steps");
  };
  auto* check = app.add_subcommand("check", "Jacobi and metric checks");
  auto* construct = app.add_subcommand("construct", "run a construction document");
  auto* analyze = app.add_subcommand("analyze", "structure analysis");
  auto* roundtrip = app.add_subcommand("roundtrip", "recover (S, D, sigmaD) and rebuild");
  auto* forms = app.add_subcommand("forms", "invariant symmetric forms");
  for (auto* sub : {check, construct, analyze, roundtrip, forms}) add_common(sub);
  analyze->add_option("--ideal", ideal, "0-based basis indices spanning the Heisenberg ideal");
  analyze->add_flag("--lie-only", lie_only, "skip analyses that need a metric");
  roundtrip->add_option("--ideal", ideal, "0-based basis indices spanning the Heisenberg ideal")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : quadlie::exit_input;
  }

  try {
    quadlie::json doc = quadlie::parse_json_text(read_input(input));
    quadlie::CommandResult result;
    if (check->parsed()) {
      result = quadlie::cmd_check(quadlie::algebra_from_json(doc));
    } else if (construct->parsed()) {
      result = quadlie::cmd_construct(quadlie::construction_from_json(doc));
    } else if (analyze->parsed()) {
      std::optional<std::vector<std::size_t>> idx;
      if (!ideal.empty()) idx = parse_indices(ideal);
      result = quadlie::cmd_analyze(quadlie::algebra_from_json(doc), idx, lie_only);
    } else if (roundtrip->parsed()) {
      result = quadlie::cmd_roundtrip(quadlie::algebra_from_json(doc), parse_indices(ideal), seed);
    } else {
      result = quadlie::cmd_forms(quadlie::algebra_from_json(doc));
    }
    write_output(out, quadlie::print_json(result.report));
    return result.exit_code;
  } catch (const quadlie::internal_error& e) {
    std::cerr << "quadlie: " << e.what() << "\n";
    return quadlie::exit_violation;
  } catch (const quadlie::error& e) {
    std::cerr << "quadlie: " << e.what() << "\n";
    return quadlie::exit_input;
  }
}
