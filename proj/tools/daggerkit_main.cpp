#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "daggerkit/manifest.hpp"

namespace {

int run(const std::string& command, const std::string& input_path,
        const std::string& output_path, const std::string& format,
        long long max_search) {
  using namespace daggerkit;

  std::ifstream in(input_path, std::ios::binary);
  if (!in) {
    std::cerr << "daggerkit: cannot open input file " << input_path << "\n";
    return 2;
  }
  std::ostringstream buf;
  buf << in.rdbuf();

  Report report;
  try {
    Manifest manifest = parse_manifest(buf.str());
    RunOptions opts;
    if (max_search > 0) opts.max_search = max_search;
    report = run_command(command, manifest, opts);
  } catch (const ParseError& e) {
    std::cerr << "daggerkit: parse error";
    if (e.line > 0) std::cerr << " at line " << e.line << ", column " << e.col;
    std::cerr << ": " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "daggerkit: usage error: " << e.what() << "\n";
    return 2;
  } catch (const SizeGuardError& e) {
    std::cerr << "daggerkit: size guard: " << e.what() << "\n";
    return 2;
  } catch (const SearchLimitError& e) {
    std::cerr << "daggerkit: search limit: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "daggerkit: error: " << e.what() << "\n";
    return 2;
  }

  const std::string text = emit_report(
      report, format == "machine" ? ReportFormat::Machine : ReportFormat::Text);
  if (output_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(output_path, std::ios::binary);
    if (!out) {
      std::cerr << "daggerkit: cannot open output file " << output_path << "\n";
      return 2;
    }
    out << text;
  }
  return report_exit_code(report);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"daggerkit: validate and transform finite dagger structures"};
  app.require_subcommand(1);

  const std::vector<std::string> commands = {
      "check",      "unitaries", "fixed-points", "strictify",   "univalentize",
      "complete",   "coherentify", "adjoints",   "strictify-2", "check-pivotal"};

  std::string input_path, output_path;
  std::string format = "text";
  long long max_search = 0;
  if (const char* env = std::getenv("DAGGERKIT_MAX_SEARCH")) {
    max_search = std::atoll(env);
  }

  for (const auto& name : commands) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("--input", input_path, "manifest file")->required();
    sub->add_option("--output", output_path, "write the report here instead of stdout");
    sub->add_option("--format", format, "text|machine")
        ->check(CLI::IsMember({"text", "machine"}));
    sub->add_option("--max-search", max_search,
                    "candidate ceiling for exhaustive searches");
  }

  CLI11_PARSE(app, argc, argv);
  return run(app.get_subcommands().front()->get_name(), input_path, output_path,
             format, max_search);
}
