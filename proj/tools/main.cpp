// main.cpp -- command line front end.
//
// Exit codes: 0 all verdicts pass, 1 a checked property failed,
// 2 usage or parse error.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "fock/analysis.hpp"
#include "fock/gallery.hpp"
#include "fock/version.hpp"

namespace {

std::optional<std::string> read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void emit(const fock::CommandResult& result, const std::string& json_path) {
  std::string text = result.report.dump(2);
  text += '\n';
  if (!json_path.empty()) {
    std::ofstream out(json_path, std::ios::binary);
    out << text;
    // Short human summary on stdout when the full report goes to a file.
    for (const auto& verdict : result.report["verdicts"])
      std::cout << verdict["predicate"].get<std::string>() << ": "
                << verdict["verdict"].get<std::string>() << "\n";
  } else {
    std::cout << text;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{std::string(fock::kToolName) +
               " -- Fock-space representations of graphs, higher-rank graph skeletons, "
               "and finitely presented path categories"};
  app.set_version_flag("--version", fock::kToolVersion);
  app.require_subcommand(1);

  fock::AnalysisOptions options;
  std::string json_path;
  app.add_option("--max-length", options.max_length, "word/class length bound")
      ->capture_default_str();
  app.add_option("--truncation", options.truncation, "Fock space truncation level")
      ->capture_default_str();
  app.add_option("--tolerance", options.tolerance, "numeric tolerance for exact identities")
      ->capture_default_str();
  app.add_option("--seed", options.seed, "seed for randomized checks")->capture_default_str();
  app.add_option("--json", json_path, "write the full JSON report to this path");

  struct Sub {
    CLI::App* cmd;
    std::string file;
  };
  std::map<std::string, Sub> subs;
  for (const char* name : {"check-axioms", "enumerate", "fock-build", "verify-ck", "cesaro",
                           "fourier", "analyze"}) {
    Sub sub;
    sub.cmd = app.add_subcommand(name, "");
    sub.cmd->fallthrough();
    subs[name] = sub;
    subs[name].cmd->add_option("file", subs[name].file, "structure file ('-' for stdin)")
        ->required();
  }
  subs["check-axioms"].cmd->description("validate the structure's defining axioms");
  subs["enumerate"].cmd->description("enumerate path classes up to --max-length");
  subs["fock-build"].cmd->description("build the truncated Fock basis and export the operators");
  subs["verify-ck"].cmd->description("verify the left regular family's relations");
  subs["cesaro"].cmd->description("block diagonals and Cesaro convergence for a seeded operator");
  subs["fourier"].cmd->description("Fourier coefficients and reconstruction for a seeded element");
  subs["analyze"].cmd->description("full structural and algebraic analysis");

  CLI::App* gallery = app.add_subcommand("gallery", "run the built-in example fixtures");
  gallery->fallthrough();
  std::string gallery_name;
  bool gallery_list = false;
  std::string gallery_export;
  gallery->add_option("name", gallery_name, "run a single fixture");
  gallery->add_flag("--list", gallery_list, "list fixture names");
  gallery->add_option("--export", gallery_export, "write fixtures as .fsg files to this directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gallery->parsed()) {
      auto result = fock::run_gallery(
          gallery_name.empty() ? std::nullopt : std::make_optional(gallery_name), gallery_list,
          gallery_export.empty() ? std::nullopt : std::make_optional(gallery_export), options);
      emit(result, json_path);
      return result.exit_code;
    }

    std::string command;
    for (auto& [name, sub] : subs)
      if (sub.cmd->parsed()) command = name;
    auto input = read_input(subs[command].file);
    if (!input) {
      std::cerr << "error: cannot read '" << subs[command].file << "'\n";
      return 2;
    }
    auto loaded = fock::load_structure(*input, command, options);
    if (auto* failure = std::get_if<fock::CommandResult>(&loaded)) {
      emit(*failure, json_path);
      return failure->exit_code;
    }
    auto& structure = std::get<fock::Structure>(loaded);

    fock::CommandResult result;
    if (command == "check-axioms") result = fock::run_check_axioms(structure, options);
    else if (command == "enumerate") result = fock::run_enumerate(structure, options);
    else if (command == "fock-build") result = fock::run_fock_build(structure, options);
    else if (command == "verify-ck") result = fock::run_verify_ck(structure, options);
    else if (command == "cesaro") result = fock::run_cesaro(structure, options);
    else if (command == "fourier") result = fock::run_fourier(structure, options);
    else result = fock::run_analyze(structure, options);
    emit(result, json_path);
    return result.exit_code;
  } catch (const fock::Error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 1;
  } catch (const std::exception& err) {
    std::cerr << "internal error: " << err.what() << "\n";
    return 1;
  }
}
