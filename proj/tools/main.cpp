#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ngcl/config.hpp"
#include "ngcl/errors.hpp"
#include "ngcl/run.hpp"

namespace {

void print_usage(std::ostream& out) {
    out << "usage: ngcl <run|compare|inspect-stream> [flags]\n\n"
        << "  run             train one optimizer arm and emit CSV + series files\n"
        << "  compare         run both arms on the same stream and report deltas\n"
        << "  inspect-stream  print the class partition a seed produces\n\n"
        << ngcl::config_help();
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    if (args.empty() || args[0] == "--help" || args[0] == "-h") {
        print_usage(std::cout);
        return args.empty() ? 1 : 0;
    }

    const std::string command = args[0];
    const std::vector<std::string> rest(args.begin() + 1, args.end());
    try {
        const ngcl::ExperimentConfig cfg = ngcl::parse_config(rest);
        if (command == "run") {
            return ngcl::run_experiment(cfg, std::cout);
        }
        if (command == "compare") {
            return ngcl::run_compare(cfg, std::cout);
        }
        if (command == "inspect-stream") {
            return ngcl::run_inspect_stream(cfg, std::cout);
        }
        std::cerr << "ngcl: unknown command '" << command << "'\n";
        print_usage(std::cerr);
        return 1;
    } catch (const CLI::CallForHelp&) {
        print_usage(std::cout);
        return 0;
    } catch (const ngcl::Error& e) {
        std::cerr << "ngcl: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "ngcl: unexpected error: " << e.what() << "\n";
        return 1;
    }
}
