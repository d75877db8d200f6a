#include <iostream>

#include "commands.hpp"
#include "qmdp/error.hpp"

namespace qmdp::cli {

int guarded(const std::function<int()>& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const ModelError& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kExitParse;
  } catch (const UnsupportedError& e) {
    std::cerr << "unsupported: " << e.what() << '\n';
    return kExitUnsupported;
  } catch (const InvariantError& e) {
    std::cerr << "invariant violated: " << e.what() << '\n';
    return kExitInternal;
  } catch (const PreconditionError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const Error& e) {
    // unreadable or unwritable files
    std::cerr << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

}  // namespace qmdp::cli

int main(int argc, char** argv) {
  CLI::App app{"qmdp: almost-sure winning sets in graphs and MDPs"};
  app.require_subcommand(1);
  int status = 0;
  qmdp::cli::register_solve(app, status);
  qmdp::cli::register_mec(app, status);
  qmdp::cli::register_generate(app, status);
  qmdp::cli::register_check(app, status);
  qmdp::cli::register_bench(app, status);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : qmdp::cli::kExitParse;
  }
  return status;
}
