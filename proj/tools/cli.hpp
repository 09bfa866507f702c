#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qrep::cli {

struct CommandInfo {
  std::string path;                      // e.g. "manin check"
  std::vector<std::string> operations;   // library operations it exposes
  std::string summary;
};

// Every leaf subcommand with the operations it reaches.
const std::vector<CommandInfo>& dispatch_table();

// Exit codes: 0 all checks pass, 1 a check fails (the report is still
// written), 2 usage or input error.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qrep::cli
