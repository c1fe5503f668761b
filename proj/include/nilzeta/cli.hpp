#ifndef NILZETA_CLI_HPP
#define NILZETA_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "nilzeta/render.hpp"

namespace nilzeta {

enum ExitCode { kExitPass = 0, kExitFail = 1, kExitUsage = 2, kExitGuard = 3 };

struct CommandRequest {
    std::string verb;
    int d = 0;           // 0: not given
    long prime = 0;      // 0: not given
    int maxExp = 6;
    long maxD = 0;       // 0: not given
    std::string lambda;
    std::string mu;
    std::string method = "pairs";  // oracle / verify: direct | pairs | stratified
    Format format = Format::Text;
    int workers = 0;
};

struct RunReport {
    std::string verb;
    std::string params;   // echo of the request
    std::string payload;  // exactly what goes to stdout
    int exitCode = kExitPass;
    double seconds = 0;
    std::string version = NILZETA_VERSION;
};

const std::vector<std::string>& verbs();

// Validates the request and runs it. Precondition failures surface as
// std::invalid_argument, resource guards as ResourceGuardError.
RunReport dispatch(const CommandRequest& req);

// Parses argv, runs, writes the payload to out and the report to err.
int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace nilzeta

#endif
