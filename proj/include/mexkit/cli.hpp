#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "mexkit/structures.hpp"

namespace mexkit {

/// Stable exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitMismatch = 1, kExitUsage = 2 };

enum class CheckStatus { Pass, Fail, SkippedKnown, ConjecturePass, ConjectureFail };

struct CheckResult {
    CheckStatus status;
    std::string description;
};

struct VerifyReport {
    StructureKind kind;
    std::vector<CheckResult> checks;

    bool ok() const;
};

/// Compare engine, closed forms and brute force for one structure. Brute-force
/// checks are limited to n <= brute_force_bound(kind).
VerifyReport verify_structure(StructureKind kind, unsigned max_n, unsigned max_m);
std::string render_report(const VerifyReport& report);

/// Entry point behind the mexkit executable. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace mexkit
