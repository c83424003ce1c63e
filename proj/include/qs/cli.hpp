#pragma once

// Command-line driver and report emission.

#include "qs/homotopy.hpp"

#include <json.hpp>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace qs::cli {

enum ExitCode { Ok = 0, No = 1, UnknownRequired = 2, Usage = 64, DataError = 65 };

struct ReportEntry {
    std::string name;
    Verdict verdict = Verdict::Unknown;
    bool required = true;
    std::string detail;
    std::string digest;  // of the certificate, empty if none
    double ms = 0;
};

struct Report {
    std::string command;
    std::uint64_t seed = 1;
    std::vector<ReportEntry> entries;
    nlohmann::json output;  // printed object, if any

    Verdict overall() const;
    int exit_code() const;
    nlohmann::json to_json(bool with_timing = true) const;
    std::string to_text() const;
};

/// FNV-1a over the serialized certificate.
std::string digest(const Certificate& c);

/// Runs the command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qs::cli
