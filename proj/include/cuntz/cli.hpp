#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "cuntz/theorems.hpp"

namespace cuntz::cli {

// Exit statuses of the command-line tool.
inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kUsageError = 2;

// `args` excludes the program name. Prompts are written only when
// `interactive` is set.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err, bool interactive = false);

// {command, params, verdict, witnesses[], checks[]}
nlohmann::json report_document(const std::string& command, const CheckParams& params,
                               Mutation mutation, const std::vector<CheckReport>& reports);

}  // namespace cuntz::cli
