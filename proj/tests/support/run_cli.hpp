// Copyright 2026 The greenplace Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GREENPLACE_TESTS_RUN_CLI_HPP
#define GREENPLACE_TESTS_RUN_CLI_HPP

#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>

#include <sys/wait.h>

namespace greenplace::tests {

inline std::string cli_path() {
#ifdef GREENPLACE_CLI_PATH
    return GREENPLACE_CLI_PATH;
#else
    return "greenplace";
#endif
}

struct RunResult {
    int exit_code = -1;
    std::string output;  // stdout and stderr interleaved
};

/// Runs `greenplace <args>` through the shell, capturing combined output.
inline RunResult run_cli(const std::string& args,
                         const std::string& env_prefix = "") {
    const std::string command =
        env_prefix + " '" + cli_path() + "' " + args + " 2>&1";
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) throw std::runtime_error("popen failed for: " + command);
    RunResult result;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0)
        result.output.append(buf, n);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

/// Writes `content` to a fresh file under the build temp dir.
inline std::string write_temp(const std::string& name,
                              const std::string& content) {
    const std::string path = "cli_test_" + name;
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << content;
    return path;
}

}  // namespace greenplace::tests

#endif  // GREENPLACE_TESTS_RUN_CLI_HPP
