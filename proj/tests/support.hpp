#pragma once

#include <array>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include <sys/wait.h>

namespace testsupport {

struct CommandResult {
    int exit_code;
    std::string output;  // captured stdout
};

// Runs a shell command, capturing stdout. stderr passes through unless the
// caller redirects it in the command string.
inline CommandResult run_command(const std::string& command) {
    FILE* pipe = ::popen(command.c_str(), "r");
    if (pipe == nullptr)
        throw std::runtime_error("popen failed for: " + command);
    std::string output;
    std::array<char, 4096> buf{};
    size_t got = 0;
    while ((got = ::fread(buf.data(), 1, buf.size(), pipe)) > 0)
        output.append(buf.data(), got);
    const int status = ::pclose(pipe);
    const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, output};
}

// Path of the arbor binary under test: ARBOR_CLI env wins, else the
// build-time default baked in by CMake.
inline std::string cli_path() {
    if (const char* env = std::getenv("ARBOR_CLI"); env && *env) return env;
#ifdef ARBOR_CLI_DEFAULT
    return ARBOR_CLI_DEFAULT;
#else
    throw std::runtime_error("set ARBOR_CLI to the arbor binary path");
#endif
}

inline CommandResult run_cli(const std::string& args) {
    return run_command("'" + cli_path() + "' " + args);
}

inline std::string fixture_path(const char* name) {
    return std::string(ARBOR_FIXTURE_DIR) + "/" + name;
}

}  // namespace testsupport
