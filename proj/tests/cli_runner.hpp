#pragma once

// Runs the stickel binary and captures stdout and the exit status.

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#ifndef STICKEL_BIN
#error "STICKEL_BIN must name the CLI binary"
#endif

namespace cli {

struct Run {
    int status = -1;
    std::string out;
};

/// `args` is appended verbatim to the binary path; stderr is discarded
/// unless `keep_stderr` is set.
inline Run run(const std::string& args, const std::string& env = "", bool keep_stderr = false)
{
    std::string cmd = env + (env.empty() ? "" : " ") + "'" STICKEL_BIN "' " + args
                      + (keep_stderr ? " 2>&1" : " 2>/dev/null");
    Run r;
    FILE* p = ::popen(cmd.c_str(), "r");
    if (!p)
        return r;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = std::fread(buf.data(), 1, buf.size(), p)) > 0)
        r.out.append(buf.data(), n);
    int raw = ::pclose(p);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

}  // namespace cli
