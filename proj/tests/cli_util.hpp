// cli_util.hpp -- run the installed CLI binary and capture its output.

#pragma once

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

#ifndef MASTERMIND_CLI_PATH
#error "MASTERMIND_CLI_PATH must be defined by the build"
#endif

namespace cliutil {

struct RunResult {
    int exit_code;
    std::string out;
};

inline std::string temp_path(const char *tag)
{
    static int counter = 0;
    std::string dir = std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp";
    return dir + "/mastermind_test_" + tag + "_" + std::to_string(getpid()) +
           "_" + std::to_string(counter++);
}

inline void write_file(const std::string &path, const std::string &content)
{
    std::ofstream out(path);
    out << content;
}

inline std::string read_file(const std::string &path)
{
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline RunResult run_cli(const std::string &args, const std::string &input = "")
{
    std::string out_path = temp_path("out");
    std::string cmd = std::string(MASTERMIND_CLI_PATH) + " " + args + " >" +
                      out_path + " 2>/dev/null";
    std::string in_path;
    if (!input.empty()) {
        in_path = temp_path("in");
        write_file(in_path, input);
        cmd += " <" + in_path;
    }
    int status = std::system(cmd.c_str());
    RunResult result;
    result.exit_code = WEXITSTATUS(status);
    result.out = read_file(out_path);
    std::remove(out_path.c_str());
    if (!in_path.empty())
        std::remove(in_path.c_str());
    return result;
}

} // namespace cliutil
