/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef EFL_GUARD_CLI_HH
#define EFL_GUARD_CLI_HH 1

#include <iosfwd>
#include <string>
#include <vector>

namespace efl::cli
{
    enum ExitCode : int
    {
        success = 0,
        negative = 1,           // verification failed, or a sweep found a non-colourable instance
        input_error = 2,
        unsupported = 3,        // e.g. a shared vertex in three or more cliques for `color`
        budget_exhausted = 4
    };

    /// Runs one subcommand. args excludes the program name.
    auto run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int;
}

#endif
