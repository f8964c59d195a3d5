// Copyright (c) 2026 The cnl developers.
// Distributed under the Boost Software License, Version 1.0.
// (See https://www.boost.org/LICENSE_1_0.txt)

#ifndef CNL_CLI_HPP
#define CNL_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace cnl::cli {

// Exit codes: 0 ok, 1 domain error, 2 verification failure, 64 usage.
inline constexpr int exit_ok = 0;
inline constexpr int exit_domain = 1;
inline constexpr int exit_verify = 2;
inline constexpr int exit_usage = 64;

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace cnl::cli

#endif  // CNL_CLI_HPP
