#pragma once

#include "pcw/model.hpp"

#include <iosfwd>
#include <string>

namespace pcw::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_validation = 1,
    exit_usage = 2,
    exit_invariant = 3,
};

/// A builtin name, or else a manifest path. Throws UnknownBuiltin when the
/// source is neither, ParseError for a malformed manifest.
ManifoldModel load_model(const std::string& source);

/// Entry point of `pcw`; argv[0] is the program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// The `tables` command body.
int render_tables(const std::string& builtin_name, std::ostream& out);

}  // namespace pcw::cli
