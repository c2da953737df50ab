#pragma once

#include <iosfwd>

namespace rlmc {

// Entry point behind main(). Exit protocol: 0 satisfied somewhere (or fuzz
// clean), 1 satisfied nowhere (or fuzz disagreements), 2 user error,
// 3 unreadable or ill-formed input file, 4 oracle size refusal.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace rlmc
