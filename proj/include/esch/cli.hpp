#pragma once

namespace esch {

// Exit codes: 0 success, 2 invalid parameters, 3 condition (C) failure on a
// single-space invariant request, 1 other failures (table mismatch, I/O).
int run_cli(int argc, const char* const* argv);

}  // namespace esch
