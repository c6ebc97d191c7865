#pragma once

namespace relcheb {

// CLI entry point. Exit codes: 0 success/satisfied, 1 bound violated,
// 2 usage error, 3 input error.
int run(int argc, const char* const* argv);

}  // namespace relcheb
