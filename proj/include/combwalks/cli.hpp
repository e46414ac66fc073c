// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace combwalks {

// Full command-line surface. Exit codes: 0 success / all verified,
// 1 identity mismatch or regression violation, 2 usage error.
int cli_main(int argc, const char* const* argv);

}  // namespace combwalks
