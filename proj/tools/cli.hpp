// superior - feasibility-seeking and superiorization toolkit
// Copyright 2026 The superior authors
// Licensed under Apache 2.0

#pragma once

namespace superior::cli {

/// Entry point behind the `superior` binary. Returns 0 on success, 1 on
/// usage or configuration errors, 2 on runtime failures.
int cli_main(int argc, const char* const* argv);

}  // namespace superior::cli
