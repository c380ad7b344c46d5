// superior - feasibility-seeking and superiorization toolkit
// Copyright 2026 The superior authors
// Licensed under Apache 2.0

#include "cli.hpp"

int main(int argc, char** argv) { return superior::cli::cli_main(argc, argv); }
