#pragma once

#include "polygrade/errors.hpp"

// Runs every bundled worked example end-to-end and prints one line per
// check. Returns 0 when all checks pass, 1 otherwise.
int run_example_suite(bool json_output, const polygrade::EvalBudget& budget);
