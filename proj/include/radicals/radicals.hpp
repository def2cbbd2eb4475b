#pragma once

// Umbrella header for the core library. The CLI front end lives in
// radicals/cli.hpp and pulls in the vendored CLI11/json headers.

#include "radicals/chebyshev.hpp"
#include "radicals/closed_form.hpp"
#include "radicals/counting.hpp"
#include "radicals/numeric.hpp"
#include "radicals/rational.hpp"
#include "radicals/sign_pattern.hpp"
#include "radicals/table.hpp"
#include "radicals/verify.hpp"
