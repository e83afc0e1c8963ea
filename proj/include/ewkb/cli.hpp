#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "ewkb/poly2.hpp"
#include "ewkb/series_json.hpp"

namespace ewkb {

// Runs one subcommand. Exit codes: 0 success, 2 invalid input, 3 numeric failure
// (also returned by `verify` when a check fails).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

struct VerifyCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};
// "identities" (exact arithmetic), "numeric" (quadrature cross-checks) or "all".
std::vector<VerifyCheck> verify_suite(const std::string& suite);

// "re" or "re,im"; decimal strings are read at the working precision.
Complex parse_complex(const std::string& text);

json poly2_to_json(const Poly2& p);

}  // namespace ewkb
