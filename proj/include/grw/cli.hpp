#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "grw/checks.hpp"

namespace grw {

// The code-file document: {"field": {"p", "e", "m", "base_modulus"?,
// "ext_modulus"?}, "generator": [[element, ...], ...]} where an element is
// m arrays of e digits in [0, p), constant term first at both levels, and
// the moduli are coefficient arrays in the same convention. Rejections name
// the offending JSON path.
LinearCode parse_code_file(const Json& doc);

/// Emits a document that parse_code_file reads back to an equal code,
/// moduli always explicit.
Json emit_code_file(const LinearCode& C);

/// "q=2,m=3" expands to the tower (p=q, e=1, m); q must be prime here,
/// general towers travel inside code files.
TowerPtr parse_field_spec(const std::string& spec);

/// Full command-line surface. args excludes the program name, in the usual
/// order. Returns the process exit code: 0 success, 1 a check or
/// cross-algorithm comparison failed, 2 bad input.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace grw
