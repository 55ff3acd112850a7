#pragma once

#include <iosfwd>
#include <string>

#include "hetsim/lp/program.hpp"

namespace hetsim::lp {

/// Human-readable LP text form (Maximize / Subject To / Bounds / Binaries /
/// End). Every variable appears in the Bounds section in declaration order,
/// so write -> parse -> write is byte-identical.
void write_lp(const MilpProgram& prog, std::ostream& out);
std::string write_lp_string(const MilpProgram& prog);

/// Parses the subset of LP text emitted by write_lp (plus free-form
/// whitespace and \ comments). Throws std::invalid_argument on malformed
/// input.
MilpProgram parse_lp(std::istream& in);
MilpProgram parse_lp_string(const std::string& text);
MilpProgram parse_lp_file(const std::string& path);

}  // namespace hetsim::lp
