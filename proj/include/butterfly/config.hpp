// Problem description files and the verify report block. The grammar is one
// "key = value" per line with "#" comments; keys are exactly geometry,
// center, radius, P, Q, A, C. Points are two rationals separated by a comma,
// with optional surrounding parentheses.
#pragma once

#include "butterfly/engine.hpp"

#include <iosfwd>
#include <string>

namespace butterfly {

/// Throws std::invalid_argument with line context on grammar or value errors.
ButterflyProblem parse_config(std::istream& in);
ButterflyProblem parse_config_text(const std::string& text);

/// Adds std::runtime_error for unreadable files.
ButterflyProblem parse_config_file(const std::string& path);

/// Emits the same grammar; parse_config_text is its inverse.
std::string to_config(const ButterflyProblem& problem);

/// The "key = value" block printed by verify: M, B, D, X, Y, midXY,
/// deviation, holds, the three hypothesis flags and the classification.
/// Hypothesis flags read "n/a" for Euclidean geometry; degenerate traces
/// report their reason instead of X/Y.
std::string verify_report(const ButterflyProblem& problem, const TraceResult& trace);

enum class CliExit : int {
    Holds = 0,
    Fails = 1,
    Degenerate = 2,
    InvalidInput = 3,
};

/// Exit status matching the printed verdict.
CliExit verify_exit(const TraceResult& trace);

} // namespace butterfly
