#pragma once

#include <string>

#include "nilzeta/uea.hpp"

namespace nilzeta::cli {

/// Parses an element of U(g), for example "X1^2 * Y[1,0] + 3i * Y[0,0]".
///
///   element := [sign] term (sign term)*
///   term    := coeff ["*" factor ("*" factor)*] | factor ("*" factor)*
///   factor  := "X" nat ["^" nat] | "Y[" nat ("," nat)* "]" ["^" nat]
///   coeff   := atom | "(" [sign] atom (sign atom)* ")"
///   atom    := nat ["/" nat] ["i"] | "i"
///
/// Products are taken in the written order and normalized. Throws
/// ParseError with the offending position and the expected token.
UEAElement parse_expression(const std::string& text, const AlgebraPtr& alg);

/// Printed form accepted back by parse_expression.
std::string print(const UEAElement& u);

}  // namespace nilzeta::cli
