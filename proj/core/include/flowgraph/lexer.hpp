#pragma once

#include <string_view>
#include <vector>

#include "flowgraph/token.hpp"

namespace flowgraph {

/// Splits source text into tokens. Whitespace, `//` line comments and
/// `/* */` block comments are skipped. Throws LexError on characters
/// outside the alphabet and on unterminated block comments.
std::vector<Token> tokenize(std::string_view source);

}  // namespace flowgraph
