#pragma once

#include <string>

#include "unav/graph.hpp"

namespace unav {

// Standard graph6 text encoding: header N(n), then the upper triangle read
// column by column, packed into 6-bit chunks offset by 63.
std::string graph6_encode(const SimpleGraph& g);

// Throws std::invalid_argument on malformed input or length mismatch.
SimpleGraph graph6_decode(const std::string& text);

} // namespace unav
