#pragma once

#include <stdexcept>
#include <string>

#include "planex/graph.hpp"

namespace planex {

// Malformed graph6 input, with the byte offset of the first bad byte.
struct Graph6ParseError : std::runtime_error {
    Graph6ParseError(const std::string& what, std::size_t offset_)
        : std::runtime_error(what + " (byte " + std::to_string(offset_) + ")"), offset(offset_) {}
    std::size_t offset;
};

// One graph per text line, no header, newline 0x0A. Bit-exact per the
// published graph6 format: upper triangle column-major, 6 bits per byte,
// bytes offset by 63.
std::string graph6_encode(const Graph& g);
Graph graph6_decode(const std::string& line);

}  // namespace planex
