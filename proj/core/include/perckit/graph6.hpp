#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "perckit/graph.hpp"

namespace perckit {

// Codec for the graph6 text format: a one-token ASCII encoding of an
// undirected graph.  The order is stored first (one byte for n <= 62,
// or '~' followed by three bytes holding an 18-bit big-endian value for
// 63 <= n <= 1024), then the upper triangle of the adjacency matrix in
// column-major order, packed six bits per byte with an offset of 63.
//
// The empty string and n = 0 are rejected: the smallest encodable graph
// is K1 ("@").

class Graph6Error : public std::runtime_error {
public:
    enum class Kind {
        Empty,         // no input at all
        BadHeader,     // malformed or out-of-range order prefix
        BadCharacter,  // byte outside the printable range [63, 126]
        BadLength,     // body shorter or longer than n requires
        BadPadding,    // unused trailing bits in the final byte are nonzero
    };

    Graph6Error(Kind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

// Parses a single graph6 token.  Leading/trailing whitespace is not
// accepted; callers splitting a file should trim line endings first.
Graph parse_graph6(std::string_view text);

// Encodes a graph as a graph6 token.  Rejects the empty graph (order 0).
std::string write_graph6(const Graph& g);

}  // namespace perckit
