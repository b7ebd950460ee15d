#pragma once

#include <cstddef>
#include <functional>
#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "sigma_lab/graph.hpp"

namespace sigmalab {

class Graph6Error : public std::runtime_error {
public:
    Graph6Error(const std::string& message, std::size_t byte_offset)
        : std::runtime_error(message + " (byte " + std::to_string(byte_offset) + ")"),
          byte_offset_(byte_offset) {}
    std::size_t byte_offset() const { return byte_offset_; }

private:
    std::size_t byte_offset_;
};

/// Decodes one graph6 string: single-byte header for n <= 62, the '~' and
/// '~~' multi-byte headers above that. Upper-triangle bits in column order
/// (0,1),(0,2),(1,2),(0,3),..., packed into 6-bit groups offset by 63.
Graph graph6_decode(std::string_view text);

/// Canonical encoding of the labeled graph (shortest header, zero padding).
std::string graph6_encode(const Graph& g);

/// Streams graphs from newline-delimited graph6 text. Blank lines and an
/// optional ">>graph6<<" prefix are skipped. Decode errors are rethrown with
/// the 1-based line number.
void for_each_graph6_line(std::istream& in,
                          const std::function<void(Graph&&, const std::string& line)>& fn);

}  // namespace sigmalab
