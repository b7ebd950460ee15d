#include "sigma_lab/graph6.hpp"

#include <cstdint>
#include <string>

namespace sigmalab {

namespace {

constexpr int kMinByte = 63;
constexpr int kMaxByte = 126;
constexpr long long kMaxVertices = 32768;  // keeps adjacency storage sane

int checked_group(std::string_view text, std::size_t pos) {
    if (pos >= text.size()) throw Graph6Error("graph6: truncated input", text.size());
    const unsigned char c = static_cast<unsigned char>(text[pos]);
    if (c < kMinByte || c > kMaxByte)
        throw Graph6Error("graph6: character out of range 63..126", pos);
    return c - kMinByte;
}

}  // namespace

Graph graph6_decode(std::string_view text) {
    if (text.empty()) throw Graph6Error("graph6: empty input", 0);

    long long n = 0;
    std::size_t pos = 0;
    const int first = checked_group(text, 0);
    if (first < 63) {
        n = first;
        pos = 1;
    } else if (text.size() >= 2 && checked_group(text, 1) == 63) {
        // '~~' + 6 bytes, 36 bits
        n = 0;
        for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | checked_group(text, i);
        pos = 8;
    } else {
        // '~' + 3 bytes, 18 bits
        n = 0;
        for (std::size_t i = 1; i < 4; ++i) n = (n << 6) | checked_group(text, i);
        pos = 4;
    }
    if (n > kMaxVertices)
        throw Graph6Error("graph6: graph too large (n > " + std::to_string(kMaxVertices) + ")", 0);

    const long long bit_count = n * (n - 1) / 2;
    const std::size_t expected = pos + static_cast<std::size_t>((bit_count + 5) / 6);
    if (text.size() != expected) {
        if (text.size() < expected)
            throw Graph6Error("graph6: malformed length, input too short", text.size());
        throw Graph6Error("graph6: malformed length, trailing data", expected);
    }

    const int nv = static_cast<int>(n);
    const int words = nv == 0 ? 0 : (nv + 63) / 64;
    std::vector<std::uint64_t> bits(static_cast<std::size_t>(nv) * words, 0);
    auto set_bit = [&](int u, int v) {
        bits[static_cast<std::size_t>(u) * words + (v >> 6)] |= std::uint64_t{1} << (v & 63);
        bits[static_cast<std::size_t>(v) * words + (u >> 6)] |= std::uint64_t{1} << (u & 63);
    };

    long long idx = 0;
    int group = 0;
    for (int j = 1; j < nv; ++j) {
        for (int i = 0; i < j; ++i, ++idx) {
            const int within = static_cast<int>(idx % 6);
            if (within == 0) group = checked_group(text, pos + static_cast<std::size_t>(idx / 6));
            if ((group >> (5 - within)) & 1) set_bit(i, j);
        }
    }
    return Graph::from_bit_rows(nv, std::move(bits));
}

std::string graph6_encode(const Graph& g) {
    const long long n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(kMinByte + n));
    } else if (n <= 258047) {
        out.push_back(static_cast<char>(kMaxByte));
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(kMinByte + ((n >> shift) & 63)));
    } else {
        out.push_back(static_cast<char>(kMaxByte));
        out.push_back(static_cast<char>(kMaxByte));
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(kMinByte + ((n >> shift) & 63)));
    }

    int group = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            group = (group << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(kMinByte + group));
                group = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>(kMinByte + (group << (6 - filled))));
    return out;
}

void for_each_graph6_line(std::istream& in,
                          const std::function<void(Graph&&, const std::string& line)>& fn) {
    std::string line;
    long long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.rfind(">>graph6<<", 0) == 0) line.erase(0, 10);
        if (line.empty()) continue;
        try {
            fn(graph6_decode(line), line);
        } catch (const Graph6Error& e) {
            throw std::runtime_error("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
}

}  // namespace sigmalab
