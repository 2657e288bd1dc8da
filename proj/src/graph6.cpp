#include "distspec/graph6.hpp"

#include "distspec/errors.hpp"

#include <string>

namespace distspec {

namespace {

constexpr int G6_MAX_ORDER = 258047;
constexpr std::string_view G6_HEADER = ">>graph6<<";

std::int64_t body_bytes(std::int64_t triangle_bits) { return (triangle_bits + 5) / 6; }

} // namespace

Graph decode_graph6(std::string_view text) {
    if (text.substr(0, G6_HEADER.size()) == G6_HEADER) text.remove_prefix(G6_HEADER.size());
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ' ||
                             text.back() == '\t'))
        text.remove_suffix(1);
    if (text.empty()) throw ParseError("empty graph6 string");

    switch (text.front()) {
        case ':': throw ParseError("sparse6 input not supported (leading ':')");
        case ';': throw ParseError("incremental graph6 input not supported (leading ';')");
        case '&': throw ParseError("digraph6 input not supported (leading '&')");
        default: break;
    }
    for (char c : text)
        if (c < 63 || c > 126)
            throw ParseError("graph6 byte out of range 63..126: code " +
                             std::to_string(static_cast<int>(static_cast<unsigned char>(c))));

    // N(n): one byte for n <= 62, '~' + 3 bytes (18-bit big-endian) up to 258047
    std::int64_t n;
    std::size_t pos;
    if (text[0] != 126) {
        n = text[0] - 63;
        pos = 1;
    } else {
        if (text.size() >= 2 && text[1] == 126)
            throw CapabilityError("graph6 order >= 258048 not supported");
        if (text.size() < 4) throw ParseError("truncated graph6 size prefix");
        n = (static_cast<std::int64_t>(text[1] - 63) << 12) |
            (static_cast<std::int64_t>(text[2] - 63) << 6) |
            static_cast<std::int64_t>(text[3] - 63);
        pos = 4;
    }
    if (n < 1) throw ParseError("graph6 order must be >= 1");

    const std::int64_t nbits = n * (n - 1) / 2;
    const std::int64_t nbytes = body_bytes(nbits);
    if (static_cast<std::int64_t>(text.size() - pos) != nbytes)
        throw ParseError("graph6 body length mismatch: expected " + std::to_string(nbytes) +
                         " bytes for order " + std::to_string(n) + ", got " +
                         std::to_string(text.size() - pos));

    Graph g(static_cast<int>(n));
    std::int64_t t = 0;
    for (std::int64_t b = 0; b < nbytes; ++b) {
        int group = text[pos + static_cast<std::size_t>(b)] - 63;
        for (int k = 5; k >= 0; --k, ++t) {
            bool bit = (group >> k) & 1;
            if (t < nbits) {
                if (bit) g.set_triangle_bit(t, true);
            } else if (bit) {
                throw ParseError("nonzero padding bits in graph6 string");
            }
        }
    }
    return g;
}

std::string encode_graph6(const Graph& g) {
    const std::int64_t n = g.order();
    if (n > G6_MAX_ORDER)
        throw CapabilityError("graph6 encoding supports order <= " + std::to_string(G6_MAX_ORDER));

    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }

    const std::int64_t nbits = g.triangle_bits();
    int group = 0, filled = 0;
    for (std::int64_t t = 0; t < nbits; ++t) {
        group = (group << 1) | (g.triangle_bit(t) ? 1 : 0);
        if (++filled == 6) {
            out.push_back(static_cast<char>(group + 63));
            group = 0;
            filled = 0;
        }
    }
    if (filled) out.push_back(static_cast<char>((group << (6 - filled)) + 63));
    return out;
}

} // namespace distspec
