#ifndef DISTSPEC_GRAPH6_HPP
#define DISTSPEC_GRAPH6_HPP

#include "distspec/graph.hpp"

#include <string>
#include <string_view>

namespace distspec {

// graph6 as defined by McKay's formats.txt: N(n) size prefix, then the
// upper triangle R(x)-packed into 6-bit groups offset by 63, zero padding.
//
// decode accepts an optional ">>graph6<<" header and trailing whitespace;
// it rejects sparse6 (':'), incremental graph6 (';') and digraph6 ('&')
// with an error naming the format, and rejects wrong body length, bytes
// outside 63..126 and nonzero padding bits.
Graph decode_graph6(std::string_view text);

// Encodes the labeling verbatim (no canonicalization), no header, no
// trailing newline.  Supported up to n = 258047.
std::string encode_graph6(const Graph& g);

} // namespace distspec

#endif
