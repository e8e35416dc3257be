#pragma once

// Text formats.
//
//   sequences: one per line, whitespace-separated decimal integers
//   graphs:    "graph n=<n> m=<m>", then m lines "u v" with u < v, then a
//              blank line
//   jsonlines: {"n":<n>,"edges":[[u,v],...]} per line

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "graphreal/core.hpp"

namespace graphreal::io {

/// Throws ParseError on anything but whitespace-separated integers.
std::vector<long long> parse_sequence_line(std::string_view line);

/// Every nonblank line of the stream.
std::vector<std::vector<long long>> read_sequences(std::istream& in);

void write_graph_text(std::ostream& out, const LabeledGraph& g);
std::string graph_to_json_line(const LabeledGraph& g);

/// Parses a stream of text-format graph blocks. Throws ParseError.
std::vector<LabeledGraph> read_graphs(std::istream& in);

/// Maps a graph over sorted labels back to the labels of the raw input.
LabeledGraph to_input_labels(const LabeledGraph& g, const ValidatedSequence& v);

}  // namespace graphreal::io
