#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qform/graph.hpp"
#include "qform/ntgraph.hpp"

namespace qform {

// Line-oriented text formats with a `format rg1|nt1|chain1` header line and
// `#` comments; see the README for the grammar. Parsing and serialization
// are exact inverses on the data model, and all emitted text is
// byte-deterministic.

enum class FileFormat { rg1, nt1, chain1 };

/// Reads the `format` header. Throws ParseError for unknown headers.
FileFormat sniff_format(const std::string& text, const std::string& filename = "<input>");

ResolutionGraph parse_resolution(const std::string& text,
                                 const std::string& filename = "<input>");
NTGraph parse_ntgraph(const std::string& text, const std::string& filename = "<input>");

/// Named chains, validated against the graph (UnknownEdge).
std::vector<std::pair<std::string, OneChain>> parse_chains(const std::string& text,
                                                           const NTGraph& g,
                                                           const std::string& filename = "<input>");

std::string serialize_resolution(const ResolutionGraph& g);
std::string serialize_ntgraph(const NTGraph& g);
std::string serialize_chains(const std::vector<std::pair<std::string, OneChain>>& chains);

/// Deterministic DOT export (ids sorted lexicographically).
std::string to_dot(const ResolutionGraph& g);
std::string to_dot(const NTGraph& g);

}  // namespace qform
