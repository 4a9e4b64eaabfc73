#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "ktmax/graph.hpp"

namespace ktmax {

struct Graph6Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Encodes in the standard graph6 format: N(n) followed by the upper
/// triangle of the adjacency matrix in column order, packed 6 bits per
/// printable byte (value + 63), zero-padded.
std::string to_graph6(const Graph& g);

/// Decodes one graph6 record; the optional ">>graph6<<" header is accepted.
Graph from_graph6(const std::string& line);

struct IngestDiagnostic {
    int line_number;  // 1-based
    std::string message;
};

struct IngestResult {
    std::vector<Graph> graphs;
    std::vector<IngestDiagnostic> diagnostics;
};

/// Reads newline-separated graph6 records. Malformed lines are reported with
/// their line numbers; valid lines are still parsed. Blank lines and lines
/// starting with '>' headers are skipped.
IngestResult ingest_graph6_stream(std::istream& in);
IngestResult ingest_graph6_file(const std::string& path);

}  // namespace ktmax
