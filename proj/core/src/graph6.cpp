#include "ktmax/graph6.hpp"

#include <fstream>
#include <istream>
#include <sstream>

namespace ktmax {

namespace {

constexpr int kMaxGraph6Vertices = 258047;  // largest n of the 4-byte size form

void append_size(std::string& out, int n) {
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
}

}  // namespace

std::string to_graph6(const Graph& g) {
    int n = g.vertex_count();
    if (n > kMaxGraph6Vertices) throw Graph6Error("graph6: graph too large");
    std::string out;
    append_size(out, n);
    int bit = 0;
    int acc = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
            if (++bit == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                bit = 0;
            }
        }
    }
    if (bit > 0) out.push_back(static_cast<char>((acc << (6 - bit)) + 63));
    return out;
}

Graph from_graph6(const std::string& line) {
    std::size_t pos = 0;
    std::size_t end = line.size();
    while (end > pos && (line[end - 1] == '\n' || line[end - 1] == '\r')) --end;
    if (line.compare(pos, 10, ">>graph6<<") == 0) pos += 10;
    if (pos >= end) throw Graph6Error("graph6: empty record");

    auto byte = [&](std::size_t i) -> int {
        char c = line[i];
        if (c < 63 || c > 126) throw Graph6Error("graph6: invalid character at offset " + std::to_string(i));
        return c - 63;
    };

    long n;
    if (line[pos] != '~') {
        n = byte(pos);
        pos += 1;
    } else {
        if (pos + 1 < end && line[pos + 1] == '~')
            throw Graph6Error("graph6: size form beyond supported range");
        if (pos + 4 > end) throw Graph6Error("graph6: truncated size");
        n = (static_cast<long>(byte(pos + 1)) << 12) | (byte(pos + 2) << 6) | byte(pos + 3);
        pos += 4;
    }
    if (n > kMaxVertices)
        throw Graph6Error("graph6: " + std::to_string(n) + " vertices exceeds configured capacity " +
                          std::to_string(kMaxVertices));

    long nbits = n * (n - 1) / 2;
    long nbytes = (nbits + 5) / 6;
    if (static_cast<long>(end - pos) != nbytes)
        throw Graph6Error("graph6: expected " + std::to_string(nbytes) + " data bytes, got " +
                          std::to_string(end - pos));

    Graph g(static_cast<int>(n));
    long bitindex = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++bitindex) {
            int b = byte(pos + bitindex / 6);
            if ((b >> (5 - bitindex % 6)) & 1) g.add_edge(u, v);
        }
    }
    // Padding bits must be zero.
    for (long i = nbits; i < nbytes * 6; ++i) {
        int b = byte(pos + i / 6);
        if ((b >> (5 - i % 6)) & 1) throw Graph6Error("graph6: nonzero padding");
    }
    return g;
}

IngestResult ingest_graph6_stream(std::istream& in) {
    IngestResult result;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t last = line.find_last_not_of("\r\n \t");
        std::string trimmed = last == std::string::npos ? std::string() : line.substr(0, last + 1);
        if (trimmed.empty()) continue;
        if (trimmed.rfind(">>", 0) == 0 && trimmed.compare(0, 10, ">>graph6<<") != 0) continue;
        try {
            result.graphs.push_back(from_graph6(trimmed));
        } catch (const Graph6Error& e) {
            result.diagnostics.push_back({lineno, e.what()});
        }
    }
    return result;
}

IngestResult ingest_graph6_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return ingest_graph6_stream(in);
}

}  // namespace ktmax
