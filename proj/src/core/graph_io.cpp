#include "core/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "core/errors.hpp"

namespace ug {

namespace {

constexpr char kBias = 63;

void append_big_endian_groups(std::string& out, uint64_t value, int groups) {
    for (int i = groups - 1; i >= 0; --i)
        out.push_back(char(((value >> (6 * i)) & 0x3f) + kBias));
}

class BitReader {
public:
    BitReader(std::string_view text, size_t pos) : text_(text), pos_(pos) {}

    int next() {
        if (used_ == 6) {
            if (pos_ >= text_.size()) throw ParseError("graph6: truncated edge bits");
            char c = text_[pos_++];
            if (c < 63 || c > 126) throw ParseError("graph6: byte out of range");
            current_ = c - kBias;
            used_ = 0;
        }
        return (current_ >> (5 - used_++)) & 1;
    }

    size_t pos() const { return pos_; }

private:
    std::string_view text_;
    size_t pos_;
    int current_ = 0;
    int used_ = 6;
};

}  // namespace

std::string to_graph6(const Graph& g) {
    std::string out;
    uint64_t n = g.n();
    if (n <= 62) {
        out.push_back(char(n + kBias));
    } else if (n <= 258047) {
        out.push_back(char(126));
        append_big_endian_groups(out, n, 3);
    } else {
        out.push_back(char(126));
        out.push_back(char(126));
        append_big_endian_groups(out, n, 6);
    }
    int acc = 0, nbits = 0;
    for (uint32_t v = 1; v < g.n(); ++v) {
        for (uint32_t u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(char(acc + kBias));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(char((acc << (6 - nbits)) + kBias));
    return out;
}

Graph from_graph6(std::string_view text) {
    constexpr std::string_view kHeader = ">>graph6<<";
    if (text.substr(0, kHeader.size()) == kHeader) text.remove_prefix(kHeader.size());
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    if (text.empty()) throw ParseError("graph6: empty input");

    size_t pos = 0;
    uint64_t n = 0;
    auto group = [&](size_t i) -> uint64_t {
        if (i >= text.size()) throw ParseError("graph6: truncated header");
        char c = text[i];
        if (c < 63 || c > 126) throw ParseError("graph6: byte out of range");
        return uint64_t(c - kBias);
    };
    if (text[0] != char(126)) {
        n = group(0);
        pos = 1;
    } else if (text.size() > 1 && text[1] != char(126)) {
        n = (group(1) << 12) | (group(2) << 6) | group(3);
        pos = 4;
    } else {
        for (size_t i = 0; i < 6; ++i) n = (n << 6) | group(2 + i);
        pos = 8;
    }
    if (n > (uint64_t(1) << 31)) throw ParseError("graph6: vertex count too large");

    Graph g{uint32_t(n)};
    BitReader bits(text, pos);
    for (uint32_t v = 1; v < n; ++v)
        for (uint32_t u = 0; u < v; ++u)
            if (bits.next()) g.add_edge(u, v);
    // padding bits must be zero and nothing may trail
    uint64_t pairs = n * (n - 1) / 2;
    uint64_t pad = (6 - pairs % 6) % 6;
    for (uint64_t i = 0; i < pad; ++i)
        if (bits.next()) throw ParseError("graph6: nonzero padding");
    if (bits.pos() != text.size()) throw ParseError("graph6: trailing bytes");
    return g;
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.n() << ' ' << g.m() << '\n';
    for (uint32_t u = 0; u < g.n(); ++u)
        for (uint32_t v : g.neighbors(u))
            if (u < v) out << u << ' ' << v << '\n';
    return out.str();
}

Graph from_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    uint64_t n = 0, m = 0;
    if (!(in >> n >> m)) throw ParseError("edge list: missing 'n m' header");
    if (n > (uint64_t(1) << 31)) throw ParseError("edge list: vertex count too large");
    Graph g{uint32_t(n)};
    for (uint64_t i = 0; i < m; ++i) {
        uint32_t u, v;
        if (!(in >> u >> v)) throw ParseError("edge list: truncated edge lines");
        if (u >= v) throw ParseError("edge list: edges must satisfy u < v");
        if (v >= n) throw ParseError("edge list: vertex out of range");
        if (g.has_edge(u, v)) throw ParseError("edge list: duplicate edge");
        g.add_edge(u, v);
    }
    return g;
}

namespace {

bool has_suffix(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

}  // namespace

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    if (has_suffix(path, ".g6")) return from_graph6(text);
    if (has_suffix(path, ".el") || has_suffix(path, ".txt")) return from_edge_list(text);
    // sniff: an edge list starts with a digit, graph6 bytes start >= '?' (63)
    if (!text.empty() && (text[0] == '>' || (unsigned char)text[0] >= 63)) {
        try {
            return from_graph6(text);
        } catch (const ParseError&) {
        }
    }
    return from_edge_list(text);
}

void write_graph_file(const Graph& g, const std::string& path, const std::string& format) {
    std::string fmt = format;
    if (fmt.empty()) fmt = has_suffix(path, ".g6") ? "graph6" : "edgelist";
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path + " for writing");
    if (fmt == "graph6") {
        out << to_graph6(g) << '\n';
    } else if (fmt == "edgelist") {
        out << to_edge_list(g);
    } else {
        throw InvalidArgument("unknown graph format: " + fmt);
    }
}

}  // namespace ug
