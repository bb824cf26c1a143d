#include "atlasgraph/io.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

namespace atlasgraph {

namespace {

struct Token {
    std::string text;
    int column;  // 1-based
};

std::vector<Token> tokenize(const std::string& line) {
    std::vector<Token> tokens;
    size_t i = 0;
    while (i < line.size()) {
        if (line[i] == ' ' || line[i] == '\t') {
            ++i;
            continue;
        }
        if (line[i] == '#') break;
        size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '#') ++j;
        tokens.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
        i = j;
    }
    return tokens;
}

int parse_int(const Token& tok, int line) {
    int value = 0;
    const char* begin = tok.text.data();
    const char* end = begin + tok.text.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end)
        throw ParseError("expected an integer, got '" + tok.text + "'", line, tok.column);
    return value;
}

void expect_arity(const std::vector<Token>& tokens, size_t arity, const std::string& what,
                  int line) {
    if (tokens.size() < arity) {
        const auto& last = tokens.back();
        throw ParseError(what + " needs " + std::to_string(arity - 1) + " arguments", line,
                         last.column + static_cast<int>(last.text.size()));
    }
    if (tokens.size() > arity)
        throw ParseError("unexpected extra token '" + tokens[arity].text + "' after " + what,
                         line, tokens[arity].column);
}

}  // namespace

LabeledGraph parse_graph(const std::string& text) {
    struct VertexLine {
        int id, dim, line, column;
    };
    std::vector<VertexLine> vertex_lines;
    std::vector<std::tuple<int, int, int>> edges;
    std::vector<int> edge_lines;
    bool have_header = false;
    bool have_uniform = false;
    int uniform_dim = 0;
    int uniform_line = 0;

    std::istringstream stream(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(stream, raw)) {
        ++line_no;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        const auto tokens = tokenize(raw);
        if (tokens.empty()) continue;

        if (!have_header) {
            if (tokens[0].text != "atlasgraph")
                throw ParseError("document must start with 'atlasgraph <version>'", line_no,
                                 tokens[0].column);
            expect_arity(tokens, 2, "'atlasgraph'", line_no);
            const int version = parse_int(tokens[1], line_no);
            if (version != 1)
                throw ParseError("unsupported format version " + std::to_string(version),
                                 line_no, tokens[1].column);
            have_header = true;
            continue;
        }

        if (tokens[0].text == "dim") {
            expect_arity(tokens, 2, "'dim'", line_no);
            if (have_uniform)
                throw ParseError("duplicate 'dim' directive (first at line " +
                                     std::to_string(uniform_line) + ")",
                                 line_no, tokens[0].column);
            uniform_dim = parse_int(tokens[1], line_no);
            if (uniform_dim < 1)
                throw ParseError("uniform dim must be positive", line_no, tokens[1].column);
            have_uniform = true;
            uniform_line = line_no;
        } else if (tokens[0].text == "vertex") {
            expect_arity(tokens, 3, "'vertex'", line_no);
            const int id = parse_int(tokens[1], line_no);
            const int dim = parse_int(tokens[2], line_no);
            vertex_lines.push_back({id, dim, line_no, tokens[1].column});
        } else if (tokens[0].text == "edge") {
            expect_arity(tokens, 4, "'edge'", line_no);
            const int u = parse_int(tokens[1], line_no);
            const int v = parse_int(tokens[2], line_no);
            const int label = parse_int(tokens[3], line_no);
            edges.push_back({u, v, label});
            edge_lines.push_back(line_no);
        } else {
            throw ParseError("unknown directive '" + tokens[0].text + "'", line_no,
                             tokens[0].column);
        }
    }
    if (!have_header) throw ParseError("empty document; expected 'atlasgraph 1'", 1, 1);

    // Vertex ids must be 0..n-1. Sort and point at the first line that breaks
    // the sequence (duplicate or gap).
    std::sort(vertex_lines.begin(), vertex_lines.end(),
              [](const VertexLine& a, const VertexLine& b) {
                  return std::tie(a.id, a.line) < std::tie(b.id, b.line);
              });
    const int n = static_cast<int>(vertex_lines.size());
    std::vector<int> dims(n, 0);
    for (int i = 0; i < n; ++i) {
        const auto& v = vertex_lines[i];
        if (v.id != i) {
            if (i > 0 && v.id == vertex_lines[i - 1].id)
                throw ParseError("duplicate vertex id " + std::to_string(v.id) +
                                     " (first at line " + std::to_string(vertex_lines[i - 1].line) +
                                     ")",
                                 v.line, v.column);
            throw ParseError("vertex ids must cover 0.." + std::to_string(n - 1) +
                                 " exactly; found id " + std::to_string(v.id) + " while id " +
                                 std::to_string(i) + " is missing",
                             v.line, v.column);
        }
        if (have_uniform && v.dim != uniform_dim)
            throw ParseError("vertex dim " + std::to_string(v.dim) +
                                 " contradicts 'dim " + std::to_string(uniform_dim) + "'",
                             v.line, v.column);
        dims[i] = v.dim;
    }

    // Structural pre-checks so constructor errors carry the document's edge
    // index and line.
    std::set<std::pair<int, int>> seen;
    for (size_t k = 0; k < edges.size(); ++k) {
        const auto& [u, v, label] = edges[k];
        const std::string where =
            "edge #" + std::to_string(k) + " (line " + std::to_string(edge_lines[k]) + ")";
        if (u == v) throw SelfLoopError(where + ": self-loop at vertex " + std::to_string(u));
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw BadEndpointError(where + ": endpoint outside 0.." + std::to_string(n - 1));
        if (label < 1)
            throw NonPositiveLabelError(where + ": label " + std::to_string(label) +
                                        " must be at least 1");
        if (!seen.insert({std::min(u, v), std::max(u, v)}).second)
            throw DuplicateEdgeError(where + ": pair {" + std::to_string(std::min(u, v)) + ", " +
                                     std::to_string(std::max(u, v)) + "} already has an edge");
    }

    return make_labeled_graph(dims, edges);
}

std::string render_graph(const LabeledGraph& g) {
    std::ostringstream out;
    out << "atlasgraph 1\n";
    if (g.uniform_dim) out << "dim " << *g.uniform_dim << "\n";
    for (const auto& v : g.vertices) out << "vertex " << v.id << " " << v.dim << "\n";
    for (const auto& e : g.edges) out << "edge " << e.u << " " << e.v << " " << e.label << "\n";
    return out.str();
}

std::string render_dot(const LabeledGraph& g) {
    std::ostringstream out;
    out << "graph atlas {\n";
    for (const auto& v : g.vertices)
        out << "  v" << v.id << " [label=\"U" << v.id << " dim=" << v.dim << "\"];\n";
    for (const auto& e : g.edges)
        out << "  v" << e.u << " -- v" << e.v << " [label=\"L=" << e.label << " (\xce\xba="
            << e.kappa() << ")\"];\n";
    out << "}\n";
    return out.str();
}

std::string to_hex(const CanonicalForm& form) {
    static const char digits[] = "0123456789abcdef";
    std::string hex;
    hex.reserve(form.bytes.size() * 2);
    for (std::uint8_t b : form.bytes) {
        hex.push_back(digits[b >> 4]);
        hex.push_back(digits[b & 0xf]);
    }
    return hex;
}

std::string catalog_record(const CatalogEntry& entry) {
    std::ostringstream out;
    out << to_hex(entry.canonical) << " " << entry.order << " " << entry.dim << " "
        << entry.label_bound << " " << entry.labeled_rank << " "
        << (entry.report.homotopy_sphere ? 1 : 0) << " "
        << (entry.report.minimal_atlas_valid ? 1 : 0);
    return out.str();
}

std::string render_catalog(const std::vector<CatalogEntry>& entries) {
    std::string out;
    for (const auto& entry : entries) {
        out += catalog_record(entry);
        out += "\n";
    }
    return out;
}

}  // namespace atlasgraph
