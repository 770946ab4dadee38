#ifndef COPCUBES_IO_HPP
#define COPCUBES_IO_HPP

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "copcubes/graph.hpp"

namespace copcubes {

// Text format, bit-exact:
//   cubegraph v1 <mode> n=<dim> |V|=<count>
//   <one label per line>
// and in explicit-edges mode additionally:
//   edges
//   <i j per line, 0-based, i < j>
// LF line endings, no trailing whitespace.

inline std::string write_cubegraph(const LabeledGraph& g) {
    std::ostringstream out;
    const char* mode = g.mode == GraphMode::InducedSubcube ? "induced-subcube" : "explicit-edges";
    out << "cubegraph v1 " << mode << " n=" << g.dimension << " |V|=" << g.num_vertices() << "\n";
    for (int v = 0; v < g.num_vertices(); ++v) out << g.label_string(v) << "\n";
    if (g.mode == GraphMode::ExplicitEdges) {
        out << "edges\n";
        for (auto [i, j] : g.edges) out << i << " " << j << "\n";
    }
    return out.str();
}

inline void write_cubegraph_file(const LabeledGraph& g, const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw PreconditionError("cannot open for writing: " + path);
    f << write_cubegraph(g);
}

inline LabeledGraph read_cubegraph(std::istream& in) {
    std::string header;
    if (!std::getline(in, header)) throw FormatError("empty graph file");
    std::istringstream hs(header);
    std::string magic, version, mode_str, n_field, v_field;
    if (!(hs >> magic >> version >> mode_str >> n_field >> v_field) || magic != "cubegraph" || version != "v1")
        throw FormatError("bad header: " + header);
    if (n_field.rfind("n=", 0) != 0 || v_field.rfind("|V|=", 0) != 0)
        throw FormatError("bad header fields: " + header);
    int dim = 0, count = 0;
    try {
        dim = std::stoi(n_field.substr(2));
        count = std::stoi(v_field.substr(4));
    } catch (const std::exception&) {
        throw FormatError("bad header numbers: " + header);
    }
    if (dim < 0 || count < 0) throw FormatError("negative dimension or vertex count");
    GraphMode mode;
    if (mode_str == "induced-subcube") mode = GraphMode::InducedSubcube;
    else if (mode_str == "explicit-edges") mode = GraphMode::ExplicitEdges;
    else throw FormatError("unknown mode: " + mode_str);

    std::vector<Label> labels;
    labels.reserve(static_cast<std::size_t>(count));
    std::string line;
    for (int v = 0; v < count; ++v) {
        if (!std::getline(in, line)) throw FormatError("expected " + std::to_string(count) + " labels");
        if (static_cast<int>(line.size()) != dim)
            throw FormatError("label length " + std::to_string(line.size()) + " does not match n=" + std::to_string(dim));
        labels.push_back(parse_label(line));
    }
    if (mode == GraphMode::InducedSubcube) {
        if (std::getline(in, line) && !line.empty())
            throw FormatError("unexpected trailing content: " + line);
        return LabeledGraph::induced_subcube(dim, std::move(labels));
    }
    if (!std::getline(in, line) || line != "edges") throw FormatError("expected 'edges' section");
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        if (line.empty()) break;
        std::istringstream es(line);
        int i = -1, j = -1;
        std::string rest;
        if (!(es >> i >> j) || (es >> rest))
            throw FormatError("bad edge line: " + line);
        if (i >= j) throw FormatError("edge endpoints must satisfy i < j: " + line);
        edges.emplace_back(i, j);
    }
    return LabeledGraph::explicit_edges(dim, std::move(labels), std::move(edges));
}

inline LabeledGraph read_cubegraph_string(const std::string& text) {
    std::istringstream in(text);
    return read_cubegraph(in);
}

inline LabeledGraph read_cubegraph_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw PreconditionError("cannot open graph file: " + path);
    return read_cubegraph(f);
}

} // namespace copcubes

#endif
