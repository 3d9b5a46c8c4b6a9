#include "pmc/graph_io.hpp"

#include <fstream>
#include <sstream>

namespace pmc {

namespace {

MultiGraph build_checked(long long n, std::vector<Edge> edges, const std::string& source,
                         const std::vector<std::string>& locations) {
    if (n < 0) throw GraphError(source + ": num_vertices is negative");
    for (size_t i = 0; i < edges.size(); ++i) {
        const Edge& e = edges[i];
        const std::string& where = locations[i];
        if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
            throw GraphError(source + ": " + where + ": vertex id out of range (" +
                             std::to_string(e.u) + "," + std::to_string(e.v) +
                             "), num_vertices=" + std::to_string(n));
        if (e.u == e.v)
            throw GraphError(source + ": " + where + ": loop at vertex " + std::to_string(e.u));
    }
    return MultiGraph(static_cast<VertexId>(n), std::move(edges));
}

}  // namespace

MultiGraph graph_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw GraphError("graph JSON: top level must be an object");
    if (!j.contains("num_vertices") || !j["num_vertices"].is_number_integer())
        throw GraphError("graph JSON: missing integer field \"num_vertices\"");
    if (!j.contains("edges") || !j["edges"].is_array())
        throw GraphError("graph JSON: missing array field \"edges\"");

    long long n = j["num_vertices"].get<long long>();
    std::vector<Edge> edges;
    std::vector<std::string> locations;
    const auto& arr = j["edges"];
    edges.reserve(arr.size());
    for (size_t i = 0; i < arr.size(); ++i) {
        const auto& item = arr[i];
        if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() ||
            !item[1].is_number_integer())
            throw GraphError("graph JSON: edges[" + std::to_string(i) +
                             "] must be a pair of integers");
        edges.push_back(Edge{item[0].get<VertexId>(), item[1].get<VertexId>()});
        locations.push_back("edges[" + std::to_string(i) + "]");
    }
    return build_checked(n, std::move(edges), "graph JSON", locations);
}

MultiGraph read_graph_json(std::istream& in, const std::string& source_name) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw GraphError(source_name + ": " + e.what());
    }
    try {
        return graph_from_json(j);
    } catch (const GraphError& e) {
        throw GraphError(source_name + ": " + e.what());
    }
}

nlohmann::ordered_json graph_to_json(const MultiGraph& g) {
    nlohmann::ordered_json j;
    j["num_vertices"] = g.num_vertices();
    auto edges = nlohmann::ordered_json::array();
    for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
    j["edges"] = std::move(edges);
    return j;
}

MultiGraph read_graph_text(std::istream& in, const std::string& source_name) {
    std::string line;
    int lineno = 0;
    auto fail = [&](const std::string& msg) -> GraphError {
        return GraphError(source_name + ":" + std::to_string(lineno) + ": " + msg);
    };

    if (!std::getline(in, line)) {
        lineno = 1;
        throw fail("empty input, expected header \"p <N> <M>\"");
    }
    ++lineno;
    std::istringstream head(line);
    char p = 0;
    long long n = -1, m = -1;
    if (!(head >> p >> n >> m) || p != 'p')
        throw fail("malformed header, expected \"p <N> <M>\"");
    if (n < 0 || m < 0) throw fail("negative counts in header");

    std::vector<Edge> edges;
    std::vector<std::string> locations;
    edges.reserve(static_cast<size_t>(m));
    for (long long i = 0; i < m; ++i) {
        if (!std::getline(in, line)) {
            ++lineno;
            throw fail("unexpected end of input, expected " + std::to_string(m) + " edge lines");
        }
        ++lineno;
        std::istringstream es(line);
        long long u, v;
        if (!(es >> u >> v)) throw fail("malformed edge line, expected \"u v\"");
        std::string rest;
        if (es >> rest) throw fail("trailing tokens after edge pair");
        edges.push_back(Edge{static_cast<VertexId>(u), static_cast<VertexId>(v)});
        locations.push_back("line " + std::to_string(lineno));
    }
    return build_checked(n, std::move(edges), source_name, locations);
}

void write_graph_text(std::ostream& out, const MultiGraph& g) {
    out << "p " << g.num_vertices() << ' ' << g.num_edges() << '\n';
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

MultiGraph read_graph_auto(std::istream& in, const std::string& source_name) {
    int c = in.peek();
    while (c == ' ' || c == '\n' || c == '\r' || c == '\t') {
        in.get();
        c = in.peek();
    }
    if (c == '{') return read_graph_json(in, source_name);
    return read_graph_text(in, source_name);
}

MultiGraph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw GraphError("cannot open " + path);
    return read_graph_auto(in, path);
}

namespace {

bool all_primitive(const nlohmann::ordered_json& a) {
    for (const auto& e : a)
        if (e.is_structured()) return false;
    return true;
}

bool short_row_table(const nlohmann::ordered_json& a) {
    for (const auto& e : a)
        if (!e.is_array() || e.size() > 4 || !all_primitive(e)) return false;
    return true;
}

void render_value(const nlohmann::ordered_json& j, std::string& out, int depth) {
    const std::string pad(2 * static_cast<size_t>(depth), ' ');
    const std::string pad2(2 * static_cast<size_t>(depth + 1), ' ');
    if (j.is_object()) {
        if (j.empty()) {
            out += "{}";
            return;
        }
        out += "{\n";
        bool first = true;
        for (const auto& [k, v] : j.items()) {
            if (!first) out += ",\n";
            first = false;
            out += pad2 + nlohmann::ordered_json(k).dump() + ": ";
            render_value(v, out, depth + 1);
        }
        out += "\n" + pad + "}";
    } else if (j.is_array()) {
        if (j.empty()) {
            out += "[]";
            return;
        }
        if (all_primitive(j) && j.dump().size() <= 100) {
            out += j.dump();
        } else if (all_primitive(j) || short_row_table(j)) {
            size_t per_line = all_primitive(j) ? 16 : 8;
            out += "[";
            for (size_t i = 0; i < j.size(); ++i) {
                out += i % per_line == 0 ? "\n" + pad2 : " ";
                out += j[i].dump();
                if (i + 1 < j.size()) out += ",";
            }
            out += "\n" + pad + "]";
        } else {
            out += "[\n";
            for (size_t i = 0; i < j.size(); ++i) {
                out += pad2;
                render_value(j[i], out, depth + 1);
                if (i + 1 < j.size()) out += ",";
                out += "\n";
            }
            out += pad + "]";
        }
    } else {
        out += j.dump();
    }
}

}  // namespace

std::string render_json(const nlohmann::ordered_json& doc) {
    std::string out;
    render_value(doc, out, 0);
    out += "\n";
    return out;
}

}  // namespace pmc
