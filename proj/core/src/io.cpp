#include "gcol/io.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace gcol {

namespace {

[[noreturn]] void parse_fail(int line, const std::string& what) {
    throw std::invalid_argument("parse error at line " + std::to_string(line) + ": " + what);
}

} // namespace

Graph parse_graph(std::istream& in, GraphFormat format, std::optional<int> declared_n) {
    std::vector<std::pair<int, int>> edges;
    std::string line;
    int lineno = 0;

    if (format == GraphFormat::dimacs) {
        int n = -1;
        while (std::getline(in, line)) {
            ++lineno;
            if (line.empty() || line[0] == 'c') continue;
            std::istringstream ss(line);
            char tag;
            ss >> tag;
            if (tag == 'p') {
                std::string kind;
                long m = 0;
                if (!(ss >> kind >> n >> m) || kind != "edge" || n < 0)
                    parse_fail(lineno, "malformed 'p edge n m' header");
            } else if (tag == 'e') {
                if (n < 0) parse_fail(lineno, "edge before 'p edge' header");
                int u, v;
                if (!(ss >> u >> v)) parse_fail(lineno, "malformed edge line");
                if (u < 1 || v < 1 || u > n || v > n) parse_fail(lineno, "vertex id out of range");
                if (u == v) parse_fail(lineno, "self-loop rejected");
                edges.emplace_back(u - 1, v - 1);
            } else {
                parse_fail(lineno, "unknown line tag");
            }
        }
        if (n < 0) parse_fail(lineno, "missing 'p edge' header");
        return Graph(n, edges);
    }

    int max_id = -1;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ss(line);
        int u, v;
        if (!(ss >> u)) continue; // blank
        if (!(ss >> v)) parse_fail(lineno, "expected two vertex ids");
        if (u < 0 || v < 0) parse_fail(lineno, "negative vertex id");
        if (u == v) parse_fail(lineno, "self-loop rejected");
        if (declared_n && (u >= *declared_n || v >= *declared_n))
            parse_fail(lineno, "vertex id out of declared range");
        max_id = std::max({max_id, u, v});
        edges.emplace_back(u, v);
    }
    int n = declared_n.value_or(max_id + 1);
    return Graph(n, edges);
}

void write_graph(std::ostream& out, const Graph& g, GraphFormat format) {
    auto edges = g.edge_list();
    if (format == GraphFormat::dimacs) {
        out << "p edge " << g.num_vertices() << " " << edges.size() << "\n";
        for (auto [u, v] : edges) out << "e " << u + 1 << " " << v + 1 << "\n";
        return;
    }
    out << "# " << g.num_vertices() << " vertices, " << edges.size() << " edges\n";
    for (auto [u, v] : edges) out << u << " " << v << "\n";
}

std::string witness_to_json(const PartialGrundyWitness& w) {
    nlohmann::json doc;
    doc["kind"] = "pgw";
    doc["k"] = w.k();
    auto classes = nlohmann::json::array();
    for (const auto& q : w.classes) classes.push_back(q.to_vector());
    doc["classes"] = classes;
    return doc.dump();
}

std::string witness_to_json(const GrundyWitness& w) {
    nlohmann::json doc;
    doc["kind"] = "gw";
    doc["k"] = w.k();
    doc["tree_labels"] = w.tree.label;
    doc["omega"] = w.omega;
    return doc.dump();
}

AnyWitness witness_from_json(const std::string& text, int n) {
    nlohmann::json doc = nlohmann::json::parse(text);
    const std::string kind = doc.at("kind").get<std::string>();
    const int k = doc.at("k").get<int>();
    if (k < 1) throw std::invalid_argument("witness_from_json: k must be >= 1");

    if (kind == "pgw") {
        PartialGrundyWitness w;
        for (const auto& cls : doc.at("classes")) {
            VertexSet s(n);
            for (int v : cls.get<std::vector<int>>()) {
                if (v < 0 || v >= n)
                    throw std::invalid_argument("witness_from_json: vertex id out of range");
                s.set(v);
            }
            w.classes.push_back(std::move(s));
        }
        if (w.k() != k) throw std::invalid_argument("witness_from_json: k != number of classes");
        return w;
    }
    if (kind == "gw") {
        GrundyWitness w;
        w.tree = build_grundy_tree(k);
        auto labels = doc.at("tree_labels").get<std::vector<int>>();
        if (labels != w.tree.label)
            throw std::invalid_argument("witness_from_json: tree_labels are not the canonical "
                                        "labels of the k-Grundy tree");
        w.omega = doc.at("omega").get<std::vector<int>>();
        if (int(w.omega.size()) != w.tree.size())
            throw std::invalid_argument("witness_from_json: omega size mismatch");
        for (int v : w.omega)
            if (v < 0 || v >= n)
                throw std::invalid_argument("witness_from_json: vertex id out of range");
        return w;
    }
    throw std::invalid_argument("witness_from_json: unknown kind '" + kind + "'");
}

} // namespace gcol
