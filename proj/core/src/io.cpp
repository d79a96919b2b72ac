#include "packtree/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace packtree {

namespace {

using nlohmann::json;

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return in;
}

json parse_json(std::istream& in) {
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("bad JSON: ") + e.what());
    }
}

}  // namespace

Tree read_edge_list(std::istream& in) {
    std::vector<std::pair<int, int>> edges;
    std::string line;
    int lineno = 0;
    bool saw_any = false;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        int u, v;
        if (!(ls >> u)) continue;  // blank / comment-only line
        saw_any = true;
        if (!(ls >> v)) {
            throw ParseError("line " + std::to_string(lineno) + ": expected 'u v'");
        }
        int extra;
        if (ls >> extra) {
            throw ParseError("line " + std::to_string(lineno) + ": trailing token");
        }
        edges.emplace_back(u, v);
    }
    if (!saw_any) throw ParseError("empty edge list");
    return Tree::from_edges(edges);
}

Tree read_edge_list_file(const std::string& path) {
    auto in = open_or_throw(path);
    return read_edge_list(in);
}

void write_edge_list(const Tree& t, std::ostream& out) {
    for (auto [u, v] : t.edge_list()) out << u << " " << v << "\n";
}

Colouring read_colouring_json(std::istream& in) {
    json j = parse_json(in);
    if (!j.is_object() || !j.contains("k") || !j.contains("colours")) {
        throw ParseError("colouring JSON needs fields 'k' and 'colours'");
    }
    try {
        return Colouring(j["k"].get<int>(), j["colours"].get<std::vector<int>>());
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad colouring JSON: ") + e.what());
    }
}

Colouring read_colouring_json_file(const std::string& path) {
    auto in = open_or_throw(path);
    return read_colouring_json(in);
}

std::string colouring_to_json(const Colouring& c) {
    json j;
    j["k"] = c.k;
    j["colours"] = c.colours;
    return j.dump();
}

Certificate read_certificate_json(std::istream& in) {
    json j = parse_json(in);
    if (!j.is_object() || !j.contains("seed") || !j.contains("ops")) {
        throw ParseError("certificate JSON needs fields 'seed' and 'ops'");
    }
    Certificate cert;
    try {
        cert.seed = seed_from_string(j["seed"].get<std::string>());
        for (const auto& jo : j["ops"]) {
            Operation op{op_kind_from_string(jo.at("kind").get<std::string>())};
            if (op.kind == OpKind::O7) {
                op.u = jo.at("u").get<int>();
                op.v = jo.at("v").get<int>();
            } else {
                op.anchor = jo.at("anchor").get<int>();
            }
            cert.ops.push_back(op);
        }
        if (j.contains("relabel")) {
            cert.relabel = j["relabel"].get<std::vector<int>>();
        }
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad certificate JSON: ") + e.what());
    }
    return cert;
}

Certificate read_certificate_json_file(const std::string& path) {
    auto in = open_or_throw(path);
    return read_certificate_json(in);
}

std::string certificate_to_json(const Certificate& cert) {
    json j;
    j["seed"] = to_string(cert.seed);
    j["ops"] = json::array();
    for (const Operation& op : cert.ops) {
        json jo;
        jo["kind"] = to_string(op.kind);
        if (op.kind == OpKind::O7) {
            jo["u"] = op.u;
            jo["v"] = op.v;
        } else {
            jo["anchor"] = op.anchor;
        }
        j["ops"].push_back(jo);
    }
    if (!cert.relabel.empty()) j["relabel"] = cert.relabel;
    return j.dump();
}

void write_dot(const Tree& t, const Colouring& c, std::ostream& out) {
    out << "graph packing {\n";
    for (int v = 0; v < t.order(); ++v) {
        out << "  " << v << " [label=\"" << v << ":" << c[v] << "\"];\n";
    }
    for (auto [u, v] : t.edge_list()) {
        out << "  " << u << " -- " << v << ";\n";
    }
    out << "}\n";
}

}  // namespace packtree
