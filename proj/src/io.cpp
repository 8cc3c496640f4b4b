#include "polaris/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace polaris {

json network_to_json(const Network& net) {
    json j;
    j["mpn_type"] = to_string(net.mpn_type);
    j["epsilon"] = net.epsilon;
    j["variables"] = net.dag.names.empty() ? default_names(net.dag.n) : net.dag.names;
    j["parents"] = net.dag.parent_sets;
    json cpds = json::array();
    for (const auto& cpd : net.cpds) {
        json c;
        c["child"] = cpd.child;
        c["rows"] = cpd.rows;
        cpds.push_back(std::move(c));
    }
    j["cpds"] = std::move(cpds);
    return j;
}

Network network_from_json(const json& j) {
    Network net;
    try {
        net.mpn_type = mpn_type_from_string(j.at("mpn_type").get<std::string>());
        net.epsilon = j.at("epsilon").get<double>();
        net.dag.names = j.at("variables").get<std::vector<std::string>>();
        net.dag.n = static_cast<int>(net.dag.names.size());
        net.dag.parent_sets = j.at("parents").get<std::vector<std::vector<int>>>();
        for (const auto& c : j.at("cpds")) {
            Cpd cpd;
            cpd.child = c.at("child").get<int>();
            cpd.rows = c.at("rows").get<std::vector<double>>();
            if (cpd.child < 0 || cpd.child >= net.dag.n)
                throw IoError("cpd child index out of range");
            cpd.parents = net.dag.parent_sets[cpd.child];
            cpd.support.assign(cpd.rows.size(), 0);
            net.cpds.push_back(std::move(cpd));
        }
    } catch (const json::exception& e) {
        throw IoError(std::string("bad network JSON: ") + e.what());
    }
    if (static_cast<int>(net.cpds.size()) != net.dag.n)
        throw IoError("network JSON: cpd count != variable count");
    for (int v = 0; v < net.dag.n; ++v) {
        if (net.cpds[v].child != v) throw IoError("network JSON: cpds must be ordered by child");
        if (net.cpds[v].rows.size() != (std::size_t{1} << net.dag.parent_sets[v].size()))
            throw IoError("network JSON: row count mismatch at node " + std::to_string(v));
        for (double p : net.cpds[v].rows)
            if (!(p >= 0.0 && p <= 1.0)) throw IoError("network JSON: probability outside [0,1]");
    }
    validate_dag(net.dag);
    return net;
}

void save_network(const Network& net, const std::string& path) {
    write_text_file(path, network_to_json(net).dump(2) + "\n");
}

Network load_network(const std::string& path) {
    json j;
    try {
        j = json::parse(read_text_file(path));
    } catch (const json::exception& e) {
        throw IoError(path + ": " + e.what());
    }
    return network_from_json(j);
}

std::string dataset_to_csv(const Dataset& ds) {
    std::string out;
    const auto& names = ds.names.empty() ? default_names(ds.n) : ds.names;
    for (int j = 0; j < ds.n; ++j) {
        if (j) out.push_back(',');
        out += names[j];
    }
    out.push_back('\n');
    for (long i = 0; i < ds.m; ++i) {
        for (int j = 0; j < ds.n; ++j) {
            if (j) out.push_back(',');
            out.push_back(ds.at(i, j) ? '1' : '0');
        }
        out.push_back('\n');
    }
    return out;
}

Dataset dataset_from_csv_text(const std::string& text) {
    Dataset ds;
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw IoError("empty dataset CSV");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream header(line);
    std::string field;
    while (std::getline(header, field, ',')) ds.names.push_back(field);
    ds.n = static_cast<int>(ds.names.size());
    if (ds.n == 0) throw IoError("dataset CSV: empty header");
    long lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::istringstream row(line);
        int col = 0;
        while (std::getline(row, field, ',')) {
            if (col >= ds.n)
                throw IoError("dataset CSV line " + std::to_string(lineno) + ": too many columns");
            if (field != "0" && field != "1")
                throw IoError("dataset CSV line " + std::to_string(lineno) + ", column " +
                              std::to_string(col + 1) + ": expected 0 or 1, got '" + field + "'");
            ds.values.push_back(field == "1" ? 1 : 0);
            ++col;
        }
        if (col != ds.n)
            throw IoError("dataset CSV line " + std::to_string(lineno) + ": expected " +
                          std::to_string(ds.n) + " columns, got " + std::to_string(col));
        ++ds.m;
    }
    return ds;
}

void save_dataset(const Dataset& ds, const std::string& path) {
    write_text_file(path, dataset_to_csv(ds));
}

Dataset load_dataset(const std::string& path) {
    return dataset_from_csv_text(read_text_file(path));
}

std::string dag_to_dot(const Dag& dag,
                       const std::vector<std::pair<std::pair<int, int>, double>>* edge_fold_changes) {
    const auto& names = dag.names.empty() ? default_names(dag.n) : dag.names;
    std::ostringstream out;
    out << "digraph G {\n";
    for (int v = 0; v < dag.n; ++v) out << "  \"" << names[v] << "\";\n";
    for (int v = 0; v < dag.n; ++v) {
        for (int p : dag.parent_sets[v]) {
            out << "  \"" << names[p] << "\" -> \"" << names[v] << "\"";
            if (edge_fold_changes) {
                for (const auto& [edge, fold] : *edge_fold_changes) {
                    if (edge.first == p && edge.second == v) {
                        char buf[64];
                        std::snprintf(buf, sizeof(buf), "%.4f", fold);
                        out << " [label=\"" << buf << "\"]";
                        break;
                    }
                }
            }
            out << ";\n";
        }
    }
    out << "}\n";
    return out.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open for writing: " + path);
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw IoError("write failed: " + path);
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace polaris
