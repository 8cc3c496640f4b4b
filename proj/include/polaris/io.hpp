#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "polaris/types.hpp"

namespace polaris {

using json = nlohmann::ordered_json;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json network_to_json(const Network& net);
Network network_from_json(const json& j);

void save_network(const Network& net, const std::string& path);
Network load_network(const std::string& path);

// First line: comma-separated names; each further line: comma-separated 0/1.
std::string dataset_to_csv(const Dataset& ds);
Dataset dataset_from_csv_text(const std::string& text);

void save_dataset(const Dataset& ds, const std::string& path);
Dataset load_dataset(const std::string& path);

// DOT export; when edge_labels is non-null it maps "from,to" -> label text.
std::string dag_to_dot(const Dag& dag,
                       const std::vector<std::pair<std::pair<int, int>, double>>* edge_fold_changes = nullptr);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

}  // namespace polaris
