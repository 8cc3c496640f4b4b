#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace polaris {

// Monotonic progression network flavor: which parent configurations count as
// "activating" for a child event.
enum class MpnType { CMPN, DMPN, XMPN };

std::string to_string(MpnType t);
MpnType mpn_type_from_string(const std::string& s);

enum class RowClass { Positive, Negative };

// Classifies a CPD row. `row` encodes the parent assignment with bit i
// (LSB = first parent) giving parent i's value. Root nodes (n_parents == 0)
// have a single row, classified Positive for every MPN type.
RowClass row_class(MpnType type, std::uint32_t row, int n_parents);

struct ModelError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct CycleDetected : ModelError {
    using ModelError::ModelError;
};
struct TooLarge : ModelError {
    using ModelError::ModelError;
};

struct Dag {
    int n = 0;
    std::vector<std::vector<int>> parent_sets;  // ascending, duplicate-free
    std::vector<std::string> names;

    bool has_edge(int from, int to) const;
    int edge_count() const;
};

// Throws CycleDetected / ModelError on invalid structure.
void validate_dag(const Dag& dag);

// Deterministic topological order, ties broken by ascending node index.
std::vector<int> topological_order(const Dag& dag);

struct Cpd {
    int child = 0;
    std::vector<int> parents;
    std::vector<double> rows;       // P(child=1 | assignment), 2^|parents| entries
    std::vector<long> support;      // samples matching each row; 0 when analytic
};

struct Network {
    Dag dag;
    std::vector<Cpd> cpds;
    MpnType mpn_type = MpnType::CMPN;
    double epsilon = 0.0;

    // Every negative row <= epsilon and every positive row > epsilon.
    bool conformant() const;
};

struct Dataset {
    long m = 0;
    int n = 0;
    std::vector<std::uint8_t> values;  // row-major, m*n
    std::vector<std::string> names;

    std::uint8_t at(long sample, int var) const { return values[static_cast<std::size_t>(sample) * n + var]; }
    std::uint8_t& at(long sample, int var) { return values[static_cast<std::size_t>(sample) * n + var]; }
};

// Default names X0..X{n-1}.
std::vector<std::string> default_names(int n);

}  // namespace polaris
