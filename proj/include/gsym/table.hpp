#pragma once

#include <string>
#include <vector>

#include "gsym/exactnum.hpp"

namespace gsym {

/// Rows (characters or generalized characters) by columns (classes) of exact values.
struct CharacterTable {
    int k = 1;
    int n = 0;
    std::vector<std::string> row_labels;
    std::vector<std::string> col_labels;
    std::vector<BigInt> class_orders;
    std::vector<std::vector<Cyclotomic>> values;

    int rows() const { return static_cast<int>(row_labels.size()); }
    int cols() const { return static_cast<int>(col_labels.size()); }
    /// Throws std::out_of_range for unknown labels.
    const Cyclotomic& at(const std::string& row, const std::string& col) const;
};

}  // namespace gsym
