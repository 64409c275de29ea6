#pragma once

#include <string>

#include "kostka/kostka_engine.hpp"

namespace kostka {

/// Header row and first column hold the partitions as quoted "3,1" strings;
/// entries are decimal.
std::string matrix_to_csv(const KostkaMatrix& m);

/// {"n": n, "partitions": ["4","3,1",...], "matrix": [["1","1",...],...]}
/// with every count written as a decimal string.
std::string matrix_to_json(const KostkaMatrix& m);

/// Aligned table for terminals.
std::string matrix_to_text(const KostkaMatrix& m);

} // namespace kostka
