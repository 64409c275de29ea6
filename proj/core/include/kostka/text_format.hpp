#pragma once

// Comma-separated text form of partitions and compositions: "3,1".
// The empty partition is written as "" and also parsed from "0".

#include <string>
#include <string_view>

#include "kostka/partition.hpp"

namespace kostka {

/// Parses a non-increasing list; trailing zeros are dropped. Throws ParseError
/// naming `argument` on malformed input.
Partition parse_partition(std::string_view text, const std::string& argument = "partition");

/// Parses a list of non-negative integers, kept verbatim (zeros included).
Composition parse_composition(std::string_view text, const std::string& argument = "composition");

std::string to_text(const Partition& p);
std::string to_text(const Composition& c);

} // namespace kostka
