#pragma once

#include <string>

#include "fairfan/fan.hpp"
#include "fairfan/measures.hpp"

namespace fairfan {

// Measure-family schema; rationals travel as canonical "p/q" strings so the
// serialize/parse/serialize loop is byte-identical.
std::string family_to_json(const MeasureFamily& family);
MeasureFamily family_from_json(const std::string& text);

// Partition schemas: {"type":"fan", ...} with apex, projected ray direction
// pairs and per-region half-space lists; {"type":"cut-tree", ...} with the
// nested cut history including boundary shares.
std::string partition_to_json(const ConvexPartition& part);
ConvexPartition partition_from_json(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace fairfan
