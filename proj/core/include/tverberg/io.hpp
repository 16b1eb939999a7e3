#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "tverberg/construction.hpp"
#include "tverberg/partition.hpp"

namespace tverberg {

/// Content of a file violates the format or its own metadata.
class ParseError : public std::runtime_error {
public:
  explicit ParseError(const std::string& message) : std::runtime_error(message) {}
};

/// A file could not be opened, read, or written.
class FileError : public std::runtime_error {
public:
  explicit FileError(const std::string& message) : std::runtime_error(message) {}
};

/// Point set text format. Header "d n", then n point lines of d
/// space-separated rationals ("p/q" or a bare integer). A constructed set
/// carries one metadata comment
///   # construction r=3 parts=2,2,1 colors=3 multiset=0 perturbed=0
/// (colors lists the owning block of each coordinate, 1-based) and a label
/// trailer per point line, "# A i=2" for anchors or "# A_j j=1 k=3" for axis
/// points. Labels are all-or-nothing. Writing is canonical: parse followed by
/// format reproduces a canonical file byte for byte.
std::string format_point_set(const PointSet& points);
PointSet parse_point_set(const std::string& text);
PointSet read_point_set_file(const std::string& path);
void write_point_set_file(const std::string& path, const PointSet& points);

/// Partition text format: blocks joined by "|", indices by "," ("0,3|1,4|2"),
/// one partition per line, always in canonical order.
std::string format_partition(const Partition& partition);
Partition parse_partition(const std::string& text, int element_count);
std::string format_partition_list(const std::vector<Partition>& partitions);
std::vector<Partition> parse_partition_list(const std::string& text, int element_count);
std::vector<Partition> read_partition_file(const std::string& path, int element_count);
void write_partition_file(const std::string& path, const std::vector<Partition>& partitions);

}  // namespace tverberg
