#include "tverberg/io.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

namespace tverberg {
namespace {

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string current;
  for (char c : text) {
    if (c == '\n') {
      if (!current.empty() && current.back() == '\r') current.pop_back();
      lines.push_back(std::move(current));
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  if (!current.empty()) {
    if (current.back() == '\r') current.pop_back();
    lines.push_back(std::move(current));
  }
  return lines;
}

std::vector<std::string> split_tokens(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream stream(line);
  std::string token;
  while (stream >> token) tokens.push_back(token);
  return tokens;
}

std::vector<std::string> split_on(const std::string& text, char separator) {
  std::vector<std::string> parts;
  std::string current;
  for (char c : text) {
    if (c == separator) {
      parts.push_back(current);
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  parts.push_back(current);
  return parts;
}

int parse_int(const std::string& token, const std::string& what) {
  int value = 0;
  const char* begin = token.data();
  const char* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end)
    throw ParseError("cannot read " + what + " from \"" + token + "\"");
  return value;
}

std::vector<int> parse_int_list(const std::string& token, const std::string& what) {
  std::vector<int> values;
  for (const auto& part : split_on(token, ',')) values.push_back(parse_int(part, what));
  return values;
}

bool is_comment(const std::string& line) {
  for (char c : line) {
    if (c == ' ' || c == '\t') continue;
    return c == '#';
  }
  return false;
}

bool is_blank(const std::string& line) {
  for (char c : line)
    if (c != ' ' && c != '\t') return false;
  return true;
}

struct MetadataFields {
  int r = 0;
  std::vector<int> parts;
  std::vector<int> colors;  // 1-based as written
  bool multiset = false;
  bool perturbed = false;
  bool has_construction = false;
};

MetadataFields parse_metadata(const std::string& line) {
  MetadataFields fields;
  auto tokens = split_tokens(line);
  // tokens[0] == "#"; tokens[1] == "construction" or "perturbed=1"
  if (tokens.size() >= 2 && tokens[1].rfind("perturbed=", 0) == 0) {
    fields.perturbed = parse_int(tokens[1].substr(10), "perturbed flag") != 0;
    return fields;
  }
  fields.has_construction = true;
  bool saw_r = false, saw_parts = false, saw_colors = false;
  for (std::size_t t = 2; t < tokens.size(); ++t) {
    auto eq = tokens[t].find('=');
    if (eq == std::string::npos)
      throw ParseError("construction metadata expects key=value, got \"" + tokens[t] + "\"");
    const std::string key = tokens[t].substr(0, eq);
    const std::string value = tokens[t].substr(eq + 1);
    if (key == "r") {
      fields.r = parse_int(value, "block count");
      saw_r = true;
    } else if (key == "parts") {
      fields.parts = parse_int_list(value, "part size");
      saw_parts = true;
    } else if (key == "colors") {
      fields.colors = parse_int_list(value, "coordinate color");
      saw_colors = true;
    } else if (key == "multiset") {
      fields.multiset = parse_int(value, "multiset flag") != 0;
    } else if (key == "perturbed") {
      fields.perturbed = parse_int(value, "perturbed flag") != 0;
    } else {
      throw ParseError("unknown construction metadata key \"" + key + "\"");
    }
  }
  if (!saw_r || !saw_parts || !saw_colors)
    throw ParseError("construction metadata needs r=, parts= and colors=");
  return fields;
}

PointLabel parse_label(const std::string& trailer) {
  auto tokens = split_tokens(trailer);
  if (tokens.empty()) throw ParseError("empty point label after '#'");
  if (tokens[0] == "A") {
    if (tokens.size() != 2 || tokens[1].rfind("i=", 0) != 0)
      throw ParseError("anchor label must read \"A i=<block>\"");
    int block = parse_int(tokens[1].substr(2), "anchor block");
    if (block < 1) throw ParseError("anchor block must be >= 1");
    return PointLabel::anchor_of(block - 1);
  }
  if (tokens[0] == "A_j") {
    if (tokens.size() != 3 || tokens[1].rfind("j=", 0) != 0 || tokens[2].rfind("k=", 0) != 0)
      throw ParseError("axis label must read \"A_j j=<axis> k=<multiplier>\"");
    int axis = parse_int(tokens[1].substr(2), "axis index");
    int multiplier = parse_int(tokens[2].substr(2), "axis multiplier");
    if (axis < 1) throw ParseError("axis index must be >= 1");
    if (multiplier < 1) throw ParseError("axis multiplier must be >= 1");
    return PointLabel::axis_of(axis - 1, multiplier);
  }
  throw ParseError("unknown point label \"" + tokens[0] + "\"");
}

/// One anchor per block and one axis point per (j, k); the file's own
/// metadata promises exactly this shape.
void check_labels_cover_construction(const std::vector<PointLabel>& labels,
                                     const ConstructionSpec& spec) {
  std::vector<char> anchor_seen(static_cast<std::size_t>(spec.block_count), 0);
  std::vector<std::vector<char>> axis_seen(
      static_cast<std::size_t>(spec.dimension),
      std::vector<char>(static_cast<std::size_t>(spec.block_count - 1), 0));
  for (const auto& label : labels) {
    if (label.kind == PointLabel::Kind::anchor) {
      if (label.block < 0 || label.block >= spec.block_count)
        throw ParseError("anchor label block exceeds the construction's block count");
      if (anchor_seen[static_cast<std::size_t>(label.block)]++)
        throw ParseError("two anchor labels for one block");
    } else {
      if (label.axis < 0 || label.axis >= spec.dimension)
        throw ParseError("axis label index exceeds the dimension");
      if (label.multiplier < 1 || label.multiplier > spec.block_count - 1)
        throw ParseError("axis label multiplier outside 1..r-1");
      if (axis_seen[static_cast<std::size_t>(label.axis)][static_cast<std::size_t>(label.multiplier - 1)]++)
        throw ParseError("two axis labels for one multiplier");
    }
  }
  for (char seen : anchor_seen)
    if (!seen) throw ParseError("missing anchor label for some block");
  for (const auto& row : axis_seen)
    for (char seen : row)
      if (!seen) throw ParseError("missing axis label for some multiplier");
}

}  // namespace

std::string format_point_set(const PointSet& points) {
  std::ostringstream out;
  out << points.dimension() << ' ' << points.size() << '\n';
  if (points.spec().has_value()) {
    const ConstructionSpec& spec = *points.spec();
    out << "# construction r=" << spec.block_count << " parts=";
    for (std::size_t i = 0; i < spec.parts.size(); ++i) {
      if (i) out << ',';
      out << spec.parts[i];
    }
    out << " colors=";
    for (std::size_t j = 0; j < spec.color_map.size(); ++j) {
      if (j) out << ',';
      out << spec.color_map[j] + 1;
    }
    out << " multiset=" << (spec.multiset ? 1 : 0) << " perturbed="
        << (points.perturbed() ? 1 : 0) << '\n';
  } else if (points.perturbed()) {
    out << "# perturbed=1\n";
  }
  for (int index = 0; index < points.size(); ++index) {
    const Point& p = points[index];
    for (int q = 0; q < points.dimension(); ++q) {
      if (q) out << ' ';
      out << p[q];
    }
    if (points.labeled_set()) {
      const PointLabel& label = points.labels()[static_cast<std::size_t>(index)];
      if (label.kind == PointLabel::Kind::anchor) {
        out << " # A i=" << label.block + 1;
      } else {
        out << " # A_j j=" << label.axis + 1 << " k=" << label.multiplier;
      }
    }
    out << '\n';
  }
  return out.str();
}

PointSet parse_point_set(const std::string& text) {
  auto lines = split_lines(text);
  std::size_t at = 0;
  while (at < lines.size() && (is_blank(lines[at]) || is_comment(lines[at]))) ++at;
  if (at == lines.size()) throw ParseError("missing point set header line \"d n\"");
  auto header = split_tokens(lines[at]);
  if (header.size() != 2) throw ParseError("header must read \"d n\"");
  const int dimension = parse_int(header[0], "dimension");
  const int count = parse_int(header[1], "point count");
  if (dimension < 1) throw ParseError("dimension must be >= 1");
  if (count < 0) throw ParseError("point count must be >= 0");
  ++at;

  std::optional<MetadataFields> metadata;
  std::vector<Point> points;
  std::vector<PointLabel> labels;
  int labeled_lines = 0;
  for (; at < lines.size(); ++at) {
    const std::string& line = lines[at];
    if (is_blank(line)) continue;
    if (is_comment(line)) {
      auto tokens = split_tokens(line);
      if (tokens.size() >= 2 &&
          (tokens[1] == "construction" || tokens[1].rfind("perturbed=", 0) == 0)) {
        if (metadata.has_value()) throw ParseError("two metadata comment lines");
        metadata = parse_metadata(line);
      }
      continue;
    }
    auto hash = line.find('#');
    const std::string coordinate_part = line.substr(0, hash);
    auto tokens = split_tokens(coordinate_part);
    if (static_cast<int>(tokens.size()) != dimension) {
      std::ostringstream message;
      message << "point line has " << tokens.size() << " coordinates, expected " << dimension;
      throw ParseError(message.str());
    }
    std::vector<Rational> coords;
    coords.reserve(static_cast<std::size_t>(dimension));
    for (const auto& token : tokens) {
      auto value = Rational::try_parse(token);
      if (!value.has_value())
        throw ParseError("cannot read rational coordinate from \"" + token + "\"");
      coords.push_back(std::move(*value));
    }
    points.emplace_back(std::move(coords));
    if (hash != std::string::npos) {
      labels.push_back(parse_label(line.substr(hash + 1)));
      ++labeled_lines;
    }
  }

  if (static_cast<int>(points.size()) != count) {
    std::ostringstream message;
    message << "header announces " << count << " points but the file has " << points.size();
    throw ParseError(message.str());
  }
  if (labeled_lines != 0 && labeled_lines != count)
    throw ParseError("labels must cover every point or none");

  std::optional<ConstructionSpec> spec;
  bool perturbed = false;
  if (metadata.has_value()) {
    perturbed = metadata->perturbed;
    if (metadata->has_construction) {
      std::vector<int> colors;
      colors.reserve(metadata->colors.size());
      for (int c : metadata->colors) colors.push_back(c - 1);
      try {
        spec = ConstructionSpec::make_with_color_map(dimension, metadata->r, metadata->parts,
                                                     colors, metadata->multiset);
      } catch (const std::invalid_argument& error) {
        throw ParseError(std::string("construction metadata rejected: ") + error.what());
      }
      if (spec->total_points() != count) {
        std::ostringstream message;
        message << "construction metadata forces " << spec->total_points()
                << " points but the file has " << count;
        throw ParseError(message.str());
      }
      if (labeled_lines != count)
        throw ParseError("construction metadata needs a label on every point line");
      check_labels_cover_construction(labels, *spec);
    }
  }

  if (labels.empty()) return PointSet::unlabeled(dimension, std::move(points), perturbed);
  return PointSet::labeled(dimension, std::move(points), std::move(labels), std::move(spec),
                           perturbed);
}

PointSet read_point_set_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileError("cannot open \"" + path + "\" for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw FileError("cannot read \"" + path + "\"");
  try {
    return parse_point_set(buffer.str());
  } catch (const ParseError& error) {
    throw ParseError(path + ": " + error.what());
  }
}

void write_point_set_file(const std::string& path, const PointSet& points) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FileError("cannot open \"" + path + "\" for writing");
  out << format_point_set(points);
  out.flush();
  if (!out) throw FileError("cannot write \"" + path + "\"");
}

std::string format_partition(const Partition& partition) {
  std::ostringstream out;
  out << partition;
  return out.str();
}

Partition parse_partition(const std::string& text, int element_count) {
  std::vector<std::vector<int>> blocks;
  for (const auto& block_text : split_on(text, '|')) {
    std::vector<int> block;
    for (const auto& token : split_on(block_text, ',')) {
      std::string trimmed;
      for (char c : token)
        if (c != ' ' && c != '\t') trimmed.push_back(c);
      block.push_back(parse_int(trimmed, "point index"));
    }
    blocks.push_back(std::move(block));
  }
  try {
    return Partition::from_blocks(std::move(blocks), element_count);
  } catch (const std::invalid_argument& error) {
    throw ParseError("partition \"" + text + "\" rejected: " + error.what());
  }
}

std::string format_partition_list(const std::vector<Partition>& partitions) {
  std::ostringstream out;
  for (const auto& partition : partitions) out << partition << '\n';
  return out.str();
}

std::vector<Partition> parse_partition_list(const std::string& text, int element_count) {
  std::vector<Partition> partitions;
  for (const auto& line : split_lines(text)) {
    if (is_blank(line) || is_comment(line)) continue;
    partitions.push_back(parse_partition(line, element_count));
  }
  return partitions;
}

std::vector<Partition> read_partition_file(const std::string& path, int element_count) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileError("cannot open \"" + path + "\" for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw FileError("cannot read \"" + path + "\"");
  try {
    return parse_partition_list(buffer.str(), element_count);
  } catch (const ParseError& error) {
    throw ParseError(path + ": " + error.what());
  }
}

void write_partition_file(const std::string& path, const std::vector<Partition>& partitions) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FileError("cannot open \"" + path + "\" for writing");
  out << format_partition_list(partitions);
  out.flush();
  if (!out) throw FileError("cannot write \"" + path + "\"");
}

}  // namespace tverberg
