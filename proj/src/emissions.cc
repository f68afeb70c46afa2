#include "srl/emissions.h"

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

namespace srl {
namespace {

std::vector<std::string_view> SplitTabs(std::string_view line) {
  std::vector<std::string_view> fields;
  size_t begin = 0;
  while (true) {
    const size_t tab = line.find('\t', begin);
    fields.push_back(line.substr(begin, tab - begin));
    if (tab == std::string_view::npos) break;
    begin = tab + 1;
  }
  return fields;
}

double ParseDouble(std::string_view text, int line) {
  double value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw ParseError("bad number '" + std::string(text) + "'", line);
  return value;
}

void WriteDouble(std::ostream& out, double value) {
  char buffer[64];
  auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  out.write(buffer, ptr - buffer);
}

}  // namespace

EmissionFile ReadEmissions(std::istream& in) {
  EmissionFile file;
  std::string line;
  int line_number = 0;
  auto next_line = [&]() -> bool {
    if (!std::getline(in, line)) return false;
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return true;
  };

  if (!next_line()) return file;
  auto header = SplitTabs(line);
  if (header[0] != "#labels" || header.size() < 2)
    throw ParseError("expected '#labels' header", line_number);
  std::vector<std::string> names(header.begin() + 1, header.end());
  try {
    file.labels = LabelSet::FromTagNames(names);
  } catch (const std::invalid_argument& error) {
    throw ParseError(error.what(), line_number);
  }
  const int num_tags = file.labels.size();

  while (next_line()) {
    if (line.empty()) continue;
    auto fields = SplitTabs(line);
    if (fields[0] != "#instance" || fields.size() != 3)
      throw ParseError("expected '#instance<TAB>ID<TAB>T'", line_number);
    int num_tokens = 0;
    auto [ptr, ec] = std::from_chars(fields[2].data(), fields[2].data() + fields[2].size(),
                                     num_tokens);
    if (ec != std::errc() || ptr != fields[2].data() + fields[2].size() || num_tokens < 0)
      throw ParseError("bad token count '" + std::string(fields[2]) + "'", line_number);
    EmissionMatrix matrix(std::string(fields[1]), num_tokens, num_tags);
    for (int t = 0; t < num_tokens; ++t) {
      if (!next_line()) throw ParseError("unexpected end of file inside instance", line_number);
      auto values = SplitTabs(line);
      if (static_cast<int>(values.size()) != num_tags)
        throw ParseError("expected " + std::to_string(num_tags) + " scores, found " +
                             std::to_string(values.size()),
                         line_number);
      for (int j = 0; j < num_tags; ++j) matrix.at(t, j) = ParseDouble(values[j], line_number);
    }
    file.instances.push_back(std::move(matrix));
  }
  return file;
}

void WriteEmissions(std::ostream& out, const EmissionFile& file) {
  out << "#labels";
  for (const std::string& name : file.labels.tag_names()) out << '\t' << name;
  out << '\n';
  for (size_t i = 0; i < file.instances.size(); ++i) {
    const EmissionMatrix& matrix = file.instances[i];
    if (i > 0) out << '\n';
    out << "#instance\t" << matrix.instance_id() << '\t' << matrix.num_tokens() << '\n';
    for (int t = 0; t < matrix.num_tokens(); ++t) {
      for (int j = 0; j < matrix.num_tags(); ++j) {
        if (j > 0) out << '\t';
        WriteDouble(out, matrix.at(t, j));
      }
      out << '\n';
    }
  }
}

std::vector<std::string> CheckEmissions(const EmissionFile& file, double tolerance) {
  std::vector<std::string> problems;
  for (const EmissionMatrix& matrix : file.instances) {
    if (matrix.num_tags() != file.labels.size())
      problems.push_back(matrix.instance_id() + ": column count differs from label set");
    for (int t = 0; t < matrix.num_tokens(); ++t) {
      double total = 0;
      bool finite = true;
      for (double value : matrix.row(t)) {
        finite = finite && std::isfinite(value);
        total += std::exp(value);
      }
      const std::string where = matrix.instance_id() + " row " + std::to_string(t);
      if (!finite) {
        problems.push_back(where + ": non-finite score");
      } else if (std::abs(total - 1.0) > tolerance) {
        std::ostringstream message;
        message << where << ": probabilities sum to " << total;
        problems.push_back(message.str());
      }
    }
  }
  return problems;
}

EmissionMatrix OneHotEmissions(std::string instance_id, std::span<const int> tags, int num_tags,
                               double eps) {
  const int num_tokens = static_cast<int>(tags.size());
  EmissionMatrix matrix(std::move(instance_id), num_tokens, num_tags);
  const double hit = num_tags > 1 ? std::log1p(-eps) : 0.0;
  const double miss = num_tags > 1 ? std::log(eps / (num_tags - 1)) : 0.0;
  for (int t = 0; t < num_tokens; ++t)
    for (int j = 0; j < num_tags; ++j) matrix.at(t, j) = j == tags[t] ? hit : miss;
  return matrix;
}

EmissionMatrix UniformEmissions(std::string instance_id, int num_tokens, int num_tags) {
  EmissionMatrix matrix(std::move(instance_id), num_tokens, num_tags);
  const double value = -std::log(static_cast<double>(num_tags));
  for (int t = 0; t < num_tokens; ++t)
    for (int j = 0; j < num_tags; ++j) matrix.at(t, j) = value;
  return matrix;
}

}  // namespace srl
