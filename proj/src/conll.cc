#include "srl/conll.h"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace srl {
namespace {

constexpr std::string_view kSentenceDirective = "# sentence ";

std::vector<std::string> SplitFields(const std::string& line) {
  std::vector<std::string> fields;
  std::istringstream stream(line);
  std::string field;
  while (stream >> field) fields.push_back(field);
  return fields;
}

struct Block {
  std::string id;
  std::vector<std::vector<std::string>> rows;
  std::vector<int> line_numbers;
};

// Parses one props column of a sentence into spans.
std::vector<ArgumentSpan> ParsePropsColumn(const Block& block, size_t column) {
  std::vector<ArgumentSpan> spans;
  bool open = false;
  ArgumentSpan current;
  for (size_t row = 0; row < block.rows.size(); ++row) {
    const std::string& cell = block.rows[row][column];
    const int line = block.line_numbers[row];
    const int position = static_cast<int>(row);
    std::string_view rest = cell;
    if (rest.starts_with("(")) {
      const auto star = rest.find('*');
      if (star == std::string_view::npos || star == 1)
        throw ParseError("malformed props cell '" + cell + "'", line);
      if (open)
        throw ParseError("nested bracket '" + cell + "' inside open " + current.label, line);
      current = ArgumentSpan{position, position, std::string(rest.substr(1, star - 1))};
      open = true;
      rest.remove_prefix(star);
    }
    if (rest == "*)") {
      if (!open) throw ParseError("closing bracket without an open span", line);
      current.end = position;
      spans.push_back(current);
      open = false;
    } else if (rest != "*") {
      throw ParseError("malformed props cell '" + cell + "'", line);
    }
  }
  if (open)
    throw ParseError("span " + current.label + " not closed at end of sentence",
                     block.line_numbers.back());
  return spans;
}

void EmitBlock(const Block& block, Corpus* corpus) {
  const size_t width = block.rows.front().size();
  for (size_t row = 0; row < block.rows.size(); ++row) {
    if (block.rows[row].size() != width)
      throw ParseError("column count mismatch: expected " + std::to_string(width) + ", found " +
                           std::to_string(block.rows[row].size()),
                       block.line_numbers[row]);
  }
  if (width < 2) throw ParseError("expected at least 2 columns", block.line_numbers.front());

  std::vector<int> predicates;
  for (size_t row = 0; row < block.rows.size(); ++row)
    if (block.rows[row][1] != "-") predicates.push_back(static_cast<int>(row));
  if (predicates.size() != width - 2)
    throw ParseError("column count mismatch: " + std::to_string(predicates.size()) +
                         " predicates marked but " + std::to_string(width - 2) +
                         " props columns",
                     block.line_numbers.front());

  std::vector<std::string> tokens;
  tokens.reserve(block.rows.size());
  for (const auto& row : block.rows) tokens.push_back(row[0]);

  for (size_t p = 0; p < predicates.size(); ++p) {
    Instance instance;
    instance.sentence_id = block.id;
    instance.tokens = tokens;
    instance.predicate_index = predicates[p];
    instance.predicate_lemma = block.rows[predicates[p]][1];
    instance.spans = ParsePropsColumn(block, p + 2);
    std::sort(instance.spans.begin(), instance.spans.end());
    corpus->instances.push_back(std::move(instance));
  }
}

std::string PropsCell(const std::vector<ArgumentSpan>& spans, int position) {
  for (const ArgumentSpan& span : spans) {
    if (span.start == position && span.end == position) return "(" + span.label + "*)";
    if (span.start == position) return "(" + span.label + "*";
    if (span.end == position) return "*)";
  }
  return "*";
}

void CheckDisjoint(const Instance& instance) {
  std::vector<ArgumentSpan> spans = instance.spans;
  std::sort(spans.begin(), spans.end());
  for (size_t i = 1; i < spans.size(); ++i) {
    if (spans[i].start <= spans[i - 1].end)
      throw std::invalid_argument(instance.id() + ": overlapping spans " +
                                  ToString(spans[i - 1]) + " and " + ToString(spans[i]));
  }
}

}  // namespace

Corpus ParseConll(std::istream& in) {
  Corpus corpus;
  Block block;
  int ordinal = 0;
  std::string pending_id;
  int line_number = 0;
  std::string line;

  auto flush = [&]() {
    if (block.rows.empty()) return;
    ++ordinal;
    block.id = pending_id.empty() ? std::to_string(ordinal) : pending_id;
    pending_id.clear();
    EmitBlock(block, &corpus);
    block = Block();
  };

  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (block.rows.empty() && line.starts_with(kSentenceDirective)) {
      pending_id = line.substr(kSentenceDirective.size());
      if (pending_id.empty() || pending_id.find_first_of(" \t") != std::string::npos)
        throw ParseError("malformed sentence directive", line_number);
      continue;
    }
    std::vector<std::string> fields = SplitFields(line);
    if (fields.empty()) {
      flush();
      continue;
    }
    block.rows.push_back(std::move(fields));
    block.line_numbers.push_back(line_number);
  }
  flush();
  if (!pending_id.empty()) throw ParseError("sentence directive without sentence", line_number);
  return corpus;
}

Corpus ParseConllString(const std::string& text) {
  std::istringstream in(text);
  return ParseConll(in);
}

void WriteConll(std::ostream& out, const Corpus& corpus) {
  const auto& instances = corpus.instances;
  int ordinal = 0;
  size_t begin = 0;
  while (begin < instances.size()) {
    size_t end = begin + 1;
    while (end < instances.size() && instances[end].sentence_id == instances[begin].sentence_id)
      ++end;
    ++ordinal;

    std::vector<size_t> order(end - begin);
    std::iota(order.begin(), order.end(), begin);
    std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
      return instances[a].predicate_index < instances[b].predicate_index;
    });
    const std::vector<std::string>& tokens = instances[begin].tokens;
    std::vector<std::string> markers(tokens.size(), "-");
    for (size_t k = 0; k < order.size(); ++k) {
      const Instance& instance = instances[order[k]];
      if (instance.tokens != tokens)
        throw std::invalid_argument("sentence " + instance.sentence_id +
                                    ": instances disagree on tokens");
      if (k > 0 && instances[order[k - 1]].predicate_index == instance.predicate_index)
        throw std::invalid_argument(instance.id() + ": duplicate predicate position");
      CheckDisjoint(instance);
      markers.at(instance.predicate_index) =
          instance.predicate_lemma.empty() ? tokens[instance.predicate_index]
                                           : instance.predicate_lemma;
    }

    if (instances[begin].sentence_id != std::to_string(ordinal))
      out << kSentenceDirective << instances[begin].sentence_id << '\n';
    for (size_t t = 0; t < tokens.size(); ++t) {
      out << tokens[t] << '\t' << markers[t];
      for (size_t index : order)
        out << '\t' << PropsCell(instances[index].spans, static_cast<int>(t));
      out << '\n';
    }
    out << '\n';
    begin = end;
  }
}

std::string WriteConllString(const Corpus& corpus) {
  std::ostringstream out;
  WriteConll(out, corpus);
  return out.str();
}

}  // namespace srl
