#include "srl/xml_reader.h"

#include <algorithm>
#include <charconv>
#include <optional>
#include <sstream>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

namespace srl {
namespace {

namespace pt = boost::property_tree;

constexpr const char* kAttributes = "<xmlattr>";

bool IsMarkup(const std::string& key) {
  return key == kAttributes || key == "<xmlcomment>" || key == "<xmltext>";
}

std::string Trim(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return "";
  const auto last = text.find_last_not_of(" \t\r\n");
  return text.substr(first, last - first + 1);
}

std::optional<int> IntAttribute(const pt::ptree& node, const char* name) {
  const auto value = node.get_optional<std::string>(std::string(kAttributes) + "." + name);
  if (!value) return std::nullopt;
  int parsed = 0;
  const std::string text = Trim(*value);
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), parsed);
  if (ec != std::errc() || ptr != text.data() + text.size()) return std::nullopt;
  return parsed;
}

std::string StringAttribute(const pt::ptree& node, const char* name) {
  return Trim(node.get<std::string>(std::string(kAttributes) + "." + name, ""));
}

void AddFlags(const std::string& text, std::vector<std::string>* flags) {
  std::string normalized = text;
  std::replace(normalized.begin(), normalized.end(), ',', ' ');
  std::istringstream stream(normalized);
  std::string flag;
  while (stream >> flag) flags->push_back(flag);
}

// Returns an empty string on success, otherwise the rejection reason.
std::string ReadPredicate(const pt::ptree& node, const std::vector<std::string>& tokens,
                          Instance* instance, XmlReport* report) {
  const int n = static_cast<int>(tokens.size());
  const auto index = IntAttribute(node, "index");
  if (!index) return "predicate without a valid index attribute";
  instance->predicate_index = *index;
  if (*index < 0 || *index >= n) return "predicate index " + std::to_string(*index) + " out of bounds";
  instance->predicate_lemma = StringAttribute(node, "lemma");
  if (instance->predicate_lemma.empty() || instance->predicate_lemma == "-")
    instance->predicate_lemma = tokens[*index];
  AddFlags(StringAttribute(node, "flags"), &instance->flags);

  for (const auto& [key, child] : node) {
    if (IsMarkup(key)) continue;
    if (key != "argument") {
      report->warnings.push_back("skipped unknown element <" + key + "> in predicate");
      continue;
    }
    const auto start = IntAttribute(child, "start");
    const auto end = IntAttribute(child, "end");
    const std::string label = StringAttribute(child, "label");
    if (!start || !end || label.empty()) return "argument missing start, end or label";
    if (*start < 0 || *end < *start || *end >= n)
      return "argument " + ToString({*start, *end, label}) + " out of sentence bounds";
    instance->spans.push_back({*start, *end, label});
    AddFlags(StringAttribute(child, "flags"), &instance->flags);
  }
  std::sort(instance->spans.begin(), instance->spans.end());
  std::sort(instance->flags.begin(), instance->flags.end());
  instance->flags.erase(std::unique(instance->flags.begin(), instance->flags.end()),
                        instance->flags.end());
  return "";
}

void ReadSentence(const pt::ptree& node, int ordinal, Corpus* corpus, XmlReport* report) {
  std::string sentence_id = StringAttribute(node, "id");
  if (sentence_id.empty()) sentence_id = std::to_string(ordinal);

  std::vector<std::string> tokens;
  bool tokens_ok = true;
  for (const auto& [key, child] : node) {
    if (key != "token") continue;
    const std::string surface = Trim(child.data());
    if (surface.empty() || surface.find_first_of(" \t\r\n") != std::string::npos)
      tokens_ok = false;
    tokens.push_back(surface);
  }

  for (const auto& [key, child] : node) {
    if (IsMarkup(key) || key == "token") continue;
    if (key != "predicate") {
      report->warnings.push_back("sentence " + sentence_id + ": skipped unknown element <" +
                                 key + ">");
      continue;
    }
    Instance instance;
    instance.sentence_id = sentence_id;
    instance.tokens = tokens;
    std::string reason = tokens_ok ? ReadPredicate(child, tokens, &instance, report)
                                   : "sentence has an empty or whitespace token";
    if (!reason.empty()) {
      report->rejected.push_back(instance.id() + ": " + reason);
      continue;
    }
    corpus->instances.push_back(std::move(instance));
  }
}

}  // namespace

Corpus ParseXml(std::istream& in, XmlReport* report) {
  pt::ptree tree;
  try {
    pt::read_xml(in, tree, pt::xml_parser::no_comments);
  } catch (const pt::xml_parser_error& error) {
    throw ParseError(error.message(), static_cast<int>(error.line()));
  }
  const auto root = tree.get_child_optional("corpus");
  if (!root) throw ParseError("root element must be <corpus>", 0);

  Corpus corpus;
  int ordinal = 0;
  for (const auto& [key, child] : *root) {
    if (IsMarkup(key)) continue;
    if (key != "sentence") {
      report->warnings.push_back("skipped unknown element <" + key + ">");
      continue;
    }
    ReadSentence(child, ++ordinal, &corpus, report);
  }
  return corpus;
}

}  // namespace srl
