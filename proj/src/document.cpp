#include "durfee/document.hpp"

#include <sstream>

#include "durfee/error.hpp"

namespace durfee {

using nlohmann::json;

json to_document(const KMarkedSymbol& s) {
  json vectors = json::array();
  for (const auto& v : s.vectors) vectors.push_back(json{{"alpha", v.alpha.parts()}, {"beta", v.beta.parts()}});
  json derived{{"weight", s.weight()}, {"ranks", ranks(s)}, {"balanced_numbers", balanced_numbers(s)}};
  return json{{"flavor", std::string(to_string(s.flavor))}, {"d", s.d}, {"vectors", vectors}, {"derived", derived}};
}

namespace {

Partition read_partition(const json& row, const char* name) {
  if (!row.is_array()) throw Error(std::string("'") + name + "' must be an array of integers");
  std::vector<int> parts;
  for (const auto& x : row) {
    if (!x.is_number_integer()) throw Error(std::string("'") + name + "' must contain integers");
    parts.push_back(x.get<int>());
  }
  return Partition(std::move(parts));
}

}  // namespace

KMarkedSymbol from_document(const json& input) {
  const json& doc = input.contains("symbol") ? input.at("symbol") : input;
  if (!doc.is_object()) throw Error("symbol document must be a JSON object");
  for (const char* key : {"flavor", "d", "vectors"})
    if (!doc.contains(key)) throw Error(std::string("symbol document missing '") + key + "'");
  if (!doc.at("flavor").is_string()) throw Error("'flavor' must be a string");
  if (!doc.at("d").is_number_integer()) throw Error("'d' must be an integer");
  if (!doc.at("vectors").is_array() || doc.at("vectors").empty()) throw Error("'vectors' must be a nonempty array");

  KMarkedSymbol s;
  s.flavor = parse_flavor(doc.at("flavor").get<std::string>());
  s.d = doc.at("d").get<int>();
  for (const auto& v : doc.at("vectors")) {
    if (!v.is_object() || !v.contains("alpha") || !v.contains("beta"))
      throw Error("each vector needs 'alpha' and 'beta'");
    s.vectors.push_back(PartitionPair{read_partition(v.at("alpha"), "alpha"), read_partition(v.at("beta"), "beta")});
  }
  if (auto v = validate(s); !v) throw Error("invalid symbol: " + v.violation);
  if (doc.contains("derived") && doc.at("derived") != to_document(s).at("derived"))
    throw Error("'derived' does not match the symbol");
  return s;
}

std::string render(const KMarkedSymbol& s) { return to_document(s).dump(); }

namespace {

std::string subscript_digits(std::size_t i) {
  static const char* digits[] = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};
  std::string out;
  for (char c : std::to_string(i)) out += digits[c - '0'];
  return out;
}

}  // namespace

std::string pretty(const KMarkedSymbol& s) {
  const bool marked = s.k() > 1;
  std::ostringstream top, bottom;
  auto emit = [&](std::ostringstream& row, const Partition& p, std::size_t i) {
    for (int part : p) {
      if (row.tellp() > 0) row << ' ';
      row << part;
      if (marked) row << subscript_digits(i);
    }
  };
  for (std::size_t i = s.k(); i >= 1; --i) {
    emit(top, s.vec(i).alpha, i);
    emit(bottom, s.vec(i).beta, i);
  }
  std::ostringstream out;
  auto line = [](std::string label, const std::string& row) {
    if (row.empty()) return label;
    label.resize(8, ' ');
    return label + row;
  };
  out << line("top:", top.str()) << "\n"
      << line("bottom:", bottom.str()) << "\n"
      << "D = " << s.d << " (" << to_string(s.flavor) << ", weight " << s.weight() << ")\n";
  return out.str();
}

}  // namespace durfee
