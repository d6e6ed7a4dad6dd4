#include "sl2hat/io.hpp"

#include <charconv>
#include <stdexcept>

namespace sl2hat {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw std::invalid_argument(what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) malformed("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) malformed(std::string("missing field \"") + key + "\"");
  return *it;
}

std::vector<int> int_array(const Json& j, const char* key) {
  const Json& arr = field(j, key);
  if (!arr.is_array()) malformed(std::string("field \"") + key + "\" must be an array");
  std::vector<int> out;
  for (const auto& v : arr) {
    if (!v.is_number_integer()) malformed(std::string("field \"") + key + "\" must hold integers");
    out.push_back(v.get<int>());
  }
  return out;
}

}  // namespace

std::string shape_name(Fundamental f) { return f == Fundamental::Lambda0 ? "L0" : "L1"; }

Fundamental parse_shape(std::string_view text) {
  if (text == "L0" || text == "0") return Fundamental::Lambda0;
  if (text == "L1" || text == "1") return Fundamental::Lambda1;
  malformed("shape must be \"L0\" or \"L1\"");
}

Json to_json(const ChargedPartition& cp) {
  return Json{{"parts", cp.parts()}, {"charge", to_int(cp.charge())}};
}

ChargedPartition partition_from_json(const Json& j) {
  auto parts = int_array(j, "parts");
  const Json& charge = field(j, "charge");
  if (!charge.is_number_integer()) malformed("field \"charge\" must be 0 or 1");
  return ChargedPartition(std::move(parts), node_from_int(charge.get<long long>()));
}

Json to_json(const LSPath& path) {
  return Json{{"shape", shape_name(path.shape())}, {"n", path.n()}, {"steps", path.steps()}};
}

Json to_verbose_json(const LSPath& path) {
  Json dirs = Json::array();
  for (const auto& d : path.directions()) dirs.push_back(to_string(d));
  Json times = Json::array();
  auto t = path.times();
  t.pop_back();  // the final time is always 1
  for (const auto& a : t) times.push_back(to_string(a));
  return Json{{"shape", shape_name(path.shape())}, {"directions", dirs}, {"times", times}};
}

LSPath path_from_json(const Json& j) {
  const Json& shape = field(j, "shape");
  if (!shape.is_string()) malformed("field \"shape\" must be \"L0\" or \"L1\"");
  const Json& n = field(j, "n");
  if (!n.is_number_integer()) malformed("field \"n\" must be an integer");
  return LSPath(parse_shape(shape.get<std::string>()), n.get<int>(), int_array(j, "steps"));
}

Json to_json(const Weight& w) {
  return Json{{"c0", to_string(w.c0)}, {"c1", to_string(w.c1)}, {"d", to_string(w.d)}};
}

Weight weight_from_json(const Json& j) {
  auto coord = [&](const char* key) {
    const Json& v = field(j, key);
    if (!v.is_string()) malformed(std::string("field \"") + key + "\" must be a rational string");
    return parse_rational(v.get<std::string>());
  };
  return Weight{coord("c0"), coord("c1"), coord("d")};
}

Json to_json(const TensorElement& t) {
  return Json{{"left", to_json(t.left)}, {"right", to_json(t.right)}};
}

Json to_json(const MultiplicityTable& table) {
  Json rows = Json::array();
  for (int n = 0; n <= table.cutoff; ++n) {
    Json row{{"n", n}, {"a_n", table.a[static_cast<std::size_t>(n)].str()}};
    if (table.lambda == Fundamental::Lambda0) row["b_n"] = table.b[static_cast<std::size_t>(n)].str();
    rows.push_back(row);
  }
  return Json{{"lambda", shape_name(table.lambda)},
              {"cutoff", table.cutoff},
              {"rows", rows},
              {"summands", summands(table)}};
}

Json to_json(const CrystalGraph& g) {
  Json vertices = Json::array();
  for (std::size_t k = 0; k < g.vertices.size(); ++k) {
    Json v = to_json(g.vertices[k]);
    v["id"] = k;
    v["weight"] = to_json(g.weights[k]);
    vertices.push_back(v);
  }
  Json edges = Json::array();
  for (const auto& e : g.edges) edges.push_back(Json{{"from", e.from}, {"to", e.to}, {"i", to_int(e.color)}});
  return Json{{"vertices", vertices}, {"edges", edges}};
}

std::vector<int> parse_parts(std::string_view text) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::size_t pos = 0;
  while (true) {
    auto comma = text.find(',', pos);
    auto tok = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size() || tok.empty())
      malformed("malformed parts list: '" + std::string(text) + "'");
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace sl2hat
