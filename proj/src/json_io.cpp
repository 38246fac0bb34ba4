#include "emlab/json_io.hpp"

#include <map>

#include "emlab/errors.hpp"

namespace emlab {

using nlohmann::json;

json parse_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError("malformed JSON input");
  return j;
}

json finset_to_json(const FinSet& s) {
  json arr = json::array();
  for (std::uint64_t v : s) arr.push_back(v);
  return arr;
}

FinSet finset_from_json(const json& j) {
  if (j.is_object()) {
    if (!j.contains("from") || !j.contains("to"))
      throw ParseError("interval shorthand needs \"from\" and \"to\"");
    return FinSet::interval(j.at("from").get<std::uint64_t>(),
                            j.at("to").get<std::uint64_t>());
  }
  if (!j.is_array()) throw ParseError("set must be an array or an interval");
  std::vector<std::uint64_t> elems;
  elems.reserve(j.size());
  for (const auto& v : j) {
    if (!v.is_number_unsigned()) throw ParseError("set elements must be naturals");
    elems.push_back(v.get<std::uint64_t>());
  }
  try {
    return FinSet(std::move(elems));
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
}

json coloring_to_json(const PairColoring& c) {
  json pairs = json::array();
  const FinSet& g = c.ground();
  for (std::size_t j = 1; j < g.size(); ++j)
    for (std::size_t i = 0; i < j; ++i)
      pairs.push_back(json::array({g[i], g[j], c.color_by_index(i, j)}));
  return json{{"ground", finset_to_json(g)},
              {"colors", c.color_count()},
              {"pairs", pairs}};
}

PairColoring coloring_from_json(const json& j) {
  if (!j.is_object() || !j.contains("ground") || !j.contains("colors") ||
      !j.contains("pairs"))
    throw ParseError("coloring needs \"ground\", \"colors\", \"pairs\"");
  FinSet ground = finset_from_json(j.at("ground"));
  std::uint32_t k = j.at("colors").get<std::uint32_t>();
  if (k == 0) throw ParseError("color count must be positive");

  std::size_t n = ground.size();
  std::size_t want = n * (n - 1) / 2;
  std::vector<std::uint32_t> colors(want, 0);
  std::vector<bool> seen(want, false);
  for (const auto& entry : j.at("pairs")) {
    if (!entry.is_array() || entry.size() != 3)
      throw ParseError("each pair entry must be [x, y, color]");
    std::uint64_t x = entry[0].get<std::uint64_t>();
    std::uint64_t y = entry[1].get<std::uint64_t>();
    std::uint32_t col = entry[2].get<std::uint32_t>();
    if (!(x < y)) throw ParseError("pair must satisfy x < y");
    if (col >= k) throw ParseError("pair color out of range");
    std::size_t i, jj;
    try {
      i = ground.index_of(x);
      jj = ground.index_of(y);
    } catch (const NotSubset&) {
      throw ParseError("pair endpoint outside ground");
    }
    std::size_t rank = jj * (jj - 1) / 2 + i;
    if (seen[rank]) throw ParseError("duplicate pair in coloring");
    seen[rank] = true;
    colors[rank] = col;
  }
  for (bool s : seen)
    if (!s) throw ParseError("coloring is not total over all pairs");
  return PairColoring::from_dense(std::move(ground), k, std::move(colors));
}

json grouping_to_json(const Grouping& g) {
  json blocks = json::array();
  for (const FinSet& b : g.blocks) blocks.push_back(finset_to_json(b));
  return json{{"blocks", blocks},
              {"alpha", format_ordinal(g.alpha)},
              {"beta", format_ordinal(g.beta)}};
}

Grouping grouping_from_json(const json& j) {
  if (!j.is_object() || !j.contains("blocks") || !j.contains("alpha") ||
      !j.contains("beta"))
    throw ParseError("grouping needs \"blocks\", \"alpha\", \"beta\"");
  Grouping g;
  for (const auto& b : j.at("blocks")) g.blocks.push_back(finset_from_json(b));
  g.alpha = parse_ordinal(j.at("alpha").get<std::string>());
  g.beta = parse_ordinal(j.at("beta").get<std::string>());
  return g;
}

json violations_to_json(const std::vector<GroupingViolation>& vs) {
  json arr = json::array();
  for (const GroupingViolation& v : vs) {
    arr.push_back(json{{"condition", v.condition},
                       {"block_i", v.block_i},
                       {"block_j", v.block_j},
                       {"witness", json::array({v.elems[0], v.elems[1],
                                                v.elems[2], v.elems[3]})},
                       {"note", v.note}});
  }
  return arr;
}

json valuetable_to_json(const ValueTable& t) {
  json rows = json::array();
  for (const auto& row : t.rows) rows.push_back(row);
  return json{{"u", t.u}, {"horizon", t.horizon}, {"rows", rows}};
}

ValueTable valuetable_from_json(const json& j) {
  if (!j.is_object() || !j.contains("u") || !j.contains("horizon") ||
      !j.contains("rows"))
    throw ParseError("value table needs \"u\", \"horizon\", \"rows\"");
  ValueTable t;
  t.u = j.at("u").get<std::uint32_t>();
  t.horizon = j.at("horizon").get<std::uint32_t>();
  for (const auto& row : j.at("rows"))
    t.rows.push_back(row.get<std::vector<std::uint64_t>>());
  try {
    t.validate();
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
  return t;
}

json thetatable_to_json(const ThetaTable& t) {
  json vals = json::array();
  for (std::uint8_t v : t.values) vals.push_back(static_cast<int>(v));
  return json{{"a_bound", t.a_bound},
              {"b_bound", t.b_bound},
              {"y_bound", t.y_bound},
              {"z_bound", t.z_bound},
              {"values", vals}};
}

ThetaTable thetatable_from_json(const json& j) {
  static const char* keys[] = {"a_bound", "b_bound", "y_bound", "z_bound",
                               "values"};
  for (const char* k : keys)
    if (!j.is_object() || !j.contains(k))
      throw ParseError("theta table is missing a field");
  ThetaTable t;
  t.a_bound = j.at("a_bound").get<std::uint32_t>();
  t.b_bound = j.at("b_bound").get<std::uint32_t>();
  t.y_bound = j.at("y_bound").get<std::uint32_t>();
  t.z_bound = j.at("z_bound").get<std::uint32_t>();
  for (const auto& v : j.at("values")) {
    int b = v.get<int>();
    if (b != 0 && b != 1) throw ParseError("theta values must be 0 or 1");
    t.values.push_back(static_cast<std::uint8_t>(b));
  }
  try {
    t.validate();
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
  return t;
}

}  // namespace emlab
