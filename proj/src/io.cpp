#include "bqinv/io.hpp"

#include <fstream>
#include <sstream>

namespace bqinv::io {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json parse_json(const std::string& text, const std::string& origin) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::InvalidInput, origin + ": " + e.what());
  }
}

namespace {

// nlohmann type errors become InvalidInput so callers see one error type.
template <class Fn>
auto guarded(const char* what, Fn fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const json::exception& e) {
    throw Error(ErrorKind::InvalidInput, std::string(what) + ": " + e.what());
  }
}

const json& require(const json& doc, const char* key) {
  if (!doc.is_object()) throw Error(ErrorKind::InvalidInput, "expected a JSON object");
  const auto it = doc.find(key);
  if (it == doc.end()) throw Error(ErrorKind::InvalidInput, std::string("missing field \"") + key + "\"");
  return *it;
}

RawTable raw_table(const json& rows, const char* key) {
  if (!rows.is_array()) throw Error(ErrorKind::InvalidInput, std::string("\"") + key + "\" must be an array of rows");
  RawTable out;
  for (const auto& row : rows) {
    if (!row.is_array()) throw Error(ErrorKind::InvalidInput, std::string("\"") + key + "\" rows must be arrays");
    std::vector<std::int64_t> r;
    for (const auto& v : row) {
      if (!v.is_number_integer())
        throw Error(ErrorKind::InvalidInput, std::string("\"") + key + "\" entries must be integers");
      r.push_back(v.get<std::int64_t>());
    }
    out.push_back(std::move(r));
  }
  return out;
}

Word word_field(const json& v, const std::string& where) {
  if (!v.is_string()) throw Error(ErrorKind::InvalidInput, where + " must be a word string");
  return parse_word(v.get<std::string>());
}

std::int64_t count_field(const json& census, const char* key) {
  const auto it = census.find(key);
  if (it == census.end()) return 0;
  if (!it->is_number_integer()) throw Error(ErrorKind::InvalidInput, std::string("census.") + key + " must be an integer");
  return it->get<std::int64_t>();
}

}  // namespace

BiquandleTables biquandle_tables_from_json(const json& doc) {
  return guarded("biquandle file", [&] {
    const json& n_field = require(doc, "n");
    if (!n_field.is_number_integer() || n_field.get<std::int64_t>() < 1)
      throw Error(ErrorKind::InvalidInput, "\"n\" must be a positive integer");
    const auto n = static_cast<std::size_t>(n_field.get<std::int64_t>());

    BiquandleTables t;
    if (doc.contains("quandle")) {
      if (doc.contains("under") || doc.contains("over"))
        throw Error(ErrorKind::InvalidInput, "give either \"quandle\" or \"under\"/\"over\", not both");
      t.under = Table::from_rows(raw_table(doc.at("quandle"), "quandle"));
      t.over = Table::projection(t.under.size());
    } else {
      t.under = Table::from_rows(raw_table(require(doc, "under"), "under"));
      t.over = Table::from_rows(raw_table(require(doc, "over"), "over"));
    }
    if (t.under.size() != n || t.over.size() != n)
      throw Error(ErrorKind::DimensionMismatch, "tables do not match declared n = " + std::to_string(n));
    return t;
  });
}

FiniteBiquandle biquandle_from_json(const json& doc, unsigned workers) {
  auto t = biquandle_tables_from_json(doc);
  return FiniteBiquandle::from_tables(std::move(t.under), std::move(t.over), workers);
}

json biquandle_to_json(const FiniteBiquandle& bq) {
  return {{"n", bq.size()}, {"under", bq.under().to_rows()}, {"over", bq.over().to_rows()}};
}

CocycleFile cocycle_from_json(const json& doc) {
  return guarded("cocycle file", [&] {
    const json& mod = require(doc, "modulus");
    if (!mod.is_number_integer() || mod.get<std::int64_t>() < 1 || mod.get<std::int64_t>() > UINT32_MAX)
      throw Error(ErrorKind::InvalidInput, "\"modulus\" must be a positive integer");
    std::optional<std::size_t> carrier;
    if (doc.contains("n")) {
      const json& n = doc.at("n");
      if (!n.is_number_integer() || n.get<std::int64_t>() < 1)
        throw Error(ErrorKind::InvalidInput, "\"n\" must be a positive integer");
      carrier = static_cast<std::size_t>(n.get<std::int64_t>());
    }
    const json& entries = require(doc, "entries");
    if (!entries.is_array()) throw Error(ErrorKind::InvalidInput, "\"entries\" must be an array");
    std::vector<SupportEntry> support;
    for (const auto& e : entries) {
      const json& triple = require(e, "triple");
      if (!triple.is_array() || triple.size() != 3)
        throw Error(ErrorKind::InvalidInput, "\"triple\" must have three elements");
      SupportEntry s;
      for (std::size_t i = 0; i < 3; ++i) {
        if (!triple[i].is_number_integer() || triple[i].get<std::int64_t>() < 0 ||
            triple[i].get<std::int64_t>() > UINT32_MAX)
          throw Error(ErrorKind::InvalidInput, "triple entries must be non-negative integers");
        s.triple[i] = static_cast<Element>(triple[i].get<std::int64_t>());
      }
      const json& exp = require(e, "exp");
      if (!exp.is_number_integer()) throw Error(ErrorKind::InvalidInput, "\"exp\" must be an integer");
      s.exponent = exp.get<std::int64_t>();
      support.push_back(s);
    }
    auto built = make_characteristic_cocycle(static_cast<std::uint32_t>(mod.get<std::int64_t>()), support, carrier);
    return CocycleFile{std::move(built.cocycle), std::move(built.duplicates)};
  });
}

json cocycle_to_json(const Cocycle3& theta) {
  json entries = json::array();
  for (const auto& [t, e] : theta.support()) entries.push_back({{"triple", t}, {"exp", e}});
  json doc = {{"modulus", theta.modulus()}, {"entries", entries}};
  if (theta.carrier()) doc["n"] = *theta.carrier();
  return doc;
}

DiagramData diagram_from_json(const json& doc) {
  return guarded("diagram file", [&] {
    DiagramData d;
    if (doc.is_object() && doc.contains("name")) {
      if (!doc.at("name").is_string()) throw Error(ErrorKind::InvalidInput, "\"name\" must be a string");
      d.name = doc.at("name").get<std::string>();
    }
    const json& gens = require(doc, "generators");
    if (!gens.is_array()) throw Error(ErrorKind::InvalidInput, "\"generators\" must be an array");
    for (const auto& g : gens) {
      const Word w = word_field(g, "generator");
      if (!w.is_generator()) throw Error(ErrorKind::InvalidInput, "generator names must be identifiers");
      d.generators.push_back(w.name());
    }
    if (doc.contains("relations")) {
      const json& rels = doc.at("relations");
      if (!rels.is_array()) throw Error(ErrorKind::InvalidInput, "\"relations\" must be an array");
      for (std::size_t i = 0; i < rels.size(); ++i) {
        const auto& r = rels[i];
        if (!r.is_array() || r.size() != 2)
          throw Error(ErrorKind::InvalidInput, "relation " + std::to_string(i) + " must be a pair of words");
        d.relations.push_back({word_field(r[0], "relation lhs"), word_field(r[1], "relation rhs")});
      }
    }
    if (doc.contains("triple_points")) {
      const json& tps = doc.at("triple_points");
      if (!tps.is_array()) throw Error(ErrorKind::InvalidInput, "\"triple_points\" must be an array");
      for (const auto& tp : tps) {
        const json& sign = require(tp, "sign");
        if (!sign.is_number_integer()) throw Error(ErrorKind::InvalidInput, "triple point sign must be an integer");
        d.triple_points.push_back({static_cast<int>(sign.get<std::int64_t>()),
                                   word_field(require(tp, "bottom"), "bottom"),
                                   word_field(require(tp, "middle"), "middle"), word_field(require(tp, "top"), "top")});
      }
    }
    if (doc.contains("census")) {
      const json& c = doc.at("census");
      if (!c.is_object()) throw Error(ErrorKind::InvalidInput, "\"census\" must be an object");
      d.census = {count_field(c, "t_plus"), count_field(c, "t_minus"), count_field(c, "w_plus"),
                  count_field(c, "w_minus"), count_field(c, "b_plus"), count_field(c, "b_minus")};
    }
    d.validate();
    return d;
  });
}

json census_to_json(const PointCensus& c) {
  return {{"t_plus", c.t_plus}, {"t_minus", c.t_minus}, {"w_plus", c.w_plus},
          {"w_minus", c.w_minus}, {"b_plus", c.b_plus}, {"b_minus", c.b_minus}};
}

json diagram_to_json(const DiagramData& d) {
  json rels = json::array();
  for (const auto& r : d.relations) rels.push_back({to_string(r.lhs), to_string(r.rhs)});
  json tps = json::array();
  for (const auto& tp : d.triple_points)
    tps.push_back({{"sign", tp.sign},
                   {"bottom", to_string(tp.bottom)},
                   {"middle", to_string(tp.middle)},
                   {"top", to_string(tp.top)}});
  return {{"name", d.name},
          {"generators", d.generators},
          {"relations", rels},
          {"triple_points", tps},
          {"census", census_to_json(d.census)}};
}

json statesum_document(const StateSumResult& result, const std::vector<Coloring>& nontrivial) {
  json nt = json::array();
  for (const auto& c : nontrivial) {
    json row = json::array();
    for (Element v : c.values) row.push_back(std::to_string(v));
    nt.push_back(std::move(row));
  }
  return {{"polynomial", to_string(result.value)},
          {"modulus", result.value.modulus()},
          {"coeffs", result.value.coeffs()},
          {"colorings", result.coloring_count},
          {"nontrivial", nt}};
}

}  // namespace bqinv::io
