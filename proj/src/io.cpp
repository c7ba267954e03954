#include "firstfall/io.hpp"

#include <fstream>
#include <sstream>

namespace firstfall {

nlohmann::json system_to_json(const SystemInstance& sys) {
  nlohmann::json j;
  j["field"] = {{"p", sys.ring.field().p()}};
  nlohmann::json blocks = nlohmann::json::array();
  for (const auto& b : sys.ring.blocks()) blocks.push_back({{"name", b.name}, {"vars", b.vars}});
  j["blocks"] = blocks;
  if (!sys.ring.has_default_weights()) {
    nlohmann::json w = nlohmann::json::array();
    for (const auto& d : sys.ring.weights()) w.push_back(std::vector<int>(d.components().begin(), d.components().end()));
    j["weights"] = w;
  }
  nlohmann::json polys = nlohmann::json::array();
  for (const auto& p : sys.polys) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [m, c] : p.terms()) terms.push_back({c.value, m.exps});
    polys.push_back(terms);
  }
  j["polys"] = polys;
  j["provenance"] = sys.provenance;
  return j;
}

namespace {

[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

}  // namespace

SystemInstance system_from_json(const nlohmann::json& j) {
  try {
    if (!j.is_object()) parse_fail("top level must be an object");
    const auto& jp = j.at("field").at("p");
    if (!jp.is_number_unsigned()) parse_fail("field.p must be a positive integer");
    FieldSpec field(jp.get<std::uint64_t>());

    std::vector<Block> blocks;
    for (const auto& b : j.at("blocks")) {
      if (!b.at("vars").is_number_integer()) parse_fail("block vars must be an integer");
      blocks.push_back({b.at("name").get<std::string>(), b.at("vars").get<int>()});
    }
    std::optional<RingSpec> ring;
    if (j.contains("weights")) {
      std::vector<MultiDegree> weights;
      for (const auto& w : j.at("weights")) weights.emplace_back(w.get<std::vector<int>>());
      ring.emplace(field, blocks, weights);
    } else {
      ring.emplace(field, blocks);
    }
    const int n = ring->n();

    SystemInstance sys{*ring, {}};
    for (const auto& jpoly : j.at("polys")) {
      if (!jpoly.is_array()) parse_fail("each polynomial must be an array of terms");
      Poly p;
      for (const auto& term : jpoly) {
        if (!term.is_array() || term.size() != 2) parse_fail("each term must be [coeff, [exponents]]");
        if (!term[0].is_number_unsigned()) parse_fail("coefficients must be nonnegative integers");
        const auto c = term[0].get<std::uint64_t>();
        if (c >= field.p()) parse_fail("coefficient " + std::to_string(c) + " is not in [0, p)");
        const auto exps = term[1].get<std::vector<int>>();
        if (static_cast<int>(exps.size()) != n) parse_fail("exponent vector length must equal the variable count");
        Monomial m;
        for (int e : exps) {
          if (e < 0 || e > 65535) parse_fail("exponent out of range");
          m.exps.push_back(static_cast<std::uint16_t>(e));
        }
        if (p.terms().count(m)) parse_fail("repeated monomial in one polynomial");
        p.add_term(m, FieldElem{static_cast<std::uint32_t>(c)}, field);
      }
      sys.polys.push_back(std::move(p));
    }
    if (j.contains("provenance")) sys.provenance = j.at("provenance");
    return sys;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::ParseError) throw;
    throw Error(ErrorKind::ParseError, e.what());
  }
}

std::string serialize_system(const SystemInstance& sys) {
  // Fixed key order and one polynomial per line keep files diffable.
  const nlohmann::json j = system_to_json(sys);
  std::ostringstream os;
  os << "{\n \"field\": " << j["field"].dump() << ",\n \"blocks\": " << j["blocks"].dump() << ",\n";
  if (j.contains("weights")) os << " \"weights\": " << j["weights"].dump() << ",\n";
  os << " \"polys\": [";
  const auto& polys = j["polys"];
  for (std::size_t i = 0; i < polys.size(); ++i) os << (i ? ",\n  " : "\n  ") << polys[i].dump();
  os << (polys.empty() ? "],\n" : "\n ],\n");
  os << " \"provenance\": " << j["provenance"].dump() << "\n}\n";
  return os.str();
}

SystemInstance parse_system(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
  return system_from_json(j);
}

SystemInstance read_system_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_system(ss.str());
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write " + path);
  out << text;
}

nlohmann::json series_to_json(const SeriesTrunc& series) {
  nlohmann::json out = nlohmann::json::array();
  for (std::size_t i = 0; i < series.index().size(); ++i) {
    const auto& d = series.index().at(i);
    out.push_back({std::vector<int>(d.components().begin(), d.components().end()), series.at(i).get_str()});
  }
  return out;
}

nlohmann::json to_json(const DegreeAnswer& a) {
  if (a.is_found()) return {{"found", true}, {"value", *a.value}, {"bound", a.bound}};
  return {{"found", false}, {"not_found_up_to", a.bound}};
}

nlohmann::json to_json(const MultiDegreeAnswer& a) {
  if (a.is_found()) {
    const auto& c = a.value->components();
    return {{"found", true}, {"value", std::vector<int>(c.begin(), c.end())}, {"bound", a.bound}};
  }
  return {{"found", false}, {"not_found_up_to", a.bound}};
}

std::string profiles_to_csv(const std::vector<SyzygyProfile>& rows, std::size_t s) {
  std::ostringstream os;
  for (std::size_t i = 1; i <= s; ++i) os << 'd' << i << ',';
  os << "syz,ksyz,h1\n";
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < r.degree.size(); ++i) os << r.degree[i] << ',';
    os << r.syz_dim << ',' << r.ksyz_dim << ',' << r.h1_dim << '\n';
  }
  return os.str();
}

}  // namespace firstfall
