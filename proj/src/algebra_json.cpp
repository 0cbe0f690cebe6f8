#include "nforge/algebra_json.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace nforge {

namespace {

using nlohmann::json;

json members_json(const PointSet& s) { return json(s.members()); }

PointSet members_from_json(Universe u, const json& j) {
  std::uint64_t bits = 0;
  for (const auto& v : j) {
    int x = v.get<int>();
    bits |= PointSet::single(u, x).bits();
  }
  return PointSet(u, bits);
}

json table_json(const std::vector<int>& flat, int m) {
  json rows = json::array();
  for (int i = 0; i < m; ++i) {
    json row = json::array();
    for (int j = 0; j < m; ++j) {
      row.push_back(flat[static_cast<std::size_t>(i) * m + j]);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

const char* kind_name(Provenance::Kind k) {
  switch (k) {
    case Provenance::Kind::Direct:
      return "direct";
    case Provenance::Kind::Sendlewski:
      return "sendlewski";
    case Provenance::Kind::Imported:
      return "imported";
  }
  return "imported";
}

}  // namespace

std::string algebra_to_json(const NelsonAlgebra& a, int indent) {
  json j;
  j["format"] = "nelson-algebra";
  j["version"] = 1;
  j["universe"] = a.universe().size();
  j["representation"] =
      a.rep() == PairRep::Increasing ? "increasing" : "disjoint";
  json prov;
  prov["kind"] = kind_name(a.provenance().kind);
  prov["congruence"] = a.provenance().congruence_name;
  prov["effective"] = a.provenance().effective;
  j["provenance"] = std::move(prov);
  json carrier = json::array();
  for (const PairElement& e : a.carrier()) {
    carrier.push_back(json::array({members_json(e.left), members_json(e.right)}));
  }
  j["carrier"] = std::move(carrier);
  j["constants"] = {{"zero", a.zero()}, {"one", a.one()}};
  json tables;
  int m = a.size();
  tables["join"] = table_json(a.join_table(), m);
  tables["meet"] = table_json(a.meet_table(), m);
  tables["imp"] = table_json(a.imp_table(), m);
  tables["strong_neg"] = json(a.strong_neg_table());
  tables["weak_neg"] = json(a.weak_neg_table());
  j["tables"] = std::move(tables);
  return j.dump(indent) + "\n";
}

NelsonAlgebra algebra_from_json(const std::string& text) {
  json j = json::parse(text);
  if (j.contains("algebra")) j = j["algebra"];
  if (!j.contains("format") || j["format"] != "nelson-algebra") {
    throw std::invalid_argument("not a nelson-algebra JSON document");
  }
  Universe u(j.at("universe").get<int>());
  PairRep rep = j.at("representation").get<std::string>() == "increasing"
                    ? PairRep::Increasing
                    : PairRep::Disjoint;
  std::vector<PairElement> carrier;
  for (const auto& e : j.at("carrier")) {
    carrier.push_back(
        {members_from_json(u, e.at(0)), members_from_json(u, e.at(1))});
  }
  auto table = [&](const char* name) {
    return j.at("tables").at(name).get<std::vector<std::vector<int>>>();
  };
  auto unary = [&](const char* name) {
    return j.at("tables").at(name).get<std::vector<int>>();
  };
  Provenance prov;
  prov.kind = Provenance::Kind::Imported;
  if (j.contains("provenance") && j["provenance"].contains("congruence")) {
    prov.congruence_name = j["provenance"]["congruence"].get<std::string>();
  }
  return NelsonAlgebra::from_tables(
      u, rep, std::move(carrier), table("join"), table("meet"), table("imp"),
      unary("strong_neg"), unary("weak_neg"),
      j.at("constants").at("zero").get<int>(),
      j.at("constants").at("one").get<int>(), std::move(prov));
}

NelsonAlgebra algebra_from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot open algebra file " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return algebra_from_json(buf.str());
}

}  // namespace nforge
