#include "assoc/serialize.hpp"

namespace assoc {

void to_json(json& j, const ExtInt& v) {
  if (v.is_finite()) {
    j = v.value();
  } else {
    j = v.to_string();
  }
}

void from_json(const json& j, ExtInt& v) {
  if (j.is_string()) {
    v = ExtInt::parse(j.get<std::string>());
  } else {
    v = ExtInt(j.get<std::int64_t>());
  }
}

void to_json(json& j, const GraphParams& p) {
  j = json{{"M_G", p.M}, {"P_G", p.P}, {"E_G", p.E}, {"O_G", p.O}, {"Z_G", p.Z}, {"B_G", p.B}, {"lambda_G", p.lambda}};
}

void from_json(const json& j, GraphParams& p) {
  j.at("M_G").get_to(p.M);
  j.at("P_G").get_to(p.P);
  j.at("E_G").get_to(p.E);
  j.at("O_G").get_to(p.O);
  j.at("Z_G").get_to(p.Z);
  j.at("B_G").get_to(p.B);
  j.at("lambda_G").get_to(p.lambda);
}

void to_json(json& j, const PairParams& p) {
  json omega = json::array();
  for (const auto& [d, h] : p.Omega) omega.push_back({d, h});
  j = json{{"H", p.H},         {"M", p.M},           {"L", p.L},
           {"Y", p.Y},         {"Z", p.Z},           {"Delta", p.Delta},
           {"Omega", omega},   {"xi", p.xi},         {"omega", p.omega_prefix},
           {"Lambda", p.Lambda}, {"lambda", p.lambda}};
}

void from_json(const json& j, PairParams& p) {
  j.at("H").get_to(p.H);
  j.at("M").get_to(p.M);
  j.at("L").get_to(p.L);
  j.at("Y").get_to(p.Y);
  j.at("Z").get_to(p.Z);
  j.at("Delta").get_to(p.Delta);
  p.Omega.clear();
  for (const auto& pair : j.at("Omega")) p.Omega.emplace(pair.at(0).get<int>(), pair.at(1).get<int>());
  j.at("xi").get_to(p.xi);
  j.at("omega").get_to(p.omega_prefix);
  j.at("Lambda").get_to(p.Lambda);
  j.at("lambda").get_to(p.lambda);
}

void to_json(json& j, const DfsTree& t) {
  const auto& parents = t.parents();
  j = json{{"n", t.size()}, {"parent", std::vector<int>(parents.begin() + 1, parents.end())}};
}

void from_json(const json& j, DfsTree& t) {
  const int n = j.at("n").get<int>();
  auto parent = j.at("parent").get<std::vector<int>>();
  if (n >= 1 && parent.size() + 1 == static_cast<std::size_t>(n)) parent.insert(parent.begin(), 0);
  if (parent.size() != static_cast<std::size_t>(n)) throw std::invalid_argument("parent array does not match n");
  t = DfsTree::from_parents(parent);
}

void to_json(json& j, const ConditionResult& c) {
  j = json{{"number", c.number}, {"label", c.label}, {"lhs", c.lhs},
           {"relation", c.relation}, {"rhs", c.rhs}, {"passed", c.passed}};
}

void to_json(json& j, const Decision& d) {
  j = json{{"satisfied", d.satisfied}, {"trivial", d.trivial}, {"conditions", d.conditions}};
  j["pair"] = d.pair ? json(*d.pair) : json(nullptr);
  j["graph"] = d.graph ? json(*d.graph) : json(nullptr);
}

void to_json(json& j, const SpectrumReport& r) {
  j = json{{"n", r.n}, {"s_n", r.s_n}, {"backend", to_string(r.backend)}, {"classes", r.classes}};
}

void from_json(const json& j, SpectrumReport& r) {
  j.at("n").get_to(r.n);
  j.at("s_n").get_to(r.s_n);
  r.backend = parse_backend(j.at("backend").get<std::string>());
  j.at("classes").get_to(r.classes);
}

void to_json(json& j, const SpectrumClass& c) {
  j = json{{"class", to_string(c.kind)}, {"component", c.component}, {"witness", c.witness}};
}

}  // namespace assoc
