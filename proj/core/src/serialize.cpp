#include "satake/serialize.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace satake {

using nlohmann::json;

std::string index_to_json(const AbstractIndex& idx) {
  const RootSystem& rs = idx.system();
  json j;
  j["type"] = rs.type.name();
  j["delta"] = idx.delta;
  std::vector<int> d0pos;
  for (RootIndex r : idx.delta0) {
    auto it = std::find(idx.delta.begin(), idx.delta.end(), r);
    d0pos.push_back(static_cast<int>(it - idx.delta.begin()));
  }
  j["delta0"] = d0pos;
  json pi = json::array();
  json pi_roots = json::array();
  for (const auto& g : idx.pi.generators()) {
    std::vector<int> nodeperm;
    for (RootIndex r : idx.delta) {
      auto it = std::find(idx.delta.begin(), idx.delta.end(), g(r));
      nodeperm.push_back(static_cast<int>(it - idx.delta.begin()));
    }
    pi.push_back(nodeperm);
    pi_roots.push_back(g.perm());
  }
  j["pi"] = pi;
  j["pi_roots"] = pi_roots;
  j["central"] = {{"c", idx.split_central_rank()}, {"d", idx.central_rank()}};
  return j.dump();
}

AbstractIndex index_from_json(const std::string& text) {
  json j = json::parse(text);
  const RootSystem& rs = RootSystem::get(CartanType::parse(j.at("type").get<std::string>()));
  AbstractIndex idx;
  idx.ambient = &rs;
  for (auto r : j.at("delta")) idx.delta.push_back(r.get<RootIndex>());
  for (auto p : j.at("delta0")) idx.delta0.push_back(idx.delta.at(p.get<std::size_t>()));
  std::vector<Isometry> gens;
  if (j.contains("pi_roots")) {
    for (auto& perm : j.at("pi_roots")) {
      std::vector<RootIndex> p;
      for (auto x : perm) p.push_back(x.get<RootIndex>());
      if (p.size() != rs.size()) throw std::invalid_argument("index_from_json: bad pi_roots");
      gens.emplace_back(rs, std::move(p));
    }
  }
  idx.pi = IsometryGroup(rs, std::move(gens));
  return idx;
}

std::string embedding_to_json(const IndexEmbedding& e) {
  json j;
  j["p"] = e.p;
  j["G"] = json::parse(index_to_json(e.g));
  j["H"] = json::parse(index_to_json(e.h));
  EmbeddingFlags f = embedding_flags(e);
  j["flags"] = {{"isotropic", f.isotropic},
                {"split", f.split},
                {"quasisplit", f.quasisplit},
                {"independent", f.independent},
                {"maximal", f.maximal}};
  return j.dump(2);
}

IndexEmbedding embedding_from_json(const std::string& text) {
  json j = json::parse(text);
  IndexEmbedding e;
  e.p = j.at("p").get<long long>();
  e.g = index_from_json(j.at("G").dump());
  e.h = index_from_json(j.at("H").dump());
  if (e.g.ambient != e.h.ambient)
    throw std::invalid_argument("embedding_from_json: mismatched ambient types");
  return e;
}

std::string render_index(const AbstractIndex& idx) {
  const RootSystem& rs = idx.system();
  std::ostringstream os;
  auto comps = base_components(rs, idx.delta);
  os << rs.type.name() << " index";
  if (idx.central_rank() > 0)
    os << " x T" << idx.central_rank() << "_" << idx.split_central_rank();
  os << "\n";
  std::map<RootIndex, int> node_no;
  int counter = 1;
  for (const auto& comp : comps)
    for (RootIndex r : comp) node_no[r] = counter++;
  for (const auto& comp : comps) {
    os << "  ";
    for (std::size_t i = 0; i < comp.size(); ++i) {
      if (i) os << " - ";
      os << (idx.in_delta0(comp[i]) ? '*' : 'o');
    }
    os << "   (nodes";
    for (RootIndex r : comp) os << " " << node_no[r];
    os << ")\n";
  }
  bool any_orbit = false;
  std::ostringstream orbits;
  for (const auto& orbit : idx.distinguished_orbits()) {
    if (orbit.size() < 2) continue;
    any_orbit = true;
    orbits << " {";
    for (std::size_t i = 0; i < orbit.size(); ++i)
      orbits << (i ? "," : "") << node_no[orbit[i]];
    orbits << "}";
  }
  if (any_orbit) os << "  orbit arcs:" << orbits.str() << "\n";
  return os.str();
}

namespace {

std::string p_set_str(const std::set<long long>& ps) {
  std::string s;
  for (long long p : ps) {
    if (!s.empty()) s += " ";
    s += std::to_string(p);
  }
  return s;
}

}  // namespace

std::string rows_to_csv(const std::vector<ClassificationRow>& rows) {
  std::ostringstream os;
  os << "Delta,StabW,Pi,H,Psi0,Phi_a,G,p_set,cd1,R,Qp\n";
  for (const auto& row : rows) {
    auto prefix = [&]() {
      os << row.delta_class << "," << row.stab_w << "," << row.pi_label << "," << row.h_code
         << "," << row.psi0 << "," << row.phi_a << ",";
    };
    if (row.g_names.empty()) {
      prefix();
      os << "," << p_set_str(row.p_set) << ",,,\n";
      continue;
    }
    for (const auto& g : row.g_names) {
      prefix();
      AdmissibilityFlags f = admissibility_flags(row, g);
      os << g << "," << p_set_str(row.p_set) << "," << flag_str(f.cd1) << ","
         << flag_str(f.real) << "," << flag_str(f.padic) << "\n";
    }
  }
  return os.str();
}

std::string rows_to_json(const std::vector<ClassificationRow>& rows) {
  json out = json::array();
  for (const auto& row : rows) {
    json r;
    r["delta"] = row.delta_class;
    r["stab_w"] = row.stab_w;
    r["pi"] = row.pi_label;
    r["h"] = row.h_code;
    r["h_index"] = json::parse(index_to_json(row.h));
    r["psi0"] = row.psi0;
    r["phi_a"] = row.phi_a;
    r["p_set"] = row.p_set;
    json gs = json::array();
    for (const auto& g : row.g_names) {
      AdmissibilityFlags f = admissibility_flags(row, g);
      gs.push_back({{"name", g},
                    {"cd1", flag_str(f.cd1)},
                    {"R", flag_str(f.real)},
                    {"Qp", flag_str(f.padic)}});
    }
    r["g"] = gs;
    out.push_back(std::move(r));
  }
  return out.dump(1);
}

}  // namespace satake
