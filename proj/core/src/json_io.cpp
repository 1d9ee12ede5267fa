#include "ultraposet/json_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace upo {

namespace {

using nlohmann::json;

json parse_text(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) fail(errc::parse, "malformed JSON");
  return j;
}

// Type mismatches (float where an int belongs, object where an array
// belongs) surface as json exceptions; map them onto parse errors.
template <typename Fn>
auto guard_json(Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const json::exception& e) {
    fail(errc::parse, e.what());
  }
}

json mask_to_json(const SubsetMask& mask) {
  json out = json::array();
  for (int e : mask.elements()) out.push_back(e);
  return out;
}

json pairs_to_json(const std::vector<std::pair<int, int>>& pairs) {
  json out = json::array();
  for (auto [a, b] : pairs) out.push_back(json::array({a, b}));
  return out;
}

Poset poset_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer()) {
    fail(errc::parse, "poset object needs an integer field 'n'");
  }
  int n = j["n"].get<int>();
  std::vector<std::pair<int, int>> pairs;
  if (j.contains("leq")) {
    if (!j["leq"].is_array()) fail(errc::parse, "'leq' must be an array of pairs");
    for (const json& p : j["leq"]) {
      if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() ||
          !p[1].is_number_integer()) {
        fail(errc::parse, "'leq' entries must be [i, j] integer pairs");
      }
      pairs.emplace_back(p[0].get<int>(), p[1].get<int>());
    }
  }
  return Poset::from_pairs(n, pairs);
}

json poset_to_json_object(const Poset& poset) {
  json j;
  j["n"] = poset.size();
  j["leq"] = pairs_to_json(poset.covers());
  return j;
}

Ultraposet ultraposet_from_json(const json& j, long long max_candidates);

json ultraposet_to_json_object(const Ultraposet& u) {
  json j;
  j["construction"] = construction_name(u.structure->kind());
  json data;
  switch (u.structure->kind()) {
    case ConstructionKind::discrete:
      data["n"] = u.size();
      break;
    case ConstructionKind::canonical: {
      auto* s = dynamic_cast<const CanonicalStructure*>(u.structure.get());
      data["lattice"] = poset_to_json_object(s->lattice().poset);
      break;
    }
    case ConstructionKind::mod_spectrum: {
      auto* s = dynamic_cast<const ModSpectrumStructure*>(u.structure.get());
      data["lattice"] = poset_to_json_object(s->lattice().poset);
      break;
    }
    case ConstructionKind::presheaf: {
      auto* s = dynamic_cast<const PresheafStructure*>(u.structure.get());
      data["base"] = poset_to_json_object(s->base());
      data["target"] = ultraposet_to_json_object(s->target());
      break;
    }
    case ConstructionKind::product: {
      auto* s = dynamic_cast<const ProductStructure*>(u.structure.get());
      json factors = json::array();
      for (const Ultraposet& f : s->factors()) factors.push_back(ultraposet_to_json_object(f));
      data["factors"] = std::move(factors);
      break;
    }
    case ConstructionKind::coproduct: {
      auto* s = dynamic_cast<const CoproductStructure*>(u.structure.get());
      data["left"] = ultraposet_to_json_object(s->left());
      data["right"] = ultraposet_to_json_object(s->right());
      break;
    }
    case ConstructionKind::custom:
      fail(errc::shape, "custom ultrastructures have no serialized form");
  }
  j["data"] = std::move(data);
  return j;
}

Ultraposet ultraposet_from_json(const json& j, long long max_candidates) {
  if (!j.is_object() || !j.contains("construction") || !j.contains("data")) {
    fail(errc::parse, "ultraposet object needs 'construction' and 'data'");
  }
  std::string kind = j["construction"].get<std::string>();
  const json& data = j["data"];
  if (kind == "discrete") {
    if (!data.contains("n")) fail(errc::parse, "discrete data needs 'n'");
    return discrete_ultraposet(data["n"].get<int>());
  }
  if (kind == "canonical") {
    return canonical_ultraposet(validate_dist_lattice(poset_from_json(data.at("lattice"))));
  }
  if (kind == "mod") {
    return mod_spectrum_ultraposet(validate_dist_lattice(poset_from_json(data.at("lattice"))));
  }
  if (kind == "presheaf") {
    return presheaf_ultraposet(poset_from_json(data.at("base")),
                               ultraposet_from_json(data.at("target"), max_candidates),
                               max_candidates);
  }
  if (kind == "product") {
    std::vector<Ultraposet> factors;
    for (const json& f : data.at("factors")) {
      factors.push_back(ultraposet_from_json(f, max_candidates));
    }
    return product_ultraposet(std::move(factors));
  }
  if (kind == "coproduct") {
    return coproduct_ultraposet(ultraposet_from_json(data.at("left"), max_candidates),
                                ultraposet_from_json(data.at("right"), max_candidates));
  }
  fail(errc::parse, "unknown construction '" + kind + "'");
}

}  // namespace

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(errc::io, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Poset parse_poset_json(const std::string& text) {
  return guard_json([&] { return poset_from_json(parse_text(text)); });
}

Poset load_poset(const std::filesystem::path& path) {
  return parse_poset_json(read_text_file(path));
}

std::string poset_to_json(const Poset& poset) { return poset_to_json_object(poset).dump(2); }

DistLattice load_lattice(const std::filesystem::path& path) {
  return validate_dist_lattice(load_poset(path));
}

MonotoneMap load_monotone_map(const std::filesystem::path& path) {
  return guard_json([&] {
    json j = parse_text(read_text_file(path));
    if (!j.contains("dom") || !j.contains("cod") || !j.contains("values")) {
      fail(errc::parse, "hom object needs 'dom', 'cod' and 'values'");
    }
    std::filesystem::path base = path.parent_path();
    Poset dom = load_poset(base / j["dom"].get<std::string>());
    Poset cod = load_poset(base / j["cod"].get<std::string>());
    std::vector<int> values;
    for (const json& v : j["values"]) values.push_back(v.get<int>());
    return make_monotone_map(std::move(dom), std::move(cod), std::move(values));
  });
}

Ultrafilter parse_ultrafilter_json(const std::string& text) {
  return guard_json([&] {
    json j = parse_text(text);
    if (!j.contains("m")) fail(errc::parse, "ultrafilter object needs 'm'");
    int m = j["m"].get<int>();
    if (j.contains("principal")) return Ultrafilter::principal(j["principal"].get<int>(), m);
    if (!j.contains("sets")) fail(errc::parse, "ultrafilter object needs 'sets' or 'principal'");
    std::vector<SubsetMask> family;
    for (const json& set : j["sets"]) {
      SubsetMask mask(m);
      for (const json& e : set) {
        int i = e.get<int>();
        if (i < 0 || i >= m) fail(errc::parse, "set member out of range");
        mask.set(i);
      }
      family.push_back(std::move(mask));
    }
    return Ultrafilter::from_family(m, std::move(family));
  });
}

std::string ultrafilter_to_json(const Ultrafilter& mu) {
  json j;
  j["m"] = mu.carrier_size();
  j["principal"] = mu.witness();
  json sets = json::array();
  for (const SubsetMask& a : mu.family()) sets.push_back(mask_to_json(a));
  j["sets"] = std::move(sets);
  return j.dump(2);
}

Ultraposet parse_ultraposet_json(const std::string& text, long long max_candidates) {
  return guard_json([&] { return ultraposet_from_json(parse_text(text), max_candidates); });
}

Ultraposet load_ultraposet(const std::filesystem::path& path, long long max_candidates) {
  return parse_ultraposet_json(read_text_file(path), max_candidates);
}

std::string ultraposet_to_json(const Ultraposet& u) {
  return ultraposet_to_json_object(u).dump(2);
}

std::string axiom_report_to_json(const AxiomReport& report) {
  json j;
  j["pass"] = report.pass();
  j["unity"] = report.unity;
  j["lax_associativity"] = report.lax_assoc;
  j["associativity_equality"] = report.assoc_equality;
  j["locality"] = report.locality;
  j["monotone"] = report.monotone;
  j["probes"] = report.probes;
  j["witness"] = report.witness;
  return j.dump(2);
}

std::string spectrum_to_json(const SpectrumResult& spectrum) {
  json j;
  j["spectrum"] = poset_to_json_object(spectrum.spectrum.carrier);
  json primes = json::array();
  for (const SubsetMask& p : spectrum.primes) primes.push_back(mask_to_json(p));
  j["primes"] = std::move(primes);
  j["lattice_size"] = spectrum.lattice.size();
  return j.dump(2);
}

std::string reconstruction_to_json(const CounitResult& c, const ReconstructIdlResult& rec) {
  json j;
  json counit_obj;
  counit_obj["values"] = c.hom.values;
  json pairs = json::array();
  for (const ClosedPair& p : c.omega.pairs) {
    json pair_obj;
    pair_obj["down"] = mask_to_json(p.down);
    pair_obj["up"] = mask_to_json(p.up);
    pairs.push_back(std::move(pair_obj));
  }
  counit_obj["clcd"] = std::move(pairs);
  j["counit"] = std::move(counit_obj);

  json idl_obj;
  idl_obj["iso"] = rec.iso;
  json ideal_list = json::array();
  for (const Ideal& ideal : rec.idl.elements) ideal_list.push_back(mask_to_json(ideal.elems));
  idl_obj["ideals"] = std::move(ideal_list);
  json clc_list = json::array();
  for (const SubsetMask& k : rec.clc_op.sets) clc_list.push_back(mask_to_json(k));
  idl_obj["clc"] = std::move(clc_list);
  j["idl"] = std::move(idl_obj);
  return j.dump(2);
}

std::string report_to_json(const DualityReport& report, const std::string& suite,
                           bool include_millis) {
  json j;
  j["suite"] = suite;
  j["all_pass"] = report.all_pass();
  json entries = json::array();
  for (const ReportEntry& e : report.entries) {
    json entry;
    entry["name"] = e.name;
    entry["status"] = e.pass ? "pass" : "fail";
    entry["witness"] = e.witness;
    entry["probes"] = e.probes;
    if (include_millis) entry["millis"] = e.millis;
    entries.push_back(std::move(entry));
  }
  j["entries"] = std::move(entries);
  if (const ReportEntry* f = report.first_failure()) {
    json failure;
    failure["name"] = f->name;
    failure["witness"] = f->witness;
    j["first_failure"] = std::move(failure);
  } else {
    j["first_failure"] = nullptr;
  }
  return j.dump(2);
}

namespace {

std::string dot_of_poset(const Poset& poset, const std::string& graph_name,
                         const std::vector<std::string>& annotations) {
  std::ostringstream out;
  out << "digraph " << graph_name << " {\n";
  out << "  rankdir=BT;\n";
  for (int p = 0; p < poset.size(); ++p) {
    out << "  e" << p << " [label=\"e" << p;
    if (!annotations.empty() && !annotations[p].empty()) out << " " << annotations[p];
    out << "\"];\n";
  }
  for (auto [p, q] : poset.covers()) out << "  e" << p << " -> e" << q << ";\n";
  out << "}\n";
  return out.str();
}

std::string set_label(const SubsetMask& mask) {
  std::string out = "{";
  bool first = true;
  for (int e : mask.elements()) {
    if (!first) out += ",";
    out += std::to_string(e);
    first = false;
  }
  return out + "}";
}

}  // namespace

std::string poset_to_dot(const Poset& poset, const std::string& graph_name) {
  return dot_of_poset(poset, graph_name, {});
}

std::string spectrum_to_dot(const SpectrumResult& spectrum) {
  std::vector<std::string> annotations;
  annotations.reserve(spectrum.primes.size());
  for (const SubsetMask& p : spectrum.primes) annotations.push_back(set_label(p));
  return dot_of_poset(spectrum.spectrum.carrier, "spectrum", annotations);
}

std::string clc_to_dot(const Ultraposet& u, const CheckOptions& opts) {
  std::vector<SubsetMask> sets = clc(u, opts);
  const int n = static_cast<int>(sets.size());
  std::vector<SubsetMask> rows(n, SubsetMask(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (sets[a].subset_of(sets[b])) rows[a].set(b);
    }
  }
  Poset order = Poset::from_rows(std::move(rows));
  std::vector<std::string> annotations;
  annotations.reserve(sets.size());
  for (const SubsetMask& s : sets) annotations.push_back(set_label(s));
  return dot_of_poset(order, "clc", annotations);
}

}  // namespace upo
