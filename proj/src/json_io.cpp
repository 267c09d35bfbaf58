#include "posrep/json_io.hpp"

#include <map>
#include <set>
#include <sstream>

#include "posrep/error.hpp"

namespace posrep {

namespace {

[[noreturn]] void schema_error(const std::string& pointer, const std::string& what) {
  throw Error(ErrorCode::SchemaError, what + " at " + (pointer.empty() ? "/" : pointer));
}

}  // namespace

ParsedPoset parse_poset(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::SchemaError, "malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  return poset_from_json(j);
}

ParsedPoset poset_from_json(const Json& j) {
  if (!j.is_object()) schema_error("", "expected an object");
  if (!j.contains("elements")) schema_error("/elements", "missing key");
  const Json& elements = j.at("elements");
  if (!elements.is_array()) schema_error("/elements", "expected an array of labels");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (!elements[i].is_string()) schema_error("/elements/" + std::to_string(i), "expected a string");
    labels.push_back(elements[i].get<std::string>());
  }

  const bool has_covers = j.contains("covers");
  const bool has_order = j.contains("order");
  if (has_covers == has_order) schema_error("/covers", "expected exactly one of \"covers\" or \"order\"");
  const std::string key = has_covers ? "covers" : "order";
  const Json& rel = j.at(key);
  if (!rel.is_array()) schema_error("/" + key, "expected an array of pairs");

  const std::set<std::string> known(labels.begin(), labels.end());
  std::vector<LabelPair> pairs;
  std::set<LabelPair> strict;
  for (std::size_t i = 0; i < rel.size(); ++i) {
    const std::string at = "/" + key + "/" + std::to_string(i);
    if (!rel[i].is_array() || rel[i].size() != 2) schema_error(at, "expected a [lower, upper] pair");
    for (std::size_t k = 0; k < 2; ++k) {
      if (!rel[i][k].is_string()) schema_error(at + "/" + std::to_string(k), "expected a string");
      if (!known.count(rel[i][k].get<std::string>())) {
        throw Error(ErrorCode::UnknownLabel, "'" + rel[i][k].get<std::string>() + "' at " + at + "/" + std::to_string(k));
      }
    }
    pairs.emplace_back(rel[i][0].get<std::string>(), rel[i][1].get<std::string>());
    if (pairs.back().first != pairs.back().second) strict.insert(pairs.back());
  }

  ParsedPoset out;
  out.mode = has_covers ? BuildMode::Covers : BuildMode::Order;
  out.poset = Poset::build(std::move(labels), pairs, out.mode);
  // Covers are closed by definition; only a non-transitive order needs a note.
  if (out.mode == BuildMode::Order) out.closure_added = out.poset.strict_relation_count() - strict.size();
  return out;
}

Json to_json(const Poset& p) {
  Json covers = Json::array();
  for (const auto& [a, b] : p.cover_pairs()) covers.push_back({p.label(a), p.label(b)});
  return {{"elements", p.labels()}, {"covers", covers}};
}

Json arity_json(Arity a) {
  if (a.is_all()) return "ALL";
  return a.value();
}

Json signature_json(Signature s) { return {{"alpha", arity_json(s.alpha)}, {"beta", arity_json(s.beta)}}; }

Json element_set_json(const Poset& p, ElementSet s) { return p.labels_of(s); }

namespace {

Arity arity_from_json(const Json& j, const std::string& pointer) {
  try {
    if (j.is_number_unsigned() || j.is_number_integer()) return Arity::finite(j.get<unsigned>());
    if (j.is_string()) return Arity::parse(j.get<std::string>());
  } catch (const Error&) {
  }
  schema_error(pointer, "expected an integer >= 2 or \"ALL\"");
}

}  // namespace

Json to_json(const Poset& p, const Representation& h) {
  Json map = Json::object();
  for (Index i = 0; i < p.size(); ++i) {
    Json points = Json::array();
    for (auto x = h.images[i].find_first(); x != PointSet::npos; x = h.images[i].find_next(x)) {
      points.push_back(h.ground[x]);
    }
    map[p.label(i)] = points;
  }
  return {{"ground", h.ground},
          {"map", map},
          {"alpha", arity_json(h.signature.alpha)},
          {"beta", arity_json(h.signature.beta)}};
}

Representation representation_from_json(const Poset& p, const Json& j) {
  if (!j.is_object()) schema_error("", "expected an object");
  for (const char* key : {"ground", "map", "alpha", "beta"}) {
    if (!j.contains(key)) schema_error(std::string("/") + key, "missing key");
  }
  Representation h;
  h.signature = {arity_from_json(j.at("alpha"), "/alpha"), arity_from_json(j.at("beta"), "/beta")};
  const Json& ground = j.at("ground");
  if (!ground.is_array()) schema_error("/ground", "expected an array of point names");
  std::map<std::string, std::size_t> point_index;
  for (std::size_t i = 0; i < ground.size(); ++i) {
    if (!ground[i].is_string()) schema_error("/ground/" + std::to_string(i), "expected a string");
    if (!point_index.emplace(ground[i].get<std::string>(), i).second) {
      schema_error("/ground/" + std::to_string(i), "duplicate point");
    }
    h.ground.push_back(ground[i].get<std::string>());
  }
  const Json& map = j.at("map");
  if (!map.is_object()) schema_error("/map", "expected an object");
  h.images.assign(p.size(), PointSet(h.ground.size()));
  std::vector<bool> seen(p.size(), false);
  for (const auto& [label, points] : map.items()) {
    const auto idx = p.find(label);
    if (!idx) throw Error(ErrorCode::UnknownElement, "'" + label + "' at /map");
    seen[*idx] = true;
    if (!points.is_array()) schema_error("/map/" + label, "expected an array of points");
    for (const auto& pt : points) {
      if (!pt.is_string() || !point_index.count(pt.get<std::string>())) {
        throw Error(ErrorCode::UnknownElement, "point " + pt.dump() + " at /map/" + label + " is not in the ground set");
      }
      h.images[*idx].set(point_index.at(pt.get<std::string>()));
    }
  }
  for (Index i = 0; i < p.size(); ++i) {
    if (!seen[i]) throw Error(ErrorCode::UnknownElement, "no image for '" + p.label(i) + "' at /map");
  }
  return h;
}

Json to_json(const Poset& p, const FilterViolation& v) {
  return {{"kind", to_string(v.kind)},
          {"witness_set", element_set_json(p, v.witness_set)},
          {"witness_element", p.label(v.witness_element)}};
}

Json to_json(const Poset& p, const SeparationReport& r) {
  Json failures = Json::array();
  Json witnesses = Json::array();
  for (const auto& o : r.pairs) {
    if (o.witness) {
      witnesses.push_back({{"pair", {p.label(o.p), p.label(o.q)}}, {"filter", element_set_json(p, *o.witness)}});
    } else {
      failures.push_back({p.label(o.p), p.label(o.q)});
    }
  }
  return {{"signature", signature_json(r.signature)},
          {"representable", r.representable},
          {"method", to_string(r.method)},
          {"failures", failures},
          {"witnesses", witnesses}};
}

Json to_json(const SpectrumReport& r) {
  Json bounds = Json::array();
  for (Arity a : r.bounds) bounds.push_back(arity_json(a));
  Json frontier = Json::array();
  for (const auto& s : r.frontier) frontier.push_back(signature_json(s));
  return {{"bounds", bounds}, {"matrix", r.representable}, {"frontier", frontier}, {"decided", r.decided}};
}

Json to_json(const Poset& p, const RepresentationViolation& v) {
  Json elements = Json::array();
  for (Index i : v.elements) elements.push_back(p.label(i));
  Json out = {{"kind", to_string(v.kind)}, {"elements", elements}};
  if (v.extremum) out["extremum"] = p.label(*v.extremum);
  return out;
}

Json to_json(const Poset& p, const ConditionReport& r) {
  Json out = {{"name", r.name}, {"holds", r.holds}};
  if (r.counterexample) {
    const auto& w = *r.counterexample;
    auto opt = [&](std::optional<Index> i) -> Json { return i ? Json(p.label(*i)) : Json(nullptr); };
    out["counterexample"] = {{"x", p.label(w.x)},
                             {"y", p.label(w.y)},
                             {"z", p.label(w.z)},
                             {"x_meet_y_join_z", p.label(w.left)},
                             {"x_meet_y", opt(w.xy)},
                             {"x_meet_z", opt(w.xz)},
                             {"join_of_meets", opt(w.right)},
                             {"failure", to_string(w.failure)}};
  }
  return out;
}

Json to_json(const Poset& p, const LatticeProfile& r) {
  Json out = {{"is_lattice", r.is_lattice}};
  if (!r.is_lattice) return out;
  out["is_distributive"] = r.is_distributive;
  out["distributive_identity"] = r.distributive_identity;
  out["no_m3_n5_sublattice"] = r.no_m3_n5;
  out["join_irreducibles"] = element_set_json(p, r.join_irreducibles);
  out["meet_irreducibles"] = element_set_json(p, r.meet_irreducibles);
  out["join_dense"] = r.join_dense;
  out["meet_dense"] = r.meet_dense;
  out["frame_law"] = r.frame_law;
  out["coframe_law"] = r.coframe_law;
  return out;
}

Json to_json(const Poset& p, const CompleteRepresentability& r) {
  Json out = {{"representable", r.representable}, {"lattice_cross_checked", r.lattice_cross_checked}};
  if (r.failing_pair) out["failing_pair"] = {p.label(r.failing_pair->first), p.label(r.failing_pair->second)};
  if (r.lattice_cross_checked) {
    out["join_irreducibles_dense_and_frame_law"] = r.join_criterion;
    out["meet_irreducibles_dense_and_coframe_law"] = r.meet_criterion;
  }
  return out;
}

Json to_json(const Poset& p, const Envelope& e) {
  Json embedding = Json::object();
  for (Index i = 0; i < p.size(); ++i) embedding[p.label(i)] = e.lattice.label(e.embedding[i]);
  return {{"lattice", to_json(e.lattice)}, {"embedding", embedding}};
}

Json to_json(const Claim& c) {
  Json out = {{"claim", c.describe()}, {"expected", c.expected}};
  switch (c.kind) {
    case Claim::Kind::Representable:
      out["kind"] = "representable";
      out["signature"] = signature_json(c.signature);
      break;
    case Claim::Kind::Lmd: out["kind"] = "lmd"; break;
    case Claim::Kind::D2bar: out["kind"] = "d2bar"; break;
    case Claim::Kind::CompletelyRepresentable: out["kind"] = "completely_representable"; break;
    case Claim::Kind::ExtensionFails:
      out["kind"] = "extension_fails";
      out["seed"] = c.seed;
      out["forbidden"] = c.forbidden;
      break;
  }
  return out;
}

std::string emit_json(const Json& j) { return j.dump(2) + "\n"; }

namespace {

void flatten(const Json& j, const std::string& path, std::ostringstream& out) {
  auto scalar_array = [](const Json& a) {
    for (const auto& x : a) {
      if (x.is_structured()) return false;
    }
    return true;
  };
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, path.empty() ? k : path + "." + k, out);
  } else if (j.is_array() && !scalar_array(j)) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "[" + std::to_string(i) + "]", out);
  } else {
    out << path << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

}  // namespace

std::string emit_text(const Json& j) {
  std::ostringstream out;
  flatten(j, "", out);
  return out.str();
}

}  // namespace posrep
