#include "daggerkit/manifest.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <json.hpp>

namespace daggerkit {

using nlohmann::json;
using ordered = nlohmann::ordered_json;

namespace {

[[noreturn]] void schema_error(const std::string& path, const std::string& what) {
  throw ParseError("manifest schema: " + path + ": " + what);
}

void require_keys(const json& j, const std::string& path,
                  const std::set<std::string>& required,
                  const std::set<std::string>& optional = {}) {
  if (!j.is_object()) schema_error(path, "expected an object");
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (!required.count(key) && !optional.count(key)) {
      schema_error(path, "unknown field '" + key + "'");
    }
  }
  for (const auto& key : required) {
    if (!j.contains(key)) schema_error(path, "missing field '" + key + "'");
  }
}

std::string get_string(const json& j, const std::string& path) {
  if (!j.is_string()) schema_error(path, "expected a string");
  return j.get<std::string>();
}

int get_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) schema_error(path, "expected an integer");
  return j.get<int>();
}

std::map<std::string, std::string> get_string_map(const json& j,
                                                  const std::string& path) {
  if (!j.is_object()) schema_error(path, "expected an object of strings");
  std::map<std::string, std::string> out;
  for (const auto& [key, value] : j.items()) {
    out[key] = get_string(value, path + "." + key);
  }
  return out;
}

std::map<std::pair<std::string, std::string>, std::string> get_pair_table(
    const json& j, const std::string& path) {
  if (!j.is_array()) schema_error(path, "expected an array of [g, f, g∘f] triples");
  std::map<std::pair<std::string, std::string>, std::string> out;
  for (size_t i = 0; i < j.size(); ++i) {
    const json& e = j[i];
    const std::string at = path + "[" + std::to_string(i) + "]";
    if (!e.is_array() || e.size() != 3) schema_error(at, "expected a triple");
    out[{get_string(e[0], at), get_string(e[1], at)}] = get_string(e[2], at);
  }
  return out;
}

FinCategory parse_category_payload(const json& j, const std::string& path) {
  require_keys(j, path, {"objects", "morphisms", "identities", "compose"});
  FinCategory c;
  if (!j["objects"].is_array()) schema_error(path + ".objects", "expected an array");
  for (const auto& o : j["objects"]) c.objects.push_back(get_string(o, path + ".objects"));
  if (!j["morphisms"].is_array()) schema_error(path + ".morphisms", "expected an array");
  std::set<std::string> objset(c.objects.begin(), c.objects.end());
  for (size_t i = 0; i < j["morphisms"].size(); ++i) {
    const json& e = j["morphisms"][i];
    const std::string at = path + ".morphisms[" + std::to_string(i) + "]";
    require_keys(e, at, {"id", "src", "tgt"});
    Morphism m{get_string(e["id"], at), get_string(e["src"], at),
               get_string(e["tgt"], at)};
    if (!objset.count(m.src)) schema_error(at, "unknown object '" + m.src + "'");
    if (!objset.count(m.tgt)) schema_error(at, "unknown object '" + m.tgt + "'");
    c.morphisms.push_back(std::move(m));
  }
  c.identities = get_string_map(j["identities"], path + ".identities");
  c.compose = get_pair_table(j["compose"], path + ".compose");
  return c;
}

Fin2Category parse_two_category_payload(const json& j, const std::string& path) {
  require_keys(j, path,
               {"objects", "one_morphisms", "one_identities", "one_compose",
                "two_morphisms", "two_identities", "vertical", "horizontal"});
  Fin2Category b;
  for (const auto& o : j["objects"]) b.objects.push_back(get_string(o, path + ".objects"));
  for (size_t i = 0; i < j["one_morphisms"].size(); ++i) {
    const json& e = j["one_morphisms"][i];
    const std::string at = path + ".one_morphisms[" + std::to_string(i) + "]";
    require_keys(e, at, {"id", "src", "tgt"});
    b.one_morphisms.push_back({get_string(e["id"], at), get_string(e["src"], at),
                               get_string(e["tgt"], at)});
  }
  b.one_identities = get_string_map(j["one_identities"], path + ".one_identities");
  b.one_compose = get_pair_table(j["one_compose"], path + ".one_compose");
  for (size_t i = 0; i < j["two_morphisms"].size(); ++i) {
    const json& e = j["two_morphisms"][i];
    const std::string at = path + ".two_morphisms[" + std::to_string(i) + "]";
    require_keys(e, at, {"id", "src", "tgt"});
    b.two_morphisms.push_back({get_string(e["id"], at), get_string(e["src"], at),
                               get_string(e["tgt"], at)});
  }
  b.two_identities = get_string_map(j["two_identities"], path + ".two_identities");
  b.vertical = get_pair_table(j["vertical"], path + ".vertical");
  b.horizontal = get_pair_table(j["horizontal"], path + ".horizontal");
  return b;
}

AntiInvolutive parse_anti_payload(const json& j, const std::string& path) {
  require_keys(j, path, {"category", "d_obj", "d_mor", "eta"});
  CatPtr base = make_category(parse_category_payload(j["category"], path + ".category"));
  FinFunctor D;
  D.source = base;
  D.target = base;
  D.contravariant = true;
  D.obj_map = get_string_map(j["d_obj"], path + ".d_obj");
  D.mor_map = get_string_map(j["d_mor"], path + ".d_mor");
  return make_anti_involutive(base, std::move(D),
                              get_string_map(j["eta"], path + ".eta"));
}

FlaggedDagger parse_flagged_payload(const json& j, const std::string& path) {
  require_keys(j, path, {"anti", "c0", "flag_obj", "flag_mor"}, {"coflagged"});
  FlaggedDagger f;
  f.anti = parse_anti_payload(j["anti"], path + ".anti");
  f.c0 = parse_category_payload(j["c0"], path + ".c0");
  if (!j["flag_obj"].is_object()) schema_error(path + ".flag_obj", "expected an object");
  for (const auto& [key, value] : j["flag_obj"].items()) {
    const std::string at = path + ".flag_obj." + key;
    require_keys(value, at, {"obj", "h"});
    f.flag_obj[key] = {get_string(value["obj"], at), get_string(value["h"], at)};
  }
  f.flag_mor = get_string_map(j["flag_mor"], path + ".flag_mor");
  if (j.contains("coflagged")) {
    if (!j["coflagged"].is_boolean()) schema_error(path + ".coflagged", "expected a boolean");
    f.coflagged = j["coflagged"].get<bool>();
  }
  return f;
}

GroupTable named_group(const std::string& name) {
  if (name == "s3") return symmetric_group_3();
  if (name == "klein") return klein_four();
  if (name.size() == 2 && name[0] == 'z' && name[1] >= '1' && name[1] <= '6') {
    return cyclic_group(name[1] - '0');
  }
  throw ParseError("manifest schema: unknown group name '" + name + "'");
}

BuilderSpec parse_builder_payload(const json& j, const std::string& path) {
  BuilderSpec b;
  b.name = get_string(j.at("builder"), path + ".builder");
  if (b.name == "mat") {
    require_keys(j, path, {"kind", "builder", "q", "dmax"});
    b.q = get_int(j["q"], path + ".q");
    b.dmax = get_int(j["dmax"], path + ".dmax");
  } else if (b.name == "rel") {
    require_keys(j, path, {"kind", "builder", "nmax"});
    b.nmax = get_int(j["nmax"], path + ".nmax");
  } else if (b.name == "group" || b.name == "graded-lines") {
    std::set<std::string> req = {"kind", "builder", "group"};
    if (b.name == "graded-lines") req.insert("m");
    require_keys(j, path, req);
    if (j["group"].is_string()) {
      b.group_name = j["group"].get<std::string>();
      b.group = named_group(b.group_name);
    } else {
      const std::string at = path + ".group";
      require_keys(j["group"], at, {"elements", "table"});
      GroupTable g;
      for (const auto& e : j["group"]["elements"]) {
        g.elements.push_back(get_string(e, at + ".elements"));
      }
      for (const auto& row : j["group"]["table"]) {
        std::vector<int> r;
        for (const auto& v : row) r.push_back(get_int(v, at + ".table"));
        g.mult.push_back(std::move(r));
      }
      b.group = std::move(g);
    }
    if (b.name == "graded-lines") b.m = get_int(j["m"], path + ".m");
  } else {
    schema_error(path + ".builder", "unknown builder '" + b.name + "'");
  }
  return b;
}

std::map<std::string, std::string> sub_map(const json& j, const std::string& key,
                                           const std::string& path) {
  return get_string_map(j.at(key), path + "." + key);
}

CoherentDagger2Input parse_coherent_payload(const json& j, const std::string& path) {
  require_keys(j, path,
               {"two_category", "psi1_on0", "psi1_on1", "psi1_on2", "psi2_on0",
                "psi2_on1", "psi2_on2", "h1", "h2", "hf"});
  CoherentDagger2Input c;
  c.base = make_2category(
      parse_two_category_payload(j["two_category"], path + ".two_category"));
  c.psi1_on0 = sub_map(j, "psi1_on0", path);
  c.psi1_on1 = sub_map(j, "psi1_on1", path);
  c.psi1_on2 = sub_map(j, "psi1_on2", path);
  c.psi2_on0 = sub_map(j, "psi2_on0", path);
  c.psi2_on1 = sub_map(j, "psi2_on1", path);
  c.psi2_on2 = sub_map(j, "psi2_on2", path);
  c.h1 = sub_map(j, "h1", path);
  c.h2 = sub_map(j, "h2", path);
  c.hf = sub_map(j, "hf", path);
  return c;
}

Pivotal parse_pivotal_payload(const json& j, const std::string& path) {
  require_keys(j, path, {"two_category", "adjunctions", "theta", "tau"});
  Pivotal p;
  p.base = make_2category(
      parse_two_category_payload(j["two_category"], path + ".two_category"));
  if (!j["adjunctions"].is_object()) {
    schema_error(path + ".adjunctions", "expected an object");
  }
  for (const auto& [key, value] : j["adjunctions"].items()) {
    const std::string at = path + ".adjunctions." + key;
    require_keys(value, at, {"right", "unit", "counit"});
    p.adjoint_choice[key] = {key, get_string(value["right"], at),
                             get_string(value["unit"], at),
                             get_string(value["counit"], at)};
  }
  p.theta = sub_map(j, "theta", path);
  p.tau = sub_map(j, "tau", path);
  return p;
}

// ---- serialization ----

ordered category_to_json(const FinCategory& c) {
  ordered j;
  j["objects"] = c.objects;
  ordered mors = ordered::array();
  for (const auto& m : c.morphisms) {
    ordered e;
    e["id"] = m.id;
    e["src"] = m.src;
    e["tgt"] = m.tgt;
    mors.push_back(std::move(e));
  }
  j["morphisms"] = std::move(mors);
  ordered ids = ordered::object();
  for (const auto& [k, v] : c.identities) ids[k] = v;
  j["identities"] = std::move(ids);
  ordered comp = ordered::array();
  for (const auto& [pair, val] : c.compose) {
    comp.push_back(ordered::array({pair.first, pair.second, val}));
  }
  j["compose"] = std::move(comp);
  return j;
}

ordered two_category_to_json(const Fin2Category& b) {
  ordered j;
  j["objects"] = b.objects;
  ordered ones = ordered::array();
  for (const auto& m : b.one_morphisms) {
    ordered e;
    e["id"] = m.id;
    e["src"] = m.src;
    e["tgt"] = m.tgt;
    ones.push_back(std::move(e));
  }
  j["one_morphisms"] = std::move(ones);
  ordered oid = ordered::object();
  for (const auto& [k, v] : b.one_identities) oid[k] = v;
  j["one_identities"] = std::move(oid);
  ordered ocomp = ordered::array();
  for (const auto& [pair, val] : b.one_compose) {
    ocomp.push_back(ordered::array({pair.first, pair.second, val}));
  }
  j["one_compose"] = std::move(ocomp);
  ordered twos = ordered::array();
  for (const auto& m : b.two_morphisms) {
    ordered e;
    e["id"] = m.id;
    e["src"] = m.src;
    e["tgt"] = m.tgt;
    twos.push_back(std::move(e));
  }
  j["two_morphisms"] = std::move(twos);
  ordered tid = ordered::object();
  for (const auto& [k, v] : b.two_identities) tid[k] = v;
  j["two_identities"] = std::move(tid);
  ordered vert = ordered::array();
  for (const auto& [pair, val] : b.vertical) {
    vert.push_back(ordered::array({pair.first, pair.second, val}));
  }
  j["vertical"] = std::move(vert);
  ordered horiz = ordered::array();
  for (const auto& [pair, val] : b.horizontal) {
    horiz.push_back(ordered::array({pair.first, pair.second, val}));
  }
  j["horizontal"] = std::move(horiz);
  return j;
}

ordered string_map_to_json(const std::map<std::string, std::string>& m) {
  ordered j = ordered::object();
  for (const auto& [k, v] : m) j[k] = v;
  return j;
}

ordered anti_to_json(const AntiInvolutive& a) {
  ordered j;
  j["category"] = category_to_json(*a.base);
  j["d_obj"] = string_map_to_json(a.D.obj_map);
  j["d_mor"] = string_map_to_json(a.D.mor_map);
  j["eta"] = string_map_to_json(a.eta.components);
  return j;
}

ordered flagged_to_json(const FlaggedDagger& f) {
  ordered j;
  j["anti"] = anti_to_json(f.anti);
  j["c0"] = category_to_json(f.c0);
  ordered fo = ordered::object();
  for (const auto& [k, p] : f.flag_obj) {
    ordered e;
    e["obj"] = p.obj;
    e["h"] = p.h;
    fo[k] = std::move(e);
  }
  j["flag_obj"] = std::move(fo);
  j["flag_mor"] = string_map_to_json(f.flag_mor);
  if (f.coflagged) j["coflagged"] = true;
  return j;
}

ordered manifest_to_json(const Manifest& m) {
  ordered j;
  j["kind"] = manifest_kind_name(m.kind);
  switch (m.kind) {
    case ManifestKind::Category: {
      ordered c = category_to_json(*m.category);
      for (auto& [k, v] : c.items()) j[k] = std::move(v);
      break;
    }
    case ManifestKind::DaggerCategory: {
      j["category"] = category_to_json(*m.dagger->base);
      j["dagger"] = string_map_to_json(m.dagger->dag);
      break;
    }
    case ManifestKind::AntiInvolutive: {
      ordered a = anti_to_json(*m.anti);
      for (auto& [k, v] : a.items()) j[k] = std::move(v);
      break;
    }
    case ManifestKind::FlaggedDagger: {
      ordered f = flagged_to_json(*m.flagged);
      for (auto& [k, v] : f.items()) j[k] = std::move(v);
      break;
    }
    case ManifestKind::TwoCategory: {
      ordered b = two_category_to_json(*m.two_category);
      for (auto& [k, v] : b.items()) j[k] = std::move(v);
      break;
    }
    case ManifestKind::BiInvolutive: {
      j["two_category"] = two_category_to_json(*m.bi->base);
      j["dag2"] = string_map_to_json(m.bi->dag2);
      j["dag1_on1"] = string_map_to_json(m.bi->dag1_on1);
      j["dag1_on2"] = string_map_to_json(m.bi->dag1_on2);
      j["phi"] = string_map_to_json(m.bi->phi);
      break;
    }
    case ManifestKind::CoherentDagger2: {
      j["two_category"] = two_category_to_json(*m.coherent->base);
      j["psi1_on0"] = string_map_to_json(m.coherent->psi1_on0);
      j["psi1_on1"] = string_map_to_json(m.coherent->psi1_on1);
      j["psi1_on2"] = string_map_to_json(m.coherent->psi1_on2);
      j["psi2_on0"] = string_map_to_json(m.coherent->psi2_on0);
      j["psi2_on1"] = string_map_to_json(m.coherent->psi2_on1);
      j["psi2_on2"] = string_map_to_json(m.coherent->psi2_on2);
      j["h1"] = string_map_to_json(m.coherent->h1);
      j["h2"] = string_map_to_json(m.coherent->h2);
      j["hf"] = string_map_to_json(m.coherent->hf);
      break;
    }
    case ManifestKind::Pivotal: {
      j["two_category"] = two_category_to_json(*m.pivotal->base);
      ordered adj = ordered::object();
      for (const auto& [f, a] : m.pivotal->adjoint_choice) {
        ordered e;
        e["right"] = a.fR;
        e["unit"] = a.etaR;
        e["counit"] = a.epsR;
        adj[f] = std::move(e);
      }
      j["adjunctions"] = std::move(adj);
      j["theta"] = string_map_to_json(m.pivotal->theta);
      j["tau"] = string_map_to_json(m.pivotal->tau);
      break;
    }
    case ManifestKind::Builder: {
      const BuilderSpec& b = *m.builder;
      j["builder"] = b.name;
      if (b.name == "mat") {
        j["q"] = b.q;
        j["dmax"] = b.dmax;
      } else if (b.name == "rel") {
        j["nmax"] = b.nmax;
      } else {
        if (!b.group_name.empty()) {
          j["group"] = b.group_name;
        } else {
          ordered g;
          g["elements"] = b.group->elements;
          g["table"] = b.group->mult;
          j["group"] = std::move(g);
        }
        if (b.name == "graded-lines") j["m"] = b.m;
      }
      break;
    }
  }
  return j;
}

}  // namespace

const char* manifest_kind_name(ManifestKind k) {
  switch (k) {
    case ManifestKind::Category: return "category";
    case ManifestKind::DaggerCategory: return "dagger-category";
    case ManifestKind::AntiInvolutive: return "anti-involutive";
    case ManifestKind::FlaggedDagger: return "flagged-dagger";
    case ManifestKind::TwoCategory: return "two-category";
    case ManifestKind::BiInvolutive: return "bi-involutive";
    case ManifestKind::CoherentDagger2: return "coherent-dagger-2";
    case ManifestKind::Pivotal: return "pivotal";
    case ManifestKind::Builder: return "builder";
  }
  return "unknown";
}

Manifest parse_manifest(const std::string& bytes) {
  json j;
  try {
    j = json::parse(bytes);
  } catch (const json::parse_error& e) {
    // Recover 1-based line/column from the byte offset.
    size_t pos = std::min(e.byte, bytes.size());
    int line = 1, col = 1;
    for (size_t i = 0; i < pos; ++i) {
      if (bytes[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError("manifest is not valid JSON: " + std::string(e.what()), line, col);
  }

  if (!j.is_object() || !j.contains("kind")) {
    throw ParseError("manifest schema: top level must be an object with a 'kind'");
  }
  const std::string kind = get_string(j["kind"], "kind");
  Manifest m;
  if (kind == "category") {
    m.kind = ManifestKind::Category;
    require_keys(j, "$", {"kind", "objects", "morphisms", "identities", "compose"});
    json payload = j;
    payload.erase("kind");
    m.category = parse_category_payload(payload, "$");
  } else if (kind == "dagger-category") {
    m.kind = ManifestKind::DaggerCategory;
    require_keys(j, "$", {"kind", "category", "dagger"});
    StrictDagger d;
    d.base = make_category(parse_category_payload(j["category"], "$.category"));
    d.dag = get_string_map(j["dagger"], "$.dagger");
    m.dagger = std::move(d);
  } else if (kind == "anti-involutive") {
    m.kind = ManifestKind::AntiInvolutive;
    require_keys(j, "$", {"kind", "category", "d_obj", "d_mor", "eta"});
    json payload = j;
    payload.erase("kind");
    m.anti = parse_anti_payload(payload, "$");
  } else if (kind == "flagged-dagger") {
    m.kind = ManifestKind::FlaggedDagger;
    json payload = j;
    payload.erase("kind");
    m.flagged = parse_flagged_payload(payload, "$");
  } else if (kind == "two-category") {
    m.kind = ManifestKind::TwoCategory;
    json payload = j;
    payload.erase("kind");
    m.two_category = parse_two_category_payload(payload, "$");
  } else if (kind == "bi-involutive") {
    m.kind = ManifestKind::BiInvolutive;
    require_keys(j, "$", {"kind", "two_category", "dag2", "dag1_on1", "dag1_on2", "phi"});
    BiInvolutive v;
    v.base = make_2category(parse_two_category_payload(j["two_category"], "$.two_category"));
    v.dag2 = get_string_map(j["dag2"], "$.dag2");
    v.dag1_on1 = get_string_map(j["dag1_on1"], "$.dag1_on1");
    v.dag1_on2 = get_string_map(j["dag1_on2"], "$.dag1_on2");
    v.phi = get_string_map(j["phi"], "$.phi");
    m.bi = std::move(v);
  } else if (kind == "coherent-dagger-2") {
    m.kind = ManifestKind::CoherentDagger2;
    json payload = j;
    payload.erase("kind");
    m.coherent = parse_coherent_payload(payload, "$");
  } else if (kind == "pivotal") {
    m.kind = ManifestKind::Pivotal;
    json payload = j;
    payload.erase("kind");
    m.pivotal = parse_pivotal_payload(payload, "$");
  } else if (kind == "builder") {
    m.kind = ManifestKind::Builder;
    m.builder = parse_builder_payload(j, "$");
  } else {
    throw ParseError("manifest schema: unknown kind '" + kind + "'");
  }
  return m;
}

std::string serialize_manifest(const Manifest& m) {
  return manifest_to_json(m).dump(2) + "\n";
}

namespace {

GroupTable builder_group(const BuilderSpec& b) {
  if (b.group) return *b.group;
  return named_group(b.group_name);
}

// Builders either yield a strict dagger or a bi-involutive 2-category.
Manifest run_builder(const BuilderSpec& b) {
  Manifest out;
  if (b.name == "mat") {
    out.kind = ManifestKind::DaggerCategory;
    out.dagger = build_mat_category(b.q, b.dmax);
  } else if (b.name == "rel") {
    out.kind = ManifestKind::DaggerCategory;
    out.dagger = build_rel_category(b.nmax);
  } else if (b.name == "group") {
    out.kind = ManifestKind::DaggerCategory;
    out.dagger = build_inverse_dagger_groupoid(builder_group(b));
  } else if (b.name == "graded-lines") {
    out.kind = ManifestKind::BiInvolutive;
    out.bi = build_graded_lines_2cat(builder_group(b), b.m);
  } else {
    throw UsageError("unknown builder '" + b.name + "'");
  }
  return out;
}

std::string jstr(const std::string& s) { return ordered(s).dump(); }

void push_counts(Report& rep, const Manifest& m) {
  switch (m.kind) {
    case ManifestKind::Category:
      rep.data.emplace_back("objects", std::to_string(m.category->objects.size()));
      rep.data.emplace_back("morphisms", std::to_string(m.category->morphisms.size()));
      break;
    case ManifestKind::DaggerCategory:
      rep.data.emplace_back("objects", std::to_string(m.dagger->base->objects.size()));
      rep.data.emplace_back("morphisms", std::to_string(m.dagger->base->morphisms.size()));
      break;
    case ManifestKind::TwoCategory:
      rep.data.emplace_back("objects", std::to_string(m.two_category->objects.size()));
      rep.data.emplace_back("one_morphisms", std::to_string(m.two_category->one_morphisms.size()));
      rep.data.emplace_back("two_morphisms", std::to_string(m.two_category->two_morphisms.size()));
      break;
    case ManifestKind::BiInvolutive:
      rep.data.emplace_back("objects", std::to_string(m.bi->base->objects.size()));
      rep.data.emplace_back("one_morphisms", std::to_string(m.bi->base->one_morphisms.size()));
      rep.data.emplace_back("two_morphisms", std::to_string(m.bi->base->two_morphisms.size()));
      break;
    default:
      break;
  }
}

Report run_check(const Manifest& m) {
  Report rep;
  rep.command = "check";
  rep.kind = manifest_kind_name(m.kind);
  switch (m.kind) {
    case ManifestKind::Category:
      rep.validation = validate_category(*m.category);
      break;
    case ManifestKind::DaggerCategory:
      rep.validation = validate_category(*m.dagger->base);
      if (rep.validation.ok()) {
        rep.validation.merge(validate_strict_dagger(*m.dagger));
      }
      break;
    case ManifestKind::AntiInvolutive:
      rep.validation = validate_category(*m.anti->base);
      if (rep.validation.ok()) {
        rep.validation.merge(validate_anti_involutive(*m.anti));
      }
      break;
    case ManifestKind::FlaggedDagger:
      rep.validation = validate_category(*m.flagged->anti.base);
      if (rep.validation.ok()) {
        rep.validation.merge(validate_flagged_dagger(*m.flagged));
      }
      if (rep.validation.ok()) {
        rep.data.emplace_back("univalent", is_univalent(*m.flagged) ? "true" : "false");
      }
      break;
    case ManifestKind::TwoCategory:
      rep.validation = validate_2category(*m.two_category);
      break;
    case ManifestKind::BiInvolutive:
      rep.validation = validate_2category(*m.bi->base);
      if (rep.validation.ok()) {
        rep.validation.merge(validate_bi_involutive(*m.bi));
      }
      break;
    case ManifestKind::CoherentDagger2:
      rep.validation = validate_2category(*m.coherent->base);
      if (rep.validation.ok()) {
        rep.validation.merge(validate_coherent_input(*m.coherent));
      }
      break;
    case ManifestKind::Pivotal:
      rep.validation = validate_2category(*m.pivotal->base);
      if (rep.validation.ok()) {
        rep.validation.merge(validate_pivotal(*m.pivotal));
      }
      break;
    case ManifestKind::Builder: {
      Manifest built = run_builder(*m.builder);
      rep = run_check(built);
      rep.kind = "builder";
      break;
    }
  }
  rep.pass = rep.validation.ok();
  if (m.kind != ManifestKind::Builder) push_counts(rep, m);
  return rep;
}

StrictDagger dagger_of(const Manifest& m, const char* cmd) {
  if (m.kind == ManifestKind::DaggerCategory) return *m.dagger;
  if (m.kind == ManifestKind::Builder) {
    Manifest built = run_builder(*m.builder);
    if (built.kind == ManifestKind::DaggerCategory) return *built.dagger;
  }
  throw UsageError(std::string(cmd) + " needs a dagger-category manifest (or a builder producing one)");
}

AntiInvolutive anti_of(const Manifest& m, const char* cmd) {
  if (m.kind == ManifestKind::AntiInvolutive) return *m.anti;
  if (m.kind == ManifestKind::FlaggedDagger) return m.flagged->anti;
  if (m.kind == ManifestKind::DaggerCategory || m.kind == ManifestKind::Builder) {
    return anti_involutive_of(dagger_of(m, cmd));
  }
  throw UsageError(std::string(cmd) + " needs an anti-involutive manifest (or a dagger to induce one)");
}

Fin2Category two_cat_of(const Manifest& m, const char* cmd) {
  if (m.kind == ManifestKind::TwoCategory) return *m.two_category;
  if (m.kind == ManifestKind::BiInvolutive) return *m.bi->base;
  if (m.kind == ManifestKind::Builder) {
    Manifest built = run_builder(*m.builder);
    if (built.kind == ManifestKind::BiInvolutive) return *built.bi->base;
  }
  throw UsageError(std::string(cmd) + " needs a two-category manifest");
}

}  // namespace

Report run_command(const std::string& cmd, const Manifest& m,
                   const RunOptions& opts) {
  if (cmd == "check") return run_check(m);

  Report rep;
  rep.command = cmd;
  rep.kind = manifest_kind_name(m.kind);

  if (cmd == "unitaries") {
    StrictDagger d = dagger_of(m, "unitaries");
    auto us = unitaries(d);
    rep.data.emplace_back("count", std::to_string(us.size()));
    std::string list = "[";
    for (size_t i = 0; i < us.size(); ++i) {
      list += (i ? "," : "") + jstr(us[i]);
    }
    rep.data.emplace_back("unitaries", list + "]");
  } else if (cmd == "fixed-points") {
    AntiInvolutive a = anti_of(m, "fixed-points");
    FixedPointGroupoid fp = fixed_points(a);
    rep.data.emplace_back("points", std::to_string(fp.points.size()));
    rep.data.emplace_back("morphisms", std::to_string(fp.morphisms.size()));
    std::string list = "[";
    for (size_t i = 0; i < fp.points.size(); ++i) {
      int autos = 0;
      for (const auto& mm : fp.morphisms) {
        if (mm.from == static_cast<int>(i) && mm.to == static_cast<int>(i)) ++autos;
      }
      list += std::string(i ? "," : "") + "{\"obj\":" + jstr(fp.points[i].obj) +
              ",\"h\":" + jstr(fp.points[i].h) +
              ",\"automorphisms\":" + std::to_string(autos) + "}";
    }
    rep.data.emplace_back("point_list", list + "]");
  } else if (cmd == "coherentify") {
    StrictDagger d = dagger_of(m, "coherentify");
    Manifest art;
    art.kind = ManifestKind::FlaggedDagger;
    art.flagged = coherentify(d);
    rep.artifact = std::move(art);
  } else if (cmd == "strictify") {
    if (m.kind != ManifestKind::FlaggedDagger) {
      throw UsageError("strictify needs a flagged-dagger manifest");
    }
    Manifest art;
    art.kind = ManifestKind::DaggerCategory;
    art.dagger = strictify(*m.flagged);
    rep.artifact = std::move(art);
  } else if (cmd == "univalentize") {
    if (m.kind != ManifestKind::FlaggedDagger) {
      throw UsageError("univalentize needs a flagged-dagger manifest");
    }
    Manifest art;
    art.kind = ManifestKind::FlaggedDagger;
    art.flagged = univalentize(*m.flagged);
    rep.artifact = std::move(art);
  } else if (cmd == "complete") {
    AntiInvolutive a = anti_of(m, "complete");
    Manifest art;
    art.kind = ManifestKind::FlaggedDagger;
    art.flagged = hermitian_complete(a);
    rep.data.emplace_back(
        "excised",
        std::to_string(a.base->objects.size() - art.flagged->anti.base->objects.size()));
    rep.artifact = std::move(art);
  } else if (cmd == "adjoints") {
    Fin2Category b = two_cat_of(m, "adjoints");
    const long long per_morphism = static_cast<long long>(b.one_morphisms.size()) *
                                   b.two_morphisms.size() * b.two_morphisms.size();
    const long long search_space = per_morphism *
                                   static_cast<long long>(b.one_morphisms.size());
    if (search_space > opts.max_search) {
      throw SearchLimitError(
          "adjoints: candidate space " + std::to_string(search_space) +
          " exceeds the ceiling " + std::to_string(opts.max_search) +
          "; raise --max-search");
    }
    std::string list = "[";
    bool first = true;
    for (const auto& f : b.one_morphisms) {
      auto found = find_right_adjoints(b, f.id);
      list += std::string(first ? "" : ",") + "{\"f\":" + jstr(f.id) +
              ",\"found\":" + (found.empty() ? "false" : "true");
      if (!found.empty()) {
        list += ",\"right\":" + jstr(found.front().fR) +
                ",\"witnesses\":" + std::to_string(found.size());
      }
      list += "}";
      first = false;
    }
    rep.data.emplace_back("search_space", std::to_string(search_space));
    rep.data.emplace_back("adjoints", list + "]");
  } else if (cmd == "strictify-2") {
    if (m.kind != ManifestKind::CoherentDagger2) {
      throw UsageError("strictify-2 needs a coherent-dagger-2 manifest");
    }
    Manifest art;
    art.kind = ManifestKind::BiInvolutive;
    art.bi = strictify_bicategory(*m.coherent);
    rep.validation = validate_bi_involutive(*art.bi);
    rep.artifact = std::move(art);
  } else if (cmd == "check-pivotal") {
    if (m.kind != ManifestKind::Pivotal) {
      throw UsageError("check-pivotal needs a pivotal manifest");
    }
    rep.validation = validate_pivotal(*m.pivotal);
  } else {
    throw UsageError("unknown command '" + cmd + "'");
  }
  rep.pass = rep.validation.ok();
  return rep;
}

namespace {

struct CappedViolations {
  std::vector<const Violation*> shown;
  // (axiom class, elided count) sorted by class name
  std::vector<std::pair<std::string, int>> elided;
};

CappedViolations cap_violations(const ValidationReport& v, int cap = 20) {
  CappedViolations out;
  std::map<std::string, int> seen;
  std::map<std::string, int> over;
  for (const auto& viol : v.violations) {
    if (++seen[viol.axiom] <= cap) {
      out.shown.push_back(&viol);
    } else {
      ++over[viol.axiom];
    }
  }
  for (const auto& [axiom, count] : over) out.elided.emplace_back(axiom, count);
  return out;
}

}  // namespace

std::string emit_report(const Report& r, ReportFormat format) {
  CappedViolations capped = cap_violations(r.validation);

  if (format == ReportFormat::Machine) {
    ordered j;
    j["schema_version"] = 1;
    j["command"] = r.command;
    j["kind"] = r.kind;
    j["status"] = r.pass ? "pass" : "fail";
    ordered viols = ordered::array();
    for (const Violation* v : capped.shown) {
      ordered e;
      e["class"] = v->kind == ViolationKind::Structural ? "structural" : "axiom";
      e["axiom"] = v->axiom;
      e["witness"] = v->witness;
      viols.push_back(std::move(e));
    }
    j["violations"] = std::move(viols);
    ordered elided = ordered::array();
    for (const auto& [axiom, count] : capped.elided) {
      ordered e;
      e["axiom"] = axiom;
      e["elided"] = count;
      elided.push_back(std::move(e));
    }
    j["violations_elided"] = std::move(elided);
    j["notes"] = r.validation.notes;
    ordered data = ordered::object();
    for (const auto& [k, v] : r.data) {
      data[k] = ordered::parse(v, nullptr, false).is_discarded() ? ordered(v)
                                                                 : ordered::parse(v);
    }
    j["data"] = std::move(data);
    j["artifact"] = r.artifact ? manifest_to_json(*r.artifact) : ordered(nullptr);
    return j.dump(2) + "\n";
  }

  std::ostringstream out;
  out << "daggerkit " << r.command << " (" << r.kind << "): "
      << (r.pass ? "OK" : "FAIL") << "\n";
  for (const Violation* v : capped.shown) {
    out << "  [" << (v->kind == ViolationKind::Structural ? "structural" : "axiom")
        << "] " << v->axiom << ": " << v->witness << "\n";
  }
  for (const auto& [axiom, count] : capped.elided) {
    out << "  ... " << count << " more " << axiom << " witness(es) elided\n";
  }
  for (const auto& [k, v] : r.data) out << "  " << k << ": " << v << "\n";
  for (const auto& n : r.validation.notes) out << "  note: " << n << "\n";
  if (r.artifact) {
    out << "artifact:\n" << serialize_manifest(*r.artifact);
  }
  return out.str();
}

int report_exit_code(const Report& r) { return r.pass ? 0 : 1; }

}  // namespace daggerkit
