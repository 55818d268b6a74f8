#include "ruledmmp/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace ruledmmp {

namespace {

using nlohmann::json;

json class_to_json(const DivisorClass& cls) {
  json arr = json::array();
  arr.push_back(cls.c0());
  arr.push_back(cls.f());
  for (std::size_t i = 0; i < cls.num_e(); ++i) arr.push_back(cls.e(i));
  return arr;
}

DivisorClass class_from_json(const json& arr) {
  if (!arr.is_array() || arr.size() < 2)
    fail(errc::parse_error, "a class must be an integer array [c0, f, e1, ...]");
  std::vector<std::int64_t> e;
  for (std::size_t i = 2; i < arr.size(); ++i) e.push_back(arr.at(i).get<std::int64_t>());
  return DivisorClass(arr.at(0).get<std::int64_t>(), arr.at(1).get<std::int64_t>(), std::move(e));
}

json instance_to_json(const SurfacePair& sp) {
  json doc;
  doc["genus"] = sp.ctx.genus;
  doc["e"] = sp.ctx.e_invariant;

  json horizontals = json::array();
  std::vector<HorizontalCurve> hs = sp.horizontals;
  std::sort(hs.begin(), hs.end(),
            [](const HorizontalCurve& a, const HorizontalCurve& b) { return id_less(a.id, b.id); });
  for (const HorizontalCurve& h : hs) {
    json jh;
    jh["id"] = h.id;
    jh["class"] = class_to_json(h.cls);
    std::vector<std::string> marks = h.marks;
    std::sort(marks.begin(), marks.end(), IdLess{});
    jh["marks"] = marks;
    horizontals.push_back(std::move(jh));
  }
  doc["horizontals"] = std::move(horizontals);

  json fibers = json::array();
  std::vector<FiberConfig> fs = sp.fibers;
  std::sort(fs.begin(), fs.end(),
            [](const FiberConfig& a, const FiberConfig& b) { return id_less(a.label, b.label); });
  for (const FiberConfig& f : fs) {
    json jf;
    jf["label"] = f.label;
    json comps = json::array();
    std::vector<FiberComponent> cs = f.components;
    std::sort(cs.begin(), cs.end(),
              [](const FiberComponent& a, const FiberComponent& b) { return id_less(a.id, b.id); });
    for (const FiberComponent& c : cs) {
      json jc;
      jc["id"] = c.id;
      jc["class"] = class_to_json(c.cls);
      jc["mult"] = c.mult;
      jc["in_dv"] = c.in_dv;
      comps.push_back(std::move(jc));
    }
    jf["components"] = std::move(comps);
    json points = json::array();
    std::vector<IncidencePoint> ps = f.points;
    std::sort(ps.begin(), ps.end(),
              [](const IncidencePoint& a, const IncidencePoint& b) { return id_less(a.id, b.id); });
    for (const IncidencePoint& p : ps) {
      json jp;
      jp["id"] = p.id;
      json branches = json::array();
      std::vector<std::pair<std::string, std::int64_t>> bs = p.branches;
      std::sort(bs.begin(), bs.end(),
                [](const auto& a, const auto& b) { return id_less(a.first, b.first); });
      for (const auto& [curve, mult] : bs) branches.push_back(json::array({curve, mult}));
      jp["branches"] = std::move(branches);
      points.push_back(std::move(jp));
    }
    jf["points"] = std::move(points);
    fibers.push_back(std::move(jf));
  }
  doc["fibers"] = std::move(fibers);

  std::vector<std::string> whole = sp.dv_whole_smooth_fibers;
  std::sort(whole.begin(), whole.end(), IdLess{});
  doc["dv_whole_smooth_fibers"] = whole;
  return doc;
}

SurfacePair instance_from_json(const json& doc) {
  SurfacePair sp;
  sp.ctx.genus = doc.at("genus").get<std::int64_t>();
  sp.ctx.e_invariant = doc.at("e").get<std::int64_t>();

  // The exceptional count is carried by the class arrays.
  std::int64_t width = -1;
  auto note_width = [&width](const json& arr) {
    auto w = static_cast<std::int64_t>(arr.size()) - 2;
    if (width == -1) width = w;
    if (width != w) fail(errc::parse_error, "class arrays of different lengths");
  };
  for (const json& h : doc.at("horizontals")) note_width(h.at("class"));
  for (const json& f : doc.at("fibers"))
    for (const json& c : f.at("components")) note_width(c.at("class"));
  if (width < 0) fail(errc::parse_error, "an instance needs at least one horizontal curve");
  sp.ctx.num_exceptionals = width;

  for (const json& jh : doc.at("horizontals")) {
    HorizontalCurve h;
    h.id = jh.at("id").get<std::string>();
    h.cls = class_from_json(jh.at("class"));
    for (const json& m : jh.at("marks")) h.marks.push_back(m.get<std::string>());
    h.genus = adjunction_genus(h.cls, sp.ctx);  // smooth on the start surface
    sp.horizontals.push_back(std::move(h));
  }
  for (const json& jf : doc.at("fibers")) {
    FiberConfig f;
    f.label = jf.at("label").get<std::string>();
    for (const json& jc : jf.at("components")) {
      FiberComponent c;
      c.id = jc.at("id").get<std::string>();
      c.cls = class_from_json(jc.at("class"));
      c.mult = jc.at("mult").get<std::int64_t>();
      c.in_dv = jc.at("in_dv").get<bool>();
      f.components.push_back(std::move(c));
    }
    for (const json& jp : jf.at("points")) {
      IncidencePoint p;
      p.id = jp.at("id").get<std::string>();
      for (const json& b : jp.at("branches")) {
        if (!b.is_array() || b.size() != 2) fail(errc::parse_error, "branch must be [curve, mult]");
        p.branches.emplace_back(b.at(0).get<std::string>(), b.at(1).get<std::int64_t>());
      }
      f.points.push_back(std::move(p));
    }
    sp.fibers.push_back(std::move(f));
  }
  for (const json& l : doc.at("dv_whole_smooth_fibers"))
    sp.dv_whole_smooth_fibers.push_back(l.get<std::string>());
  return sp;
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

json parse_text(const std::string& text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) fail(errc::parse_error, "malformed JSON");
  return doc;
}

json step_to_json(const ContractionStep& s) {
  json j;
  j["index"] = s.index;
  j["stage"] = s.stage;
  j["fiber"] = s.fiber_label;
  j["contracted_class"] = class_to_json(s.contracted_class);
  j["component_id"] = s.component_id;
  j["rationale"] = to_string(s.rationale);
  return j;
}

ContractionStep step_from_json(const json& j) {
  ContractionStep s;
  s.index = j.at("index").get<std::int64_t>();
  s.stage = j.at("stage").get<int>();
  s.fiber_label = j.at("fiber").get<std::string>();
  s.contracted_class = class_from_json(j.at("contracted_class"));
  s.component_id = j.at("component_id").get<std::string>();
  s.rationale = rationale_from_string(j.at("rationale").get<std::string>());
  return s;
}

}  // namespace

std::string serialize_instance(const SurfacePair& sp) { return dump(instance_to_json(sp)); }

SurfacePair parse_instance(const std::string& text) {
  try {
    return instance_from_json(parse_text(text));
  } catch (const json::exception& e) {
    fail(errc::parse_error, e.what());
  }
}

std::string serialize_trace(const SurfacePair& sp, const GoodModelPlan& plan) {
  json doc;
  doc["instance"] = instance_to_json(sp);
  json steps = json::array();
  for (const ContractionStep& s : plan.steps) steps.push_back(step_to_json(s));
  doc["steps"] = std::move(steps);
  doc["k1"] = plan.k1;
  doc["k2"] = plan.k2;
  doc["m"] = plan.m;
  doc["gamma"] = plan.gamma_value;
  doc["e_prime"] = class_to_json(plan.e_prime);
  return dump(doc);
}

TraceData parse_trace(const std::string& text) {
  try {
    json doc = parse_text(text);
    TraceData t;
    t.instance = instance_from_json(doc.at("instance"));
    for (const json& s : doc.at("steps")) t.steps.push_back(step_from_json(s));
    t.k1 = doc.at("k1").get<std::int64_t>();
    t.k2 = doc.at("k2").get<std::int64_t>();
    t.m = doc.at("m").get<std::int64_t>();
    t.gamma_value = doc.at("gamma").get<std::int64_t>();
    t.e_prime = class_from_json(doc.at("e_prime"));
    return t;
  } catch (const json::exception& e) {
    fail(errc::parse_error, e.what());
  }
}

std::string serialize_state(const ContractionState& state) {
  json doc;
  doc["step_count"] = state.step_count;
  doc["canonical"] = class_to_json(state.canonical);

  json contracted = json::array();
  for (const ContractedCurve& c : state.contracted)
    contracted.push_back(json::object(
        {{"class", class_to_json(c.cls)}, {"component_id", c.component_id}, {"fiber", c.fiber_label}}));
  doc["contracted"] = std::move(contracted);

  json horizontals = json::array();
  for (const LiveHorizontal& h : state.horizontals)
    horizontals.push_back(json::object({{"class", class_to_json(h.cls)}, {"id", h.id}}));
  doc["horizontals"] = std::move(horizontals);

  json fibers = json::array();
  for (const LiveFiber& f : state.fibers) {
    json jf;
    jf["label"] = f.label;
    json comps = json::array();
    for (const LiveComponent& c : f.components)
      comps.push_back(json::object({{"class", class_to_json(c.cls)},
                                    {"id", c.id},
                                    {"in_dv", c.in_dv},
                                    {"mult", c.mult}}));
    jf["components"] = std::move(comps);
    json points = json::array();
    for (const LivePoint& p : f.points) {
      json jp;
      jp["id"] = p.id;
      json branches = json::array();
      for (const auto& [curve, count] : p.branches)
        branches.push_back(json::array({curve, count}));
      jp["branches"] = std::move(branches);
      json pairs = json::array();
      for (const auto& [key, mult] : p.pair_mults)
        pairs.push_back(json::array({key.first, key.second, mult}));
      jp["pair_mults"] = std::move(pairs);
      points.push_back(std::move(jp));
    }
    jf["points"] = std::move(points);
    fibers.push_back(std::move(jf));
  }
  doc["fibers"] = std::move(fibers);

  json singular = json::array();
  for (const auto& s : state.singular_image_points)
    singular.push_back(json::array({s.horizontal_id, s.point_id, s.step}));
  doc["singular_image_points"] = std::move(singular);
  return dump(doc);
}

bool looks_like_trace(const std::string& text) {
  json doc = json::parse(text, nullptr, false);
  return doc.is_object() && doc.contains("steps") && doc.contains("instance");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(errc::io_error, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) fail(errc::io_error, "read error on " + path);
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(errc::io_error, "cannot write " + path);
  out << content;
  out.flush();
  if (!out) fail(errc::io_error, "write error on " + path);
}

}  // namespace ruledmmp
