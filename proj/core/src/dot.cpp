#include "ruledmmp/dot.hpp"

#include <sstream>

namespace ruledmmp {

namespace {

void render_state(std::ostringstream& out, const ContractionState& state, std::int64_t index) {
  for (const LiveFiber& f : state.fibers) {
    out << "graph \"" << f.label << "_s" << index << "\" {\n";
    for (const LiveComponent& c : f.components) {
      out << "  \"" << c.id << "\" [label=\"" << c.id << " ["
          << intersect(c.cls, c.cls, state.base.ctx) << "," << c.mult << "]\"";
      if (c.in_dv) out << ", peripheries=2";
      out << "];\n";
    }
    // Component-component contacts, one edge per point.
    for (const LivePoint& p : f.points) {
      for (const auto& [key, mult] : p.pair_mults) {
        if (!f.find(key.first) || !f.find(key.second)) continue;
        out << "  \"" << key.first << "\" -- \"" << key.second << "\" [label=\"" << mult
            << "\"];\n";
      }
    }
    // Horizontal incidences as diamond marks.
    for (const LivePoint& p : f.points) {
      std::string tag;
      for (const LiveHorizontal& h : state.horizontals) {
        auto it = p.branches.find(h.id);
        if (it == p.branches.end()) continue;
        if (!tag.empty()) tag += ",";
        tag += h.id;
        if (it->second > 1) tag += "(" + std::to_string(it->second) + ")";
      }
      if (tag.empty()) continue;
      out << "  \"" << p.id << "\" [label=\"" << p.id << ":" << tag << "\", shape=diamond];\n";
      for (const LiveComponent& c : f.components) {
        std::int64_t m = 0;
        for (const LiveHorizontal& h : state.horizontals) {
          if (!p.has_curve(h.id)) continue;
          m += p.pair_mult(h.id, c.id);
        }
        if (m > 0)
          out << "  \"" << p.id << "\" -- \"" << c.id << "\" [label=\"" << m << "\"];\n";
      }
    }
    out << "}\n";
  }
}

}  // namespace

std::string export_dot(const SurfacePair& sp) { return export_dot(sp, {}); }

std::string export_dot(const SurfacePair& sp, const std::vector<ContractionStep>& steps) {
  std::ostringstream out;
  out << "// ruledmmp fiber dual graphs\n";
  if (sp.fibers.empty()) {
    out << "// no recorded fibers\n";
    return out.str();
  }
  ContractionState state = initial_state(sp);
  render_state(out, state, 0);
  for (std::size_t i = 0; i < steps.size(); ++i) {
    auto [fiber, comp] = state.find_component(steps[i].component_id);
    if (!fiber || !(comp->cls == steps[i].contracted_class))
      fail(errc::plan_mismatch,
           "step " + std::to_string(i) + " does not replay against the instance");
    state = contract(state, steps[i].component_id, steps[i].stage, steps[i].rationale).first;
    render_state(out, state, static_cast<std::int64_t>(i) + 1);
  }
  return out.str();
}

}  // namespace ruledmmp
