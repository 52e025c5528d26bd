#include <sstream>
#include <stdexcept>

#include "diagc/render.hpp"
#include <nlohmann/json.hpp>

namespace diagc {

using json = nlohmann::ordered_json;

namespace {

json point(Point p) { return json::array({p.x, p.y}); }

Point get_point(const json& j) {
  if (!j.is_array() || j.size() != 2) throw std::runtime_error("expected [x,y]");
  return {j[0].get<Length>(), j[1].get<Length>()};
}

json object(const std::optional<std::string>& s) { return s ? json(*s) : json(nullptr); }

std::optional<std::string> get_object(const json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<std::string>();
}

}  // namespace

std::string emit_ir(const DiagramIR& ir) {
  std::ostringstream out;
  const ScaleConfig& s = ir.scale;
  json head;
  head["diagc_ir"] = 1;
  head["scale"] = s.scale.str();
  head["em_size"] = s.em_size.str();
  head["ex_ratio"] = s.ex_ratio.str();
  head["label_scale"] = s.label_scale.str();
  head["object_margin"] = s.object_margin;
  head["canvas_margin"] = s.canvas_margin;
  head["nodes"] = ir.nodes.size();
  head["arrows"] = ir.arrows.size();
  out << head.dump(-1, ' ', false) << '\n';

  for (const Node& n : ir.nodes) {
    json j;
    j["node"] = n.id;
    j["at"] = point(n.anchor);
    j["text"] = n.text;
    j["align"] = n.align ? std::string(1, n.align) : std::string();
    j["group"] = n.group;
    j["placed"] = n.placed;
    out << j.dump(-1, ' ', false) << '\n';
  }
  for (const Arrow& a : ir.arrows) {
    json j;
    j["arrow"] = std::string(to_string(a.kind));
    j["from"] = point(a.from);
    j["to"] = point(a.to);
    j["style"] = a.style;
    j["from_object"] = object(a.from_object);
    j["to_object"] = object(a.to_object);
    json labels = json::array();
    for (const auto& l : a.labels) labels.push_back(json{{"text", l.text}, {"side", std::string(to_string(l.side))}});
    j["labels"] = labels;
    j["offset_tenths_pt"] = a.offset_tenths_pt;
    j["local_scale"] = a.local_scale.str();
    j["group"] = a.group;
    out << j.dump(-1, ' ', false) << '\n';
  }
  return out.str();
}

DiagramIR parse_ir(std::string_view text) {
  DiagramIR ir;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  bool have_head = false;
  std::size_t want_nodes = 0, want_arrows = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      json j = json::parse(line);
      if (!have_head) {
        if (!j.contains("diagc_ir")) throw std::runtime_error("missing header record");
        ScaleConfig& s = ir.scale;
        s.scale = Ratio::parse(j.at("scale").get<std::string>());
        s.em_size = Ratio::parse(j.at("em_size").get<std::string>());
        s.ex_ratio = Ratio::parse(j.at("ex_ratio").get<std::string>());
        s.label_scale = Ratio::parse(j.at("label_scale").get<std::string>());
        s.object_margin = j.at("object_margin").get<Length>();
        s.canvas_margin = j.at("canvas_margin").get<Length>();
        want_nodes = j.at("nodes").get<std::size_t>();
        want_arrows = j.at("arrows").get<std::size_t>();
        have_head = true;
      } else if (j.contains("node")) {
        Node n;
        n.id = j.at("node").get<int>();
        n.anchor = get_point(j.at("at"));
        n.text = j.at("text").get<std::string>();
        std::string align = j.at("align").get<std::string>();
        n.align = align.empty() ? 0 : align[0];
        n.group = j.at("group").get<int>();
        n.placed = j.at("placed").get<bool>();
        ir.nodes.push_back(std::move(n));
      } else if (j.contains("arrow")) {
        Arrow a;
        auto kind = arrow_kind_from_string(j.at("arrow").get<std::string>());
        if (!kind) throw std::runtime_error("unknown arrow kind");
        a.kind = *kind;
        a.from = get_point(j.at("from"));
        a.to = get_point(j.at("to"));
        a.style = j.at("style").get<std::string>();
        a.from_object = get_object(j.at("from_object"));
        a.to_object = get_object(j.at("to_object"));
        for (const auto& l : j.at("labels")) {
          auto side = label_side_from_string(l.at("side").get<std::string>());
          if (!side) throw std::runtime_error("unknown label side");
          a.labels.push_back({l.at("text").get<std::string>(), *side});
        }
        a.offset_tenths_pt = j.at("offset_tenths_pt").get<int>();
        a.local_scale = Ratio::parse(j.at("local_scale").get<std::string>());
        a.group = j.at("group").get<int>();
        ir.arrows.push_back(std::move(a));
      } else {
        throw std::runtime_error("unrecognized record");
      }
    } catch (const std::exception& e) {
      throw std::runtime_error("IR line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (!have_head) throw std::runtime_error("IR: empty input");
  if (ir.nodes.size() != want_nodes || ir.arrows.size() != want_arrows)
    throw std::runtime_error("IR: record count does not match header");
  return ir;
}

}  // namespace diagc
