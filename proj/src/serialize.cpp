#include "figureqa/serialize.hpp"

#include <algorithm>
#include <string>

namespace figureqa {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw SchemaError(std::string("missing field '") + key + "'");
  return j.at(key);
}

template <typename T>
T get(const Json& j, const char* key) {
  try {
    return field(j, key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError(std::string("field '") + key + "': " + e.what());
  }
}

std::string_view legend_side_name(LegendSide s) {
  switch (s) {
    case LegendSide::Inside: return "inside";
    case LegendSide::Right: return "right";
    case LegendSide::Below: return "below";
  }
  return "?";
}

}  // namespace

Json color_to_json(const ColorEntry& c) {
  return Json{{"id", c.id}, {"name", c.name}, {"rgb", {c.rgb.r, c.rgb.g, c.rgb.b}}};
}

Json color_to_json(std::span<const ColorEntry> colors, int id) {
  const auto it = std::find_if(colors.begin(), colors.end(), [&](const auto& e) { return e.id == id; });
  if (it == colors.end()) throw SchemaError("unknown color id " + std::to_string(id));
  return color_to_json(*it);
}

Json spec_to_json(const FigureSpec& spec, std::span<const ColorEntry> colors) {
  Json series = Json::array();
  for (const auto& s : spec.series) {
    Json js{{"color", color_to_json(colors, s.color_id)}, {"x", s.x}, {"y", s.y}};
    if (s.shape) js["shape"] = to_string(*s.shape);
    series.push_back(std::move(js));
  }
  Json source{{"figure_type", to_string(spec.type)}};
  if (spec.shape) source["shape"] = to_string(*spec.shape);
  source["magnitude"] = spec.magnitude;
  source["series"] = std::move(series);

  const auto& st = spec.style;
  Json style{{"width_to_height", st.width_to_height}, {"font_size_index", st.font_size_index},
             {"gridlines", st.gridlines},           {"legend_inside", st.legend_inside},
             {"legend_cell", st.legend_cell},       {"legend_right", st.legend_right}};
  if (!st.line_style_ids.empty()) style["line_style_ids"] = st.line_style_ids;

  return Json{{"figure_id", spec.figure_id},
              {"seed", std::to_string(spec.seed)},
              {"attempt", spec.attempt},
              {"source_data", std::move(source)},
              {"style", std::move(style)}};
}

FigureSpec spec_from_json(const Json& record) {
  FigureSpec spec;
  spec.figure_id = get<int>(record, "figure_id");
  try {
    spec.seed = std::stoull(get<std::string>(record, "seed"));
  } catch (const std::logic_error&) {
    throw SchemaError("field 'seed': not an unsigned integer");
  }
  spec.attempt = get<int>(record, "attempt");

  const Json& source = field(record, "source_data");
  const auto type = figure_type_from_string(get<std::string>(source, "figure_type"));
  if (!type) throw SchemaError("unknown figure_type");
  spec.type = *type;
  if (source.contains("shape")) {
    spec.shape = shape_from_string(get<std::string>(source, "shape"));
    if (!spec.shape) throw SchemaError("unknown shape");
  }
  spec.magnitude = get<double>(source, "magnitude");
  const Json& series = field(source, "series");
  if (!series.is_array()) throw SchemaError("series must be an array");
  for (const auto& js : series) {
    Series s;
    s.color_id = get<int>(field(js, "color"), "id");
    s.x = get<std::vector<double>>(js, "x");
    s.y = get<std::vector<double>>(js, "y");
    if (s.x.size() != s.y.size() || s.x.empty()) throw SchemaError("series x/y length mismatch");
    if (js.contains("shape")) {
      s.shape = shape_from_string(get<std::string>(js, "shape"));
      if (!s.shape) throw SchemaError("unknown series shape");
    }
    spec.series.push_back(std::move(s));
  }

  const Json& style = field(record, "style");
  spec.style.width_to_height = get<double>(style, "width_to_height");
  spec.style.font_size_index = get<int>(style, "font_size_index");
  spec.style.gridlines = get<bool>(style, "gridlines");
  spec.style.legend_inside = get<bool>(style, "legend_inside");
  spec.style.legend_cell = get<int>(style, "legend_cell");
  spec.style.legend_right = get<bool>(style, "legend_right");
  if (style.contains("line_style_ids")) spec.style.line_style_ids = get<std::vector<int>>(style, "line_style_ids");
  return spec;
}

Json box_to_json(const BoundingBox& b) {
  Json j{{"element_class", to_string(b.element_class)}};
  j["color_id"] = b.color_id ? Json(*b.color_id) : Json(nullptr);
  j["x"] = b.x;
  j["y"] = b.y;
  j["w"] = b.w;
  j["h"] = b.h;
  if (!b.text.empty()) j["text"] = b.text;
  return j;
}

BoundingBox box_from_json(const Json& j) {
  BoundingBox b;
  const auto cls = element_class_from_string(get<std::string>(j, "element_class"));
  if (!cls) throw SchemaError("unknown element_class");
  b.element_class = *cls;
  const Json& color = field(j, "color_id");
  if (!color.is_null()) b.color_id = get<int>(j, "color_id");
  b.x = get<int>(j, "x");
  b.y = get<int>(j, "y");
  b.w = get<int>(j, "w");
  b.h = get<int>(j, "h");
  if (j.contains("text")) b.text = get<std::string>(j, "text");
  return b;
}

Json legend_to_json(const LegendPlacement& p) {
  Json j{{"side", legend_side_name(p.side)},
         {"cell", p.cell},
         {"orientation", p.orientation == LegendOrientation::Vertical ? "vertical" : "horizontal"}};
  return j;
}

Json qa_to_json(const QAPair& qa, std::span<const ColorEntry> colors) {
  Json j{{"figure_id", qa.figure_id},
         {"template_id", qa.template_id},
         {"question", qa.question},
         {"color_x", color_to_json(colors, qa.color_x)}};
  j["color_y"] = qa.color_y ? color_to_json(colors, *qa.color_y) : Json(nullptr);
  j["answer"] = qa.answer ? "yes" : "no";
  return j;
}

QAPair qa_from_json(const Json& j) {
  QAPair qa;
  qa.figure_id = get<int>(j, "figure_id");
  qa.template_id = get<int>(j, "template_id");
  if (qa.template_id < 1 || qa.template_id > kTemplateCount) throw SchemaError("template_id out of range");
  qa.question = get<std::string>(j, "question");
  qa.color_x = get<int>(field(j, "color_x"), "id");
  const Json& cy = field(j, "color_y");
  if (!cy.is_null()) qa.color_y = get<int>(cy, "id");
  const auto answer = get<std::string>(j, "answer");
  if (answer != "yes" && answer != "no") throw SchemaError("answer must be yes or no");
  qa.answer = answer == "yes";
  return qa;
}

}  // namespace figureqa
