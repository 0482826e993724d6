#include "figureqa/validate.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>

#include "figureqa/data_synth.hpp"
#include "figureqa/oracle.hpp"
#include "figureqa/png.hpp"
#include "figureqa/serialize.hpp"

namespace figureqa {

namespace fs = std::filesystem;

namespace {

constexpr std::size_t kMaxMessages = 50;

void note(ValidationReport& r, std::string msg) {
  if (r.messages.size() < kMaxMessages) r.messages.push_back(std::move(msg));
}

Json parse_json_file(const fs::path& path) {
  const std::string text = read_file(path);
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError(path.string() + ": " + e.what());
  }
}

struct ManifestInfo {
  ColorScheme scheme;
  std::vector<std::pair<std::string, ColorMode>> splits;
};

ManifestInfo read_manifest(const fs::path& dir) {
  const Json m = parse_json_file(dir / "manifest.json");
  ManifestInfo info;
  try {
    if (m.at("color_table_version").get<std::string>() != kColorTableVersion)
      throw SchemaError("unsupported color table version");
    const auto a = m.at("color_partition").at("A").get<std::vector<int>>();
    const auto b = m.at("color_partition").at("B").get<std::vector<int>>();
    if (a.size() != kSubsetSize || b.size() != kSubsetSize) throw SchemaError("color partition must be 50/50");
    std::set<int> all(a.begin(), a.end());
    all.insert(b.begin(), b.end());
    if (all.size() != kColorCount || *all.begin() != 0 || *all.rbegin() != kColorCount - 1)
      throw SchemaError("color partition must cover ids 0..99 exactly once");
    std::copy(a.begin(), a.end(), info.scheme.subset_a.begin());
    std::copy(b.begin(), b.end(), info.scheme.subset_b.begin());
    for (const auto& s : m.at("splits")) {
      const auto mode = color_mode_from_string(s.at("color_mode").get<std::string>());
      if (!mode) throw SchemaError("unknown color mode");
      info.splits.emplace_back(s.at("name").get<std::string>(), *mode);
    }
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError(std::string("manifest: ") + e.what());
  }
  return info;
}

std::size_t type_index(FigureType t) { return static_cast<std::size_t>(t); }

}  // namespace

int box_fidelity_failures(const Canvas& canvas, std::span<const BoundingBox> boxes, std::span<const ColorEntry> colors,
                          std::span<const int> series_color_ids, std::vector<std::string>* messages) {
  int failures = 0;
  auto fail = [&](std::string msg) {
    ++failures;
    if (messages && messages->size() < kMaxMessages) messages->push_back(std::move(msg));
  };
  auto rgb_of = [&](int id) -> std::optional<Rgb> {
    for (const auto& c : colors)
      if (c.id == id) return c.rgb;
    return std::nullopt;
  };

  for (const auto& b : boxes) {
    if (b.w <= 0 || b.h <= 0 || b.x < 0 || b.y < 0 || b.x + b.w > canvas.width() || b.y + b.h > canvas.height()) {
      fail("box out of bounds: " + std::string(to_string(b.element_class)));
      continue;
    }
    if (!is_data_element(b.element_class)) continue;
    if (!b.color_id) {
      fail("data box without color: " + std::string(to_string(b.element_class)));
      continue;
    }
    if (b.element_class == ElementClass::LineSegment) continue;
    const auto rgb = rgb_of(*b.color_id);
    if (!rgb) {
      fail("box references unknown color " + std::to_string(*b.color_id));
      continue;
    }
    auto row_has = [&](int y) {
      for (int x = b.x; x < b.x + b.w; ++x)
        if (canvas.at(x, y) == *rgb) return true;
      return false;
    };
    auto col_has = [&](int x) {
      for (int y = b.y; y < b.y + b.h; ++y)
        if (canvas.at(x, y) == *rgb) return true;
      return false;
    };
    if (!row_has(b.y) || !row_has(b.y + b.h - 1) || !col_has(b.x) || !col_has(b.x + b.w - 1))
      fail("box not tight: " + std::string(to_string(b.element_class)) + " color " + std::to_string(*b.color_id));
  }

  for (int id : series_color_ids) {
    const auto rgb = rgb_of(id);
    if (!rgb) {
      fail("series references unknown color " + std::to_string(id));
      continue;
    }
    std::vector<const BoundingBox*> own;
    for (const auto& b : boxes)
      if (is_data_element(b.element_class) && b.color_id == id) own.push_back(&b);
    int stray = 0;
    for (int y = 0; y < canvas.height(); ++y)
      for (int x = 0; x < canvas.width(); ++x) {
        if (!(canvas.at(x, y) == *rgb)) continue;
        const bool inside = std::any_of(own.begin(), own.end(), [&](const BoundingBox* b) {
          return x >= b->x && y >= b->y && x < b->x + b->w && y < b->y + b->h;
        });
        stray += inside ? 0 : 1;
      }
    if (stray > 0) fail(std::to_string(stray) + " pixels of color " + std::to_string(id) + " outside its boxes");
  }
  return failures;
}

ValidationReport validate_corpus(const fs::path& dir, const ValidateOptions& options) {
  ValidationReport report;
  const ManifestInfo manifest = read_manifest(dir);
  const auto colors = build_color_table();

  std::set<int> all_ids;
  for (const auto& [split_name, mode] : manifest.splits) {
    SplitReport sr;
    sr.name = split_name;
    const fs::path split_dir = dir / split_name;
    const ColorScheme scheme = manifest.scheme.with_mode(mode);

    Json annotations, qa_pairs;
    try {
      annotations = parse_json_file(split_dir / "annotations.json");
      qa_pairs = parse_json_file(split_dir / "qa_pairs.json");
      if (!annotations.is_array() || !qa_pairs.is_array()) throw SchemaError("expected JSON arrays");
    } catch (const std::exception& e) {
      ++report.schema_errors;
      note(report, split_name + ": " + e.what());
      report.splits.push_back(sr);
      continue;
    }

    std::map<int, FigureSpec> specs;
    int index = 0;
    for (const auto& record : annotations) {
      const int position = index++;
      FigureSpec spec;
      try {
        spec = spec_from_json(record);
      } catch (const std::exception& e) {
        ++report.schema_errors;
        note(report, split_name + " record " + std::to_string(position) + ": " + e.what());
        continue;
      }
      const std::string where = split_name + " figure " + std::to_string(spec.figure_id);
      if (!all_ids.insert(spec.figure_id).second) {
        ++report.referential_errors;
        note(report, where + ": duplicate figure id");
      }
      ++sr.figures;
      ++sr.figures_by_type[type_index(spec.type)];

      // Color identity and scheme membership.
      const auto subset = subset_for(spec.type, mode);
      for (std::size_t i = 0; i < spec.series.size(); ++i) {
        const int id = spec.series[i].color_id;
        if (id < 0 || id >= kColorCount) {
          ++report.referential_errors;
          note(report, where + ": color id out of range");
          continue;
        }
        const Json& c = record["source_data"]["series"][i]["color"];
        if (c.value("name", "") != colors[static_cast<std::size_t>(id)].name) {
          ++report.schema_errors;
          note(report, where + ": color name does not match the table");
        }
        if (!scheme.contains(subset, id)) {
          ++report.scheme_violations;
          note(report, where + ": color " + std::to_string(id) + " outside subset " +
                           (subset == ColorSubset::A ? "A" : "B"));
        }
      }
      if (const auto problem = check_figure(spec, scheme);
          !problem.empty() && problem != "color outside the scheme subset") {
        ++report.schema_errors;
        note(report, where + ": " + problem);
      }

      // Image and boxes.
      try {
        const auto bytes = read_file(split_dir / record.at("image").get<std::string>());
        const Canvas canvas =
            decode_png(std::span(reinterpret_cast<const std::uint8_t*>(bytes.data()), bytes.size()));
        if (canvas.width() != record.at("canvas").at("width").get<int>() ||
            canvas.height() != record.at("canvas").at("height").get<int>())
          throw SchemaError("image size differs from the recorded canvas");
        std::vector<BoundingBox> boxes;
        for (const auto& jb : record.at("boxes")) boxes.push_back(box_from_json(jb));
        const bool scan = options.check_pixels &&
                          (options.full_pixel_scan || position % std::max(1, options.pixel_scan_stride) == 0);
        if (scan) {
          std::vector<int> ids;
          for (const auto& s : spec.series) ids.push_back(s.color_id);
          std::vector<std::string> msgs;
          const int failures = box_fidelity_failures(canvas, boxes, colors, ids, &msgs);
          report.bbox_failures += failures;
          ++report.figures_pixel_scanned;
          for (auto& m : msgs) note(report, where + ": " + m);
        }
      } catch (const std::exception& e) {
        ++report.schema_errors;
        note(report, where + ": " + e.what());
      }
      specs.emplace(spec.figure_id, std::move(spec));
    }

    for (const auto& jq : qa_pairs) {
      QAPair qa;
      try {
        qa = qa_from_json(jq);
      } catch (const std::exception& e) {
        ++report.schema_errors;
        note(report, split_name + " qa: " + e.what());
        continue;
      }
      auto& counts = sr.by_template[static_cast<std::size_t>(qa.template_id - 1)];
      (qa.answer ? counts.yes : counts.no) += 1;

      const std::string where = split_name + " qa (figure " + std::to_string(qa.figure_id) + ", template " +
                                std::to_string(qa.template_id) + ")";
      const auto it = specs.find(qa.figure_id);
      if (it == specs.end()) {
        ++report.referential_errors;
        note(report, where + ": unknown figure");
        continue;
      }
      const FigureSpec& spec = it->second;
      const auto& tmpl = question_template(qa.template_id);
      if (!template_applies(qa.template_id, spec.type)) {
        ++report.applicability_violations;
        note(report, where + ": template does not apply to " + std::string(to_string(spec.type)));
        continue;
      }
      auto index_of = [&](int color) -> std::optional<std::size_t> {
        for (std::size_t i = 0; i < spec.series.size(); ++i)
          if (spec.series[i].color_id == color) return i;
        return std::nullopt;
      };
      const auto x = index_of(qa.color_x);
      const auto y = qa.color_y ? index_of(*qa.color_y) : std::nullopt;
      if (!x || (qa.color_y && !y)) {
        ++report.referential_errors;
        note(report, where + ": color not in figure");
        continue;
      }
      if (tmpl.two_subjects != qa.color_y.has_value() || (y && *x == *y)) {
        ++report.schema_errors;
        note(report, where + ": wrong subject count");
        continue;
      }
      auto name_of = [&](int id) -> std::string {
        return id >= 0 && id < kColorCount ? colors[static_cast<std::size_t>(id)].name : std::string("?");
      };
      const std::string expected = render_question(tmpl, name_of(qa.color_x), qa.color_y ? name_of(*qa.color_y) : "");
      if (qa.question != expected) {
        ++report.schema_errors;
        note(report, where + ": question text '" + qa.question + "' != '" + expected + "'");
      }
      const auto truth = oracle::answer(spec, qa.template_id, *x, y);
      if (!truth) {
        ++report.applicability_violations;
        note(report, where + ": template not answerable for this figure");
      } else if (*truth != qa.answer) {
        ++report.oracle_mismatches;
        note(report, where + ": answer disagrees with source data");
      }
    }

    for (int t = 0; t < kTemplateCount; ++t)
      if (sr.by_template[t].yes != sr.by_template[t].no) {
        ++report.imbalanced_templates;
        note(report, split_name + ": template " + std::to_string(t + 1) + " has " +
                         std::to_string(sr.by_template[t].yes) + " yes / " + std::to_string(sr.by_template[t].no) +
                         " no");
      }
    report.splits.push_back(sr);
  }
  return report;
}

std::vector<SplitReport> corpus_stats(const fs::path& dir) {
  const ManifestInfo manifest = read_manifest(dir);
  std::vector<SplitReport> out;
  for (const auto& [name, mode] : manifest.splits) {
    SplitReport sr;
    sr.name = name;
    const Json annotations = parse_json_file(dir / name / "annotations.json");
    const Json qa_pairs = parse_json_file(dir / name / "qa_pairs.json");
    for (const auto& record : annotations) {
      const auto type = figure_type_from_string(record.at("source_data").at("figure_type").get<std::string>());
      if (!type) throw SchemaError("unknown figure type in " + name);
      ++sr.figures;
      ++sr.figures_by_type[type_index(*type)];
    }
    for (const auto& jq : qa_pairs) {
      const QAPair qa = qa_from_json(jq);
      auto& c = sr.by_template[static_cast<std::size_t>(qa.template_id - 1)];
      (qa.answer ? c.yes : c.no) += 1;
    }
    out.push_back(sr);
  }
  return out;
}

namespace {

std::string ratio(const YesNo& c) {
  if (c.yes + c.no == 0) return "-";
  char buf[16];
  std::snprintf(buf, sizeof buf, "%.3f", static_cast<double>(c.yes) / (c.yes + c.no));
  return buf;
}

Json split_to_json(const SplitReport& s) {
  Json types;
  for (auto t : kFigureTypes) types[std::string(to_string(t))] = s.figures_by_type[type_index(t)];
  Json templates = Json::array();
  for (int t = 0; t < kTemplateCount; ++t) {
    const auto& c = s.by_template[static_cast<std::size_t>(t)];
    Json jt{{"template_id", t + 1}, {"yes", c.yes}, {"no", c.no}};
    jt["yes_ratio"] = c.yes + c.no ? Json(static_cast<double>(c.yes) / (c.yes + c.no)) : Json(nullptr);
    templates.push_back(std::move(jt));
  }
  return Json{{"name", s.name}, {"figures", s.figures}, {"figure_types", types}, {"templates", templates}};
}

}  // namespace

std::string stats_to_text(const std::vector<SplitReport>& stats) {
  std::ostringstream out;
  for (const auto& s : stats) {
    int qa = 0;
    for (const auto& c : s.by_template) qa += c.yes + c.no;
    out << "split " << s.name << ": " << s.figures << " figures, " << qa << " questions\n";
    if (s.figures == 0) continue;
    out << "  figure types:";
    for (auto t : kFigureTypes) out << ' ' << to_string(t) << '=' << s.figures_by_type[type_index(t)];
    out << "\n  template  yes     no      yes_ratio\n";
    for (int t = 0; t < kTemplateCount; ++t) {
      const auto& c = s.by_template[static_cast<std::size_t>(t)];
      if (c.yes + c.no == 0) continue;
      char line[96];
      std::snprintf(line, sizeof line, "  %-8d  %-6d  %-6d  %s\n", t + 1, c.yes, c.no, ratio(c).c_str());
      out << line;
    }
  }
  return out.str();
}

Json stats_to_json(const std::vector<SplitReport>& stats) {
  Json splits = Json::array();
  for (const auto& s : stats) splits.push_back(split_to_json(s));
  return Json{{"splits", std::move(splits)}};
}

std::string report_to_text(const ValidationReport& r) {
  std::ostringstream out;
  out << "oracle mismatches:        " << r.oracle_mismatches << "\n"
      << "imbalanced templates:     " << r.imbalanced_templates << "\n"
      << "bbox failures:            " << r.bbox_failures << " (" << r.figures_pixel_scanned << " figures scanned)\n"
      << "color-scheme violations:  " << r.scheme_violations << "\n"
      << "schema errors:            " << r.schema_errors << "\n"
      << "applicability violations: " << r.applicability_violations << "\n"
      << "referential errors:       " << r.referential_errors << "\n";
  out << stats_to_text(r.splits);
  for (const auto& m : r.messages) out << "  ! " << m << "\n";
  out << (r.ok() ? "OK\n" : "FAILED\n");
  return out.str();
}

Json report_to_json(const ValidationReport& r) {
  Json j{{"oracle_mismatches", r.oracle_mismatches},
         {"imbalanced_templates", r.imbalanced_templates},
         {"bbox_failures", r.bbox_failures},
         {"figures_pixel_scanned", r.figures_pixel_scanned},
         {"scheme_violations", r.scheme_violations},
         {"schema_errors", r.schema_errors},
         {"applicability_violations", r.applicability_violations},
         {"referential_errors", r.referential_errors},
         {"messages", r.messages}};
  j["splits"] = stats_to_json(r.splits)["splits"];
  j["ok"] = r.ok();
  return j;
}

}  // namespace figureqa
