#pragma once

#include <span>
#include <stdexcept>

#include <json.hpp>

#include "figureqa/color.hpp"
#include "figureqa/figure.hpp"
#include "figureqa/legend.hpp"
#include "figureqa/qa.hpp"
#include "figureqa/renderer.hpp"

namespace figureqa {

using Json = nlohmann::ordered_json;

/// Malformed or inconsistent corpus file content.
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json color_to_json(const ColorEntry& c);
Json color_to_json(std::span<const ColorEntry> colors, int id);

/// `source_data`, `style`, and seed fields of an annotation record.
Json spec_to_json(const FigureSpec& spec, std::span<const ColorEntry> colors);
FigureSpec spec_from_json(const Json& record);

Json box_to_json(const BoundingBox& box);
BoundingBox box_from_json(const Json& j);

Json legend_to_json(const LegendPlacement& p);

Json qa_to_json(const QAPair& qa, std::span<const ColorEntry> colors);
QAPair qa_from_json(const Json& j);

}  // namespace figureqa
