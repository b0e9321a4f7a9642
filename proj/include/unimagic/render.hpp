#ifndef UNIMAGIC_RENDER_HPP
#define UNIMAGIC_RENDER_HPP

#include <string>
#include <string_view>

#include <json.hpp>

#include "unimagic/classify.hpp"
#include "unimagic/square.hpp"

namespace unimagic {

enum class RenderStyle { Plain, Json, SevenSeg, Bordered };

std::optional<RenderStyle> parse_render_style(std::string_view name);

/// One row per line, cells separated by a single space. Parses back to
/// the same square.
std::string render_plain(const Square& s);

/// {"order", "width", "rows": [["00", "11", ...], ...]}
nlohmann::json square_to_json(const Square& s);

/// Three text lines per square row; digits within a cell abut, cells are
/// two spaces apart, square rows are separated by a blank line.
std::string render_sevenseg(const Square& s);

/// The square framed on all four sides by copies of `label`, tab
/// separated, e.g. a 5x5 square inside a 7x7 ring of "88+88".
std::string render_bordered(const Square& s, std::string_view label);

std::string render(const Square& s, RenderStyle style, std::string_view label = {});

nlohmann::json report_to_json(const ClassificationReport& r);

}  // namespace unimagic

#endif  // UNIMAGIC_RENDER_HPP
