#include "unimagic/render.hpp"

#include <array>
#include <sstream>

#include "unimagic/glyphs.hpp"

namespace unimagic {

std::optional<RenderStyle> parse_render_style(std::string_view name) {
  if (name == "plain") return RenderStyle::Plain;
  if (name == "json") return RenderStyle::Json;
  if (name == "sevenseg") return RenderStyle::SevenSeg;
  if (name == "bordered") return RenderStyle::Bordered;
  return std::nullopt;
}

std::string render_plain(const Square& s) {
  std::ostringstream out;
  for (Eigen::Index i = 0; i < s.order(); ++i) {
    for (Eigen::Index j = 0; j < s.order(); ++j) {
      if (j) out << ' ';
      out << s.cell(i, j).digits();
    }
    out << '\n';
  }
  return out.str();
}

nlohmann::json square_to_json(const Square& s) {
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index i = 0; i < s.order(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index j = 0; j < s.order(); ++j) row.push_back(s.cell(i, j).digits());
    rows.push_back(std::move(row));
  }
  return {{"order", s.order()}, {"width", s.width()}, {"rows", std::move(rows)}};
}

namespace {

std::array<std::string, 3> glyph_lines(int digit) {
  const SegmentMask m = digit_mask(digit);
  auto bar = [&](Segment seg, char ch) { return m.lit(seg) ? ch : ' '; };
  return {
      std::string{' ', bar(Segment::a, '_'), ' '},
      std::string{bar(Segment::f, '|'), bar(Segment::g, '_'), bar(Segment::b, '|')},
      std::string{bar(Segment::e, '|'), bar(Segment::d, '_'), bar(Segment::c, '|')},
  };
}

void rstrip(std::string& line) {
  while (!line.empty() && line.back() == ' ') line.pop_back();
}

}  // namespace

std::string render_sevenseg(const Square& s) {
  std::string out;
  for (Eigen::Index i = 0; i < s.order(); ++i) {
    if (i) out += '\n';
    std::array<std::string, 3> lines;
    for (Eigen::Index j = 0; j < s.order(); ++j) {
      const Cell c = s.cell(i, j);
      for (int k = 0; k < c.width(); ++k) {
        const auto g = glyph_lines(c.digit(k));
        for (std::size_t r = 0; r < 3; ++r) {
          if (j && k == 0) lines[r] += "  ";
          lines[r] += g[r];
        }
      }
    }
    for (auto& line : lines) {
      rstrip(line);
      out += line;
      out += '\n';
    }
  }
  return out;
}

std::string render_bordered(const Square& s, std::string_view label) {
  const Eigen::Index n = s.order();
  std::ostringstream out;
  for (Eigen::Index i = -1; i <= n; ++i) {
    for (Eigen::Index j = -1; j <= n; ++j) {
      if (j > -1) out << '\t';
      if (i < 0 || i == n || j < 0 || j == n) {
        out << label;
      } else {
        out << s.cell(i, j).digits();
      }
    }
    out << '\n';
  }
  return out.str();
}

std::string render(const Square& s, RenderStyle style, std::string_view label) {
  switch (style) {
    case RenderStyle::Plain: return render_plain(s);
    case RenderStyle::Json: return square_to_json(s).dump() + "\n";
    case RenderStyle::SevenSeg: return render_sevenseg(s);
    case RenderStyle::Bordered: return render_bordered(s, label);
  }
  return {};
}

nlohmann::json report_to_json(const ClassificationReport& r) {
  nlohmann::json j;
  j["order"] = r.order;
  j["width"] = r.width;
  j["category"] = to_string(r.category);
  j["constant"] = r.constant ? nlohmann::json(*r.constant) : nlohmann::json(nullptr);
  nlohmann::json cells{{"kind", to_string(r.cell_set.kind)}};
  if (r.cell_set.kind == CellSet::Kind::ExactProduct) cells["alphabet"] = r.cell_set.alphabet;
  j["cell_set"] = std::move(cells);
  nlohmann::json uni = nlohmann::json::object();
  for (const auto& [atomic, verdict] : r.universality) {
    nlohmann::json v{{"verdict", to_string(verdict.kind)}};
    if (verdict.constant) v["constant"] = *verdict.constant;
    if (verdict.position) v["position"] = {verdict.position->first, verdict.position->second};
    uni[std::string(to_string(atomic))] = std::move(v);
  }
  j["universality"] = std::move(uni);
  return j;
}

}  // namespace unimagic
