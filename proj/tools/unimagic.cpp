#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "unimagic/classify.hpp"
#include "unimagic/dates.hpp"
#include "unimagic/render.hpp"
#include "unimagic/search.hpp"

using namespace unimagic;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  std::ostringstream text;
  if (path.empty() || path == "-") {
    text << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    text << in.rdbuf();
  }
  return text.str();
}

Square load(const std::string& path) {
  try {
    return parse_square(read_input(path));
  } catch (const ParseError& e) {
    const std::string where = path.empty() || path == "-" ? "<stdin>" : path;
    throw UsageError(where + ": " + e.what());
  }
}

MagicCategory parse_expect(const std::string& name) {
  if (name == "semi") return MagicCategory::SemiMagic;
  if (name == "magic") return MagicCategory::Magic;
  if (name == "pandiagonal") return MagicCategory::PandiagonalMagic;
  throw UsageError("unknown --expect value: " + name);
}

std::vector<Atomic> parse_transforms(const std::vector<std::string>& lists) {
  std::vector<Atomic> out;
  for (const auto& list : lists) {
    if (list == "all") {
      out.insert(out.end(), kAllAtomics.begin(), kAllAtomics.end());
      continue;
    }
    try {
      for (Atomic a : parse_atomic_list(list)) out.push_back(a);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  return out;
}

Alphabet parse_alphabet(const std::string& text) {
  try {
    return Alphabet::parse(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

RenderStyle parse_style(const std::string& name) {
  const auto style = parse_render_style(name);
  if (!style) throw UsageError("unknown style: " + name);
  return *style;
}

void print_report(const ClassificationReport& r, bool json) {
  if (json) {
    std::cout << report_to_json(r).dump(2) << '\n';
    return;
  }
  std::cout << "order: " << r.order << '\n' << "width: " << r.width << '\n';
  std::cout << "category: " << to_string(r.category) << '\n';
  std::cout << "constant: " << (r.constant ? std::to_string(*r.constant) : "none") << '\n';
  std::cout << "cell_set: " << to_string(r.cell_set.kind);
  if (!r.cell_set.alphabet.empty()) {
    std::cout << " {";
    for (std::size_t i = 0; i < r.cell_set.alphabet.size(); ++i) std::cout << (i ? "," : "") << r.cell_set.alphabet[i];
    std::cout << '}';
  }
  std::cout << '\n';
  for (const auto& [atomic, v] : r.universality) {
    std::cout << to_string(atomic) << ": " << to_string(v.kind);
    if (v.constant) std::cout << ' ' << *v.constant;
    if (v.position) std::cout << " at " << v.position->first << ',' << v.position->second;
    std::cout << '\n';
  }
}

// Checks --expect and --constant; reports each miss on stderr.
bool meets(const ClassificationReport& r, const std::optional<std::string>& expect,
           const std::optional<std::int64_t>& constant) {
  bool ok = true;
  if (expect) {
    const MagicCategory want = parse_expect(*expect);
    if (r.category < want) {
      std::cerr << "expected " << *expect << ", got " << to_string(r.category) << '\n';
      ok = false;
    }
    for (const auto& [atomic, v] : r.universality) {
      const bool pass = want == MagicCategory::SemiMagic ? v.kind == VerdictKind::ImageMagicSameConstant ||
                                                               v.kind == VerdictKind::ImageMagicOtherConstant ||
                                                               v.kind == VerdictKind::ImageSemiMagic
                                                         : v.kind == VerdictKind::ImageMagicSameConstant;
      if (!pass) {
        std::cerr << to_string(atomic) << ": " << to_string(v.kind) << '\n';
        ok = false;
      }
    }
  }
  if (constant && r.constant != constant) {
    std::cerr << "expected constant " << *constant << ", got "
              << (r.constant ? std::to_string(*r.constant) : "none") << '\n';
    ok = false;
  }
  return ok;
}

void print_square(const Square& s, RenderStyle style, const std::string& label, bool& first) {
  if (style == RenderStyle::Json) {
    std::cout << square_to_json(s).dump() << '\n';
    return;
  }
  if (!first) std::cout << '\n';
  first = false;
  std::cout << render(s, style, label);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Seven-segment magic squares and date scans"};
  app.require_subcommand(1);

  std::string input;
  std::optional<std::string> expect;
  std::optional<std::int64_t> constant;
  std::vector<std::string> transforms;
  std::vector<std::string> applies;
  std::string alphabet;
  int order = 0;
  int width = 3;
  std::string mode = "subset";
  std::string from;
  std::string to;
  std::string style = "plain";
  std::string label = "88";
  unsigned jobs = 1;
  bool dedup = false;
  bool via_latin = false;
  bool count = false;

  auto add_input = [&](CLI::App* cmd) { cmd->add_option("input", input, "square file, stdin when omitted or -"); };
  auto add_style = [&](CLI::App* cmd) {
    cmd->add_option("--style", style, "plain|json|sevenseg|bordered")->capture_default_str();
  };

  auto* verify = app.add_subcommand("verify", "classify a square and check expectations");
  add_input(verify);
  verify->add_option("--expect", expect, "semi|magic|pandiagonal");
  verify->add_option("--constant", constant, "required magic constant");
  add_style(verify);

  auto* classify_cmd = app.add_subcommand("classify", "classify a square and its transform images");
  add_input(classify_cmd);
  classify_cmd->add_option("--transforms", transforms, "comma-separated transforms, default all")->allow_extra_args(false);
  classify_cmd->add_option("--expect", expect, "semi|magic|pandiagonal, checked for every image too");
  classify_cmd->add_option("--constant", constant, "required magic constant");
  add_style(classify_cmd);

  auto* transform = app.add_subcommand("transform", "apply transforms left to right");
  add_input(transform);
  transform->add_option("--apply", applies, "transform name or list, repeatable")->required()->allow_extra_args(false);
  add_style(transform);
  transform->add_option("--border-label", label, "corner cell for bordered style");

  auto* render_cmd = app.add_subcommand("render", "print a square in another style");
  add_input(render_cmd);
  add_style(render_cmd);
  render_cmd->add_option("--border-label", label, "corner cell for bordered style")->capture_default_str();

  auto* search = app.add_subcommand("search", "enumerate magic squares over D x D");
  search->add_option("--alphabet", alphabet, "digits, e.g. 1258")->required();
  search->add_option("--order", order, "square order, equal to the alphabet size");
  search->add_option("--expect", expect, "semi|magic|pandiagonal, default magic");
  search->add_option("--transforms", transforms, "universality filter")->allow_extra_args(false);
  search->add_flag("--dedup", dedup, "one square per orbit");
  search->add_flag("--via-latin", via_latin, "superimpose orthogonal Latin pairs");
  search->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  search->add_flag("--count", count, "print only the number of squares");
  add_style(search);

  auto* pal = app.add_subcommand("palindromes", "enumerate semi-magic squares of palindromes");
  pal->add_option("--alphabet", alphabet, "digits")->required();
  pal->add_option("--order", order, "square order")->required()->check(CLI::Range(1, 10));
  pal->add_option("--width", width, "digits per cell")->capture_default_str()->check(CLI::Range(1, 17));
  pal->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  pal->add_flag("--count", count, "print only the number of squares");
  add_style(pal);

  auto* dates = app.add_subcommand("dates", "scan a date range for digit alphabets");
  dates->add_option("--alphabet", alphabet, "digits")->required();
  dates->add_option("--from", from, "dd.mm.yyyy")->required();
  dates->add_option("--to", to, "dd.mm.yyyy")->required();
  dates->add_option("--mode", mode, "subset|exact")->capture_default_str();
  add_style(dates);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*verify || *classify_cmd) {
      const RenderStyle rs = parse_style(style);
      if (rs != RenderStyle::Plain && rs != RenderStyle::Json) throw UsageError("reports support plain or json");
      const Square s = load(input);
      ClassificationReport r;
      if (*verify) {
        r = classify(s);
      } else {
        const auto list = transforms.empty() ? std::vector<Atomic>(kAllAtomics.begin(), kAllAtomics.end())
                                             : parse_transforms(transforms);
        r = classify_universal(s, std::span<const Atomic>(list));
      }
      print_report(r, rs == RenderStyle::Json);
      return meets(r, expect, constant) ? kOk : kFailed;
    }

    if (*transform) {
      const RenderStyle rs = parse_style(style);
      const Square s = load(input);
      const auto result = apply_transform(s, Transform{parse_transforms(applies)});
      if (const auto* bad = std::get_if<InvalidDigit>(&result)) {
        std::cerr << describe(*bad) << '\n';
        return kFailed;
      }
      bool first = true;
      print_square(std::get<Square>(result), rs, label, first);
      return kOk;
    }

    if (*render_cmd) {
      const RenderStyle rs = parse_style(style);
      bool first = true;
      print_square(load(input), rs, label, first);
      return kOk;
    }

    if (*search || *pal) {
      const RenderStyle rs = parse_style(style);
      const Alphabet d = parse_alphabet(alphabet);
      std::size_t found = 0;
      bool first = true;
      auto sink = [&](const Square& s) {
        ++found;
        if (!count) print_square(s, rs, label, first);
      };
      if (*search) {
        SearchQuery q;
        q.alphabet = d;
        q.order = order == 0 ? static_cast<int>(d.size()) : order;
        q.requirement = expect ? parse_expect(*expect) : MagicCategory::Magic;
        q.universality = parse_transforms(transforms);
        q.dedup = dedup;
        q.via_latin = via_latin;
        q.jobs = jobs;
        try {
          enumerate(q, sink);
        } catch (const QueryError& e) {
          throw UsageError(e.what());
        }
      } else {
        enumerate_palindromic(d, order, width, sink, jobs);
      }
      if (count) std::cout << found << '\n';
      return kOk;
    }

    if (*dates) {
      const RenderStyle rs = parse_style(style);
      if (rs != RenderStyle::Plain && rs != RenderStyle::Json) throw UsageError("dates support plain or json");
      DigitMode dm;
      if (mode == "subset") {
        dm = DigitMode::SubsetOf;
      } else if (mode == "exact") {
        dm = DigitMode::ExactlyUses;
      } else {
        throw UsageError("unknown --mode: " + mode);
      }
      std::vector<DateStamp> hits;
      try {
        hits = scan(DateQuery{DateStamp::parse(from), DateStamp::parse(to), parse_alphabet(alphabet), dm});
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      if (rs == RenderStyle::Json) {
        auto arr = nlohmann::json::array();
        for (const auto& h : hits) arr.push_back(h.str());
        std::cout << arr.dump() << '\n';
      } else {
        for (const auto& h : hits) std::cout << h.str() << '\n';
      }
      return kOk;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
