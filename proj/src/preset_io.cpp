#include "fuchsian/preset_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "fuchsian/error.hpp"

namespace fuchsian {

namespace {

TowerElement parse_entry(const std::string& token) {
  Rational c[4];
  std::size_t start = 0;
  for (int i = 0; i < 4; ++i) {
    const auto comma = token.find(',', start);
    c[i] = Rational::parse(std::string_view(token).substr(start, comma - start));
    if (comma == std::string::npos) break;
    if (i == 3) throw Error(ErrorCode::Parse, "too many coefficients in '" + token + "'");
    start = comma + 1;
  }
  return {c[0], c[1], c[2], c[3]};
}

std::string format_entry(const TowerElement& e) {
  const Rational* c[4] = {&e.c1(), &e.c2(), &e.c3(), &e.c6()};
  int last = 0;
  for (int i = 0; i < 4; ++i)
    if (!c[i]->is_zero()) last = i;
  std::string s = c[0]->to_string();
  for (int i = 1; i <= last; ++i) s += "," + c[i]->to_string();
  return s;
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double parse_double(const std::string& tok, int line) {
  try {
    std::size_t used = 0;
    const double v = std::stod(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorCode::Parse, "line " + std::to_string(line) + ": bad number '" + tok + "'");
  }
}

}  // namespace

GroupPreset parse_preset(std::string_view text) {
  std::string name;
  std::string domain_kind;
  PointH center{};
  std::optional<PointH> base_point;
  std::string homothety;
  std::optional<CodebookKind> kind;
  std::vector<Generator> generators;

  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream line(raw);
    std::vector<std::string> tok;
    for (std::string t; line >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    auto fail = [&](const std::string& why) {
      return Error(ErrorCode::Parse, "line " + std::to_string(line_no) + ": " + why);
    };
    const std::string& key = tok[0];
    if (key == "name" && tok.size() == 2) {
      name = tok[1];
    } else if (key == "domain" && tok.size() == 2 && tok[1] == "strip") {
      domain_kind = "strip";
    } else if (key == "domain" && tok.size() == 4 && tok[1] == "dirichlet") {
      domain_kind = "dirichlet";
      center = {parse_double(tok[2], line_no), parse_double(tok[3], line_no)};
      if (!(center.im > 0)) throw fail("Dirichlet center must lie in the upper half-plane");
    } else if (key == "homothety" && tok.size() == 2) {
      homothety = tok[1];
    } else if (key == "codebook" && tok.size() == 2 && (tok[1] == "words" || tok[1] == "quaternion")) {
      kind = tok[1] == "words" ? CodebookKind::Words : CodebookKind::Quaternion;
    } else if (key == "base_point" && tok.size() == 3) {
      base_point = PointH{parse_double(tok[1], line_no), parse_double(tok[2], line_no)};
    } else if (key == "generator" && tok.size() == 6) {
      TowerMatrix m{parse_entry(tok[2]), parse_entry(tok[3]), parse_entry(tok[4]), parse_entry(tok[5])};
      if (m.det() != TowerElement(1)) throw fail("generator '" + tok[1] + "' has determinant " + m.det().to_string());
      generators.emplace_back(tok[1], GroupMatrix(std::move(m)));
    } else if (key == "units_box" && tok.size() == 2) {
      const auto box = static_cast<std::int64_t>(parse_double(tok[1], line_no));
      if (box < 1 || box > 20) throw fail("units_box must be in 1..20");
      std::vector<GroupMatrix> kept;
      for (const auto& u : enumerate_norm_one_units(box)) {
        if (u.is_plus_minus_identity()) continue;
        GroupMatrix canon = sign_normalize(u).first;
        if (std::find(kept.begin(), kept.end(), canon) == kept.end()) kept.push_back(std::move(canon));
      }
      for (auto& u : kept) generators.emplace_back("u" + std::to_string(generators.size()), std::move(u));
    } else {
      throw fail("unrecognized directive '" + raw + "'");
    }
  }

  if (name.empty()) throw Error(ErrorCode::Parse, "preset has no name");
  if (generators.empty()) throw Error(ErrorCode::Parse, "preset '" + name + "' has no generators");
  for (std::size_t i = 0; i < generators.size(); ++i)
    for (std::size_t j = i + 1; j < generators.size(); ++j)
      if (generators[i].name == generators[j].name)
        throw Error(ErrorCode::Parse, "duplicate generator name '" + generators[i].name + "'");

  if (domain_kind == "strip") {
    if (homothety.empty()) throw Error(ErrorCode::Parse, "strip preset needs a homothety directive");
    std::size_t idx = generators.size();
    for (std::size_t i = 0; i < generators.size(); ++i)
      if (generators[i].name == homothety) idx = i;
    if (idx == generators.size()) throw Error(ErrorCode::Parse, "unknown homothety '" + homothety + "'");
    return make_strip_preset(name, std::move(generators), idx, base_point.value_or(PointH{0, 1}),
                             kind.value_or(CodebookKind::Words));
  }
  if (domain_kind == "dirichlet") {
    auto p = make_dirichlet_preset(name, std::move(generators), center, kind.value_or(CodebookKind::Quaternion));
    if (base_point) p.base_point_default = *base_point;
    return p;
  }
  throw Error(ErrorCode::Parse, "preset '" + name + "' has no domain directive");
}

GroupPreset load_preset_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open preset file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_preset(ss.str());
}

std::string format_preset(const GroupPreset& preset) {
  std::ostringstream out;
  out << "name " << preset.name << "\n";
  if (const auto* dir = std::get_if<DirichletDomain>(&preset.domain)) {
    out << "domain dirichlet " << format_double(dir->center.re) << " " << format_double(dir->center.im) << "\n";
  } else {
    out << "domain strip\n";
    out << "homothety " << preset.generators[*preset.homothety].name << "\n";
  }
  out << "codebook " << (preset.codebook_kind == CodebookKind::Words ? "words" : "quaternion") << "\n";
  out << "base_point " << format_double(preset.base_point_default.re) << " "
      << format_double(preset.base_point_default.im) << "\n";
  for (const auto& g : preset.generators) {
    const auto& m = g.matrix.exact();
    out << "generator " << g.name << " " << format_entry(m.a) << " " << format_entry(m.b) << " "
        << format_entry(m.c) << " " << format_entry(m.d) << "\n";
  }
  return out.str();
}

GroupPreset resolve_preset(const std::string& name_or_path) {
  if (const auto* p = find_builtin_preset(name_or_path)) return *p;
  std::ifstream probe(name_or_path);
  if (!probe) throw Error(ErrorCode::InvalidArgument, "unknown preset '" + name_or_path + "'");
  return load_preset_file(name_or_path);
}

}  // namespace fuchsian
