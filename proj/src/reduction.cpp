#include "fuchsian/reduction.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "fuchsian/error.hpp"
#include "fuchsian/preset_io.hpp"
#include "fuchsian/quaternion.hpp"

namespace fuchsian {

std::string to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (const auto& l : w) {
    if (!s.empty()) s += '*';
    s += l.generator;
    if (l.exponent != 1) s += "^" + std::to_string(l.exponent);
  }
  return s;
}

const Generator& GroupPreset::generator(const std::string& gen_name) const {
  for (const auto& g : generators)
    if (g.name == gen_name) return g;
  throw Error(ErrorCode::UnknownGenerator, "'" + gen_name + "' is not a generator of " + name);
}

GroupPreset make_strip_preset(std::string name, std::vector<Generator> generators, std::size_t homothety,
                              PointH base_point, CodebookKind kind) {
  if (homothety >= generators.size()) throw Error(ErrorCode::InvalidArgument, "homothety index out of range");
  const GroupMatrix& h = generators[homothety].matrix;
  if (!h.b().is_zero() || !h.c().is_zero())
    throw Error(ErrorCode::InvalidArgument, "generator '" + generators[homothety].name + "' is not diagonal");
  StripDomain strip;
  strip.lambda = std::max(std::abs(h.numeric().a), std::abs(h.numeric().d));
  if (!(strip.lambda > 1.0)) throw Error(ErrorCode::InvalidArgument, "homothety factor must exceed 1");
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (i == homothety) continue;
    strip.circles.push_back(isometry_circle(generators[i].matrix));
    strip.circles.push_back(isometry_circle(generators[i].inverse));
  }
  GroupPreset p{std::move(name), std::move(generators), std::move(strip), base_point, kind, homothety};
  return p;
}

GroupPreset make_dirichlet_preset(std::string name, std::vector<Generator> generators, PointH center,
                                  CodebookKind kind) {
  auto has = [&](const GroupMatrix& m) {
    const GroupMatrix neg = m.negated();
    return std::any_of(generators.begin(), generators.end(),
                       [&](const Generator& g) { return g.matrix == m || g.matrix == neg; });
  };
  const bool closed =
      std::all_of(generators.begin(), generators.end(), [&](const Generator& g) { return has(g.inverse); });
  DirichletDomain dom{center, {}};
  for (const auto& g : generators) {
    dom.generators.push_back(g.matrix);
    if (!closed) dom.generators.push_back(g.inverse);
  }
  GroupPreset p{std::move(name), std::move(generators), std::move(dom), center, kind, std::nullopt};
  p.inverse_closed = closed;
  return p;
}

namespace {

constexpr const char* kE2d1D6ii = R"(# Signature (1;2) group e2d1D6ii: alpha a homothety, beta symmetric.
name e2d1D6ii
domain strip
homothety alpha
codebook words
base_point 0 1
generator alpha 0,1/2,0,1/2 0 0 0,-1/2,0,1/2
generator beta 0,1 1 1 0,1
)";

constexpr const char* kGamma61 = R"(# Norm-one units of Z<I,J> in (3,-1/Q), decoded on a Dirichlet domain.
name gamma61
domain dirichlet 1.3660254037844386 1.3660254037844386
codebook quaternion
units_box 5
)";

}  // namespace

const GroupPreset& preset_e2d1D6ii() {
  static const GroupPreset p = parse_preset(kE2d1D6ii);
  return p;
}

const GroupPreset& preset_gamma61() {
  static const GroupPreset p = parse_preset(kGamma61);
  return p;
}

const GroupPreset* find_builtin_preset(const std::string& name) {
  if (name == "e2d1D6ii") return &preset_e2d1D6ii();
  if (name == "gamma61") return &preset_gamma61();
  return nullptr;
}

namespace {

struct Move {
  const GroupMatrix* matrix = nullptr;  // null for homothety powers
  Letter letter;
};

ReductionResult finish(std::vector<Letter> applied, GroupMatrix delta, PointH point, std::int64_t steps) {
  std::reverse(applied.begin(), applied.end());
  return {std::move(applied), std::move(delta), point, steps};
}

bool inside_circle_of(const Mat2d& g, PointH z) {
  // |cz + d| < 1  <=>  z strictly inside I(g).
  const double re = g.c * z.re + g.d;
  const double im = g.c * z.im;
  return g.c != 0.0 && re * re + im * im < 1.0;
}

}  // namespace

ReductionResult reduce_point_1e(const GroupPreset& preset, PointH z, std::int64_t max_steps) {
  const auto* strip = std::get_if<StripDomain>(&preset.domain);
  if (!strip || !preset.homothety)
    throw Error(ErrorCode::InvalidArgument, "reduce_point_1e needs a strip preset with a homothety");
  if (!(z.im > 0.0)) throw Error(ErrorCode::DegeneratePoint, "point is not in the upper half-plane");
  const Generator& h = preset.generators[*preset.homothety];

  std::vector<Letter> applied;
  GroupMatrix delta;
  PointH current = z;
  std::int64_t steps = 0;
  bool retried_boundary = false;

  for (;;) {
    const Membership m = domain_contains(preset.domain, current);
    if (m == Membership::Interior) break;

    GroupMatrix step;
    Letter letter;
    bool have_move = false;
    if (const auto n = strip_exponent(current, strip->lambda); n != 0) {
      step = h.matrix.pow(n);
      letter = {h.name, n};
      have_move = true;
    } else {
      for (std::size_t i = 0; i < preset.generators.size() && !have_move; ++i) {
        if (i == *preset.homothety) continue;
        const Generator& g = preset.generators[i];
        if (inside_circle_of(g.matrix.numeric(), current)) {
          step = g.matrix;
          letter = {g.name, 1};
          have_move = true;
        } else if (inside_circle_of(g.inverse.numeric(), current)) {
          step = g.inverse;
          letter = {g.name, -1};
          have_move = true;
        }
      }
    }

    if (m == Membership::Boundary) {
      if (!have_move || retried_boundary) break;
      retried_boundary = true;
    } else if (!have_move) {
      throw Error(ErrorCode::ReductionFailed, "point outside F but no generator applies");
    }

    steps += std::abs(letter.exponent);
    if (steps > max_steps)
      throw Error(ErrorCode::MaxStepsExceeded, "more than " + std::to_string(max_steps) + " generator applications");
    current = moebius_apply(step, current);
    delta = step * delta;
    applied.push_back(std::move(letter));
  }
  return finish(std::move(applied), std::move(delta), current, steps);
}

ReductionResult reduce_point_dirichlet(std::span<const Generator> generators, PointH center, PointH z,
                                       std::int64_t max_steps, bool include_inverses) {
  if (!(z.im > 0.0)) throw Error(ErrorCode::DegeneratePoint, "point is not in the upper half-plane");
  // d(w, p) is increasing in |w - p|^2 / Im w for fixed p.
  auto key = [&](PointH w) {
    const double dx = w.re - center.re, dy = w.im - center.im;
    return (dx * dx + dy * dy) / w.im;
  };
  std::vector<Letter> applied;
  GroupMatrix delta;
  PointH current = z;
  std::int64_t steps = 0;
  for (;;) {
    const Generator* best = nullptr;
    int best_exp = 1;
    PointH best_point{};
    double best_key = key(current);
    for (const auto& g : generators) {
      for (int e : {1, -1}) {
        if (e < 0 && !include_inverses) break;
        const PointH w = moebius_apply(e > 0 ? g.matrix : g.inverse, current);
        if (const double k = key(w); k < best_key) {
          best_key = k;
          best = &g;
          best_exp = e;
          best_point = w;
        }
      }
    }
    if (!best) break;
    if (hyperbolic_distance(best_point, center) >= hyperbolic_distance(current, center) - 1e-12) break;
    if (++steps > max_steps)
      throw Error(ErrorCode::MaxStepsExceeded, "more than " + std::to_string(max_steps) + " descent steps");
    current = best_point;
    delta = (best_exp > 0 ? best->matrix : best->inverse) * delta;
    applied.push_back({best->name, best_exp});
  }
  return finish(std::move(applied), std::move(delta), current, steps);
}

ReductionResult reduce_point(const GroupPreset& preset, PointH z, std::int64_t max_steps) {
  if (const auto* dir = std::get_if<DirichletDomain>(&preset.domain))
    return reduce_point_dirichlet(preset.generators, dir->center, z, max_steps, !preset.inverse_closed);
  return reduce_point_1e(preset, z, max_steps);
}

std::vector<GroupMatrix> enumerate_norm_one_units(std::int64_t box) {
  if (box < 1) throw Error(ErrorCode::InvalidArgument, "box must be >= 1");
  std::vector<GroupMatrix> out;
  for (std::int64_t x = -box; x <= box; ++x)
    for (std::int64_t y = -box; y <= box; ++y)
      for (std::int64_t z = -box; z <= box; ++z)
        for (std::int64_t t = -box; t <= box; ++t)
          if (x * x - 3 * y * y + z * z - 3 * t * t == 1) out.push_back(embed_unit({AlgebraParams{}, x, y, z, t}));
  return out;
}

std::pair<GroupMatrix, int> sign_normalize(const GroupMatrix& g) {
  const TowerElement sum = g.a() + g.c();
  const double s = sum.to_double();
  if (sum.is_zero() || std::abs(s) < 1e-12)
    throw Error(ErrorCode::SignUndecidable, "first-column sum vanishes for " + g.exact().a.to_string() + " ...");
  if (s > 0) return {g, 1};
  return {g.negated(), -1};
}

GroupMatrix word_to_matrix(const Word& word, const GroupPreset& preset) {
  GroupMatrix m;
  for (const auto& l : word) m = m * preset.generator(l.generator).matrix.pow(l.exponent);
  return m;
}

std::vector<Word> enumerate_words(const GroupPreset& preset, std::size_t limit, std::size_t max_length) {
  struct Node {
    Word word;
    GroupMatrix matrix;
  };
  std::vector<Letter> alphabet;
  for (const auto& g : preset.generators) {
    alphabet.push_back({g.name, 1});
    alphabet.push_back({g.name, -1});
  }
  std::vector<GroupMatrix> seen{GroupMatrix::identity()};
  auto is_new = [&](const GroupMatrix& m) {
    const GroupMatrix neg = m.negated();
    return std::none_of(seen.begin(), seen.end(), [&](const GroupMatrix& s) { return s == m || s == neg; });
  };

  std::vector<Word> out;
  std::vector<Node> level{{Word{}, GroupMatrix::identity()}};
  for (std::size_t len = 1; len <= max_length && out.size() < limit && !level.empty(); ++len) {
    std::vector<Node> next;
    for (const auto& node : level) {
      for (const auto& letter : alphabet) {
        if (!node.word.empty()) {
          const Letter& last = node.word.back();
          if (last.generator == letter.generator && last.exponent == -letter.exponent) continue;
        }
        const Generator& g = preset.generator(letter.generator);
        GroupMatrix m = node.matrix * (letter.exponent > 0 ? g.matrix : g.inverse);
        if (!is_new(m)) continue;
        seen.push_back(m);
        Word w = node.word;
        w.push_back(letter);
        if (out.size() < limit) out.push_back(w);
        next.push_back({std::move(w), std::move(m)});
      }
    }
    level = std::move(next);
  }
  return out;
}

}  // namespace fuchsian
