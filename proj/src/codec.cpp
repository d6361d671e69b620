#include "fuchsian/codec.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

#include "fuchsian/error.hpp"
#include "fuchsian/quaternion.hpp"

namespace fuchsian {

namespace {

const QuadElement& eps3() {
  static const QuadElement e = pell_fundamental_unit(3);
  return e;
}

std::int64_t to_i64(const Rational& r, const char* what) {
  const auto v = r.to_int64();
  if (!v) throw Error(ErrorCode::Overflow, std::string(what) + " does not fit in 64 bits");
  return *v;
}

BigInt exact_sqrt(const BigInt& v) {
  if (v < 0) return -1;
  BigInt r = boost::multiprecision::sqrt(v);
  return r * r == v ? r : BigInt(-1);
}

// A generous bound on |k| for unit_log, from the size of the coefficients.
std::int64_t log_bound(const QuadElement& x) {
  const double mag = std::abs(x.p().to_double()) + 2.0 * std::abs(x.q().to_double()) + 2.0;
  return static_cast<std::int64_t>(std::log(mag) / std::log(eps3().to_double())) + 3;
}

std::int64_t exact_log(const QuadElement& x, const char* what) {
  try {
    const UnitLog l = unit_log(x, eps3(), log_bound(x));
    if (l.residual != Rational(1)) throw Error(ErrorCode::NotInImage, std::string(what) + " has residual " +
                                                                          l.residual.to_string());
    return l.exponent;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NotInImage) throw;
    throw Error(ErrorCode::NotInImage, std::string(what) + " is not a power of the unit");
  }
}

std::string fmt17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

struct Resolved {
  std::optional<Tuple4> tuple;
  Word word;
  GroupMatrix matrix;  // sign-normalized
};

std::vector<Resolved> resolve_labels(std::span<const LabelTriple> labels, const GroupPreset& preset) {
  std::vector<Resolved> out;
  out.reserve(labels.size());
  std::vector<Word> words;
  if (preset.codebook_kind == CodebookKind::Words) {
    std::int64_t max_m = 0;
    for (const auto& l : labels) max_m = std::max(max_m, l.m);
    if (max_m > 0) words = enumerate_words(preset, static_cast<std::size_t>(max_m));
  }
  for (const auto& l : labels) {
    Resolved r;
    if (preset.codebook_kind == CodebookKind::Quaternion) {
      if (l.m < 1 || l.k1 < 0 || l.k2 < 0) throw Error(ErrorCode::UnknownLabel, to_string(l) + " is not a phi label");
      r.tuple = gen_phi(l.m, l.k1, l.k2);
      r.matrix = sign_normalize(tuple_to_matrix(*r.tuple)).first;
    } else {
      if (l.m < 1 || l.k1 != 0 || l.k2 != 0 || static_cast<std::size_t>(l.m) > words.size())
        throw Error(ErrorCode::UnknownLabel, to_string(l) + " does not index a word of " + preset.name);
      r.word = words[static_cast<std::size_t>(l.m - 1)];
      r.matrix = sign_normalize(word_to_matrix(r.word, preset)).first;
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

}  // namespace

std::string to_string(const Tuple4& t) {
  return "(" + std::to_string(t.x) + "," + std::to_string(t.y) + "," + std::to_string(t.z) + "," +
         std::to_string(t.t) + ")";
}

std::string to_string(const LabelTriple& l) {
  return "(" + std::to_string(l.m) + "," + std::to_string(l.k1) + "," + std::to_string(l.k2) + ")";
}

Tuple4 gen_phi(std::int64_t m, std::int64_t k1, std::int64_t k2) {
  if (m < 1 || k1 < 0 || k2 < 0)
    throw Error(ErrorCode::InvalidArgument, "gen_phi needs m >= 1 and k1, k2 >= 0");
  const QuadElement em = unit_power(eps3(), m);
  const QuadElement xy = QuadElement(3, em.p()) * unit_power(eps3(), k1);
  const QuadElement zt = QuadElement(3, 0, em.q()) * unit_power(eps3(), k2);
  return {to_i64(xy.p(), "x"), to_i64(xy.q(), "y"), to_i64(zt.p(), "z"), to_i64(zt.q(), "t")};
}

LabelTriple invert_phi(const Tuple4& tp) {
  const BigInt x = tp.x, y = tp.y, z = tp.z, t = tp.t;
  const BigInt am = exact_sqrt(x * x - 3 * y * y);
  const BigInt b3 = 3 * t * t - z * z;
  if (am <= 0 || b3 % 3 != 0) throw Error(ErrorCode::NotInImage, to_string(tp) + ": a_m is not a positive integer");
  const BigInt bm = exact_sqrt(b3 / 3);
  if (bm <= 0) throw Error(ErrorCode::NotInImage, to_string(tp) + ": b_m is not a positive integer");

  const Rational a_r(am), b_r(bm);
  const std::int64_t m = exact_log(QuadElement(3, a_r, b_r), "a_m + sqrt3 b_m");
  const std::int64_t k1 = exact_log(QuadElement(3, Rational(tp.x) / a_r, Rational(tp.y) / a_r), "x + sqrt3 y");
  // (z + sqrt3 t) / (sqrt3 b_m) = t / b_m + sqrt3 z / (3 b_m)
  const std::int64_t k2 =
      exact_log(QuadElement(3, Rational(tp.t) / b_r, Rational(tp.z) / (Rational(3) * b_r)), "z + sqrt3 t");
  if (m < 1 || k1 < 0 || k2 < 0) throw Error(ErrorCode::NotInImage, to_string(tp) + " has a negative exponent");
  const LabelTriple l{m, k1, k2};
  if (gen_phi(m, k1, k2) != tp) throw Error(ErrorCode::NotInImage, to_string(tp) + " fails the phi check");
  return l;
}

Tuple4 matrix_to_tuple(const GroupMatrix& g) {
  const auto& a = g.a();
  const auto& b = g.b();
  const auto& c = g.c();
  const auto& d = g.d();
  auto bad = [] { return Error(ErrorCode::NotInOrderPattern, "matrix is not phi of an integral quaternion"); };
  for (const TowerElement* e : {&a, &b, &c, &d})
    if (!e->c2().is_zero() || !e->c6().is_zero()) throw bad();
  if (a.c1() != d.c1() || a.c3() != -d.c3() || b.c1() != -c.c1() || b.c3() != c.c3()) throw bad();
  for (const Rational* r : {&a.c1(), &a.c3(), &b.c1(), &b.c3()})
    if (!r->is_integer() || !r->to_int64()) throw bad();
  return {*a.c1().to_int64(), *a.c3().to_int64(), *b.c1().to_int64(), *b.c3().to_int64()};
}

GroupMatrix tuple_to_matrix(const Tuple4& tp) {
  return embed_unit(Quaternion{AlgebraParams{}, tp.x, tp.y, tp.z, tp.t});
}

std::vector<LabelTriple> spiral_labels(std::size_t n) {
  std::vector<LabelTriple> out;
  for (std::int64_t shell = 1; out.size() < n; ++shell) {
    for (std::int64_t m = 1; m <= shell && out.size() < n; ++m)
      for (std::int64_t k1 = 0; k1 <= shell && out.size() < n; ++k1)
        for (std::int64_t k2 = 0; k2 <= shell && out.size() < n; ++k2)
          if (std::max({m, k1, k2}) == shell) out.push_back({m, k1, k2});
  }
  return out;
}

std::optional<std::size_t> Codebook::find(const LabelTriple& label) const {
  for (std::size_t i = 0; i < entries.size(); ++i)
    if (entries[i].label == label) return i;
  return std::nullopt;
}

std::vector<std::complex<double>> Codebook::points() const {
  std::vector<std::complex<double>> p;
  p.reserve(entries.size());
  for (const auto& e : entries) p.push_back(e.point);
  return p;
}

Codebook build_codebook(std::span<const LabelTriple> labels, std::shared_ptr<const GroupPreset> preset, PointH tau,
                        bool duplicate) {
  if (!preset) throw Error(ErrorCode::InvalidArgument, "build_codebook needs a preset");
  if (domain_contains(preset->domain, tau) != Membership::Interior)
    throw Error(ErrorCode::TauNotInterior, "tau is not an interior point of the " + preset->name + " domain");
  if (std::set<LabelTriple>(labels.begin(), labels.end()).size() != labels.size())
    throw Error(ErrorCode::InvalidArgument, "codebook labels must be distinct");

  Codebook book;
  book.tau = tau;
  book.preset_name = preset->name;
  book.duplicated = duplicate;
  auto resolved = resolve_labels(labels, *preset);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    CodebookEntry e{labels[i], resolved[i].tuple, resolved[i].word, resolved[i].matrix, {}, 1};
    e.point = moebius_apply(e.matrix, tau).z();
    book.entries.push_back(e);
  }
  if (duplicate) {
    const std::size_t n = book.entries.size();
    for (std::size_t i = 0; i < n; ++i) {
      CodebookEntry e = book.entries[i];
      e.label = e.label.negated();
      e.point = -e.point;
      e.sign = -1;
      book.entries.push_back(std::move(e));
    }
  }
  for (std::size_t i = 0; i < book.entries.size(); ++i)
    for (std::size_t j = i + 1; j < book.entries.size(); ++j)
      if (std::abs(book.entries[i].point - book.entries[j].point) <= 1e-9)
        throw Error(ErrorCode::CollidingPoints, to_string(book.entries[i].label) + " and " +
                                                    to_string(book.entries[j].label) + " map to the same point");
  book.preset = std::move(preset);
  return book;
}

std::vector<LabelTriple> default_labels(const GroupPreset& preset, std::size_t size) {
  if (preset.codebook_kind == CodebookKind::Quaternion) return spiral_labels(size);
  std::vector<LabelTriple> out;
  for (std::size_t i = 1; i <= size; ++i) out.push_back({static_cast<std::int64_t>(i), 0, 0});
  return out;
}

Codebook make_codebook(std::shared_ptr<const GroupPreset> preset, std::size_t size, bool duplicate,
                       std::optional<PointH> tau) {
  if (!preset) throw Error(ErrorCode::InvalidArgument, "make_codebook needs a preset");
  const auto labels = default_labels(*preset, size);
  if (!tau) {
    if (preset->is_strip() && !labels.empty()) {
      std::vector<GroupMatrix> mats;
      for (auto& r : resolve_labels(labels, *preset)) mats.push_back(std::move(r.matrix));
      tau = optimize_tau(mats, preset->domain);
    } else {
      tau = preset->base_point_default;
    }
  }
  return build_codebook(labels, std::move(preset), *tau, duplicate);
}

PointH optimize_tau(std::span<const GroupMatrix> matrices, const DomainSpec& dom, GridResolution grid) {
  const auto* strip = std::get_if<StripDomain>(&dom);
  if (!strip) throw Error(ErrorCode::InvalidArgument, "optimize_tau needs a strip domain");
  if (matrices.empty()) throw Error(ErrorCode::InvalidArgument, "optimize_tau needs at least one matrix");
  const PointH deep = deepest_point(dom, grid);
  std::vector<std::complex<double>> targets;
  for (const auto& g : matrices) targets.push_back(moebius_apply(g, deep).z());
  auto objective = [&](PointH z) {
    double s = 0.0;
    for (std::size_t k = 0; k < matrices.size(); ++k) s += std::norm(moebius_apply(matrices[k], z).z() - targets[k]);
    return s;
  };

  const double lam = strip->lambda;
  const double im_floor = lam * 1e-3;
  double x0 = -lam, x1 = lam, y0 = im_floor, y1 = lam;
  PointH best{};
  double best_obj = INFINITY;
  for (int pass = 0; pass <= grid.refinements; ++pass) {
    const double dx = (x1 - x0) / (grid.points - 1);
    const double dy = (y1 - y0) / (grid.points - 1);
    for (int i = 0; i < grid.points; ++i) {
      for (int j = 0; j < grid.points; ++j) {
        const PointH z{x0 + i * dx, y0 + j * dy};
        if (domain_contains(dom, z) != Membership::Interior) continue;
        if (const double o = objective(z); o < best_obj) {
          best_obj = o;
          best = z;
        }
      }
    }
    if (!std::isfinite(best_obj)) throw Error(ErrorCode::EmptyDomain, "no interior grid point");
    x0 = best.re - 2.0 * dx;
    x1 = best.re + 2.0 * dx;
    y0 = std::max(im_floor, best.im - 2.0 * dy);
    y1 = best.im + 2.0 * dy;
  }
  return best;
}

std::complex<double> encode(const Codebook& book, const LabelTriple& label) {
  const auto i = book.find(label);
  if (!i) throw Error(ErrorCode::UnknownLabel, to_string(label) + " is not in the codebook");
  return book.entries[*i].point;
}

DecodeResult decode_detailed(const Codebook& book, std::complex<double> v) {
  if (!book.preset) throw Error(ErrorCode::InvalidArgument, "codebook has no preset");
  if (v.imag() == 0.0) throw Error(ErrorCode::RealAxisSignal, "received a real signal");
  int sign = 1;
  if (v.imag() < 0.0) {
    v = -v;
    sign = -1;
  }
  const ReductionResult red = reduce_point(*book.preset, PointH::from(v));
  const GroupMatrix gamma = sign_normalize(red.matrix.inverse()).first;

  LabelTriple label;
  if (book.preset->codebook_kind == CodebookKind::Quaternion) {
    Tuple4 tp = matrix_to_tuple(gamma);
    if (tp.x < 0) tp = {-tp.x, -tp.y, -tp.z, -tp.t};  // +-gamma act alike; phi images have x > 0
    label = invert_phi(tp);
  } else {
    const Mat2d& gn = gamma.numeric();
    const CodebookEntry* hit = nullptr;
    for (const auto& e : book.entries) {
      if (e.sign != 1) continue;
      const Mat2d& en = e.matrix.numeric();
      if (std::abs(en.a - gn.a) + std::abs(en.b - gn.b) + std::abs(en.c - gn.c) + std::abs(en.d - gn.d) > 1e-6)
        continue;
      if (e.matrix == gamma) {
        hit = &e;
        break;
      }
    }
    if (!hit) throw Error(ErrorCode::NotInImage, "reduced to a group element outside the codebook");
    label = hit->label;
  }
  if (sign < 0) label = label.negated();
  return {label, red.steps};
}

Rates compute_rates(const Codebook& book) {
  if (book.entries.empty()) throw Error(ErrorCode::EmptyConstellation, "rates of an empty codebook");
  return {std::log2(static_cast<double>(book.entries.size())), 3.0};
}

std::string export_codebook_csv(const Codebook& book) {
  std::string out = "m,k1,k2,x,y,z,t,re,im,sign\n";
  for (const auto& e : book.entries) {
    out += std::to_string(e.label.m) + "," + std::to_string(e.label.k1) + "," + std::to_string(e.label.k2) + ",";
    if (e.tuple) {
      const Tuple4& t = *e.tuple;
      out += std::to_string(t.x) + "," + std::to_string(t.y) + "," + std::to_string(t.z) + "," + std::to_string(t.t);
    } else {
      out += ",,,";
    }
    out += "," + fmt17(e.point.real()) + "," + fmt17(e.point.imag()) + "," + std::to_string(e.sign) + "\n";
  }
  return out;
}

Codebook import_codebook_csv(const std::string& text, std::shared_ptr<const GroupPreset> preset) {
  if (!preset) throw Error(ErrorCode::InvalidArgument, "import needs a preset");
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != "m,k1,k2,x,y,z,t,re,im,sign")
    throw Error(ErrorCode::Parse, "codebook CSV header mismatch");

  struct Row {
    LabelTriple label;
    std::optional<Tuple4> tuple;
    std::complex<double> point;
    int sign;
  };
  std::vector<Row> rows;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto c = split_csv(line);
    auto fail = [&] { return Error(ErrorCode::Parse, "codebook CSV line " + std::to_string(line_no)); };
    if (c.size() != 10) throw fail();
    try {
      Row r;
      r.label = {std::stoll(c[0]), std::stoll(c[1]), std::stoll(c[2])};
      if (!c[3].empty()) r.tuple = Tuple4{std::stoll(c[3]), std::stoll(c[4]), std::stoll(c[5]), std::stoll(c[6])};
      r.point = {std::stod(c[7]), std::stod(c[8])};
      r.sign = std::stoi(c[9]);
      if (r.sign != 1 && r.sign != -1) throw fail();
      rows.push_back(r);
    } catch (const std::logic_error&) {
      throw fail();
    }
  }

  std::vector<LabelTriple> labels;
  bool duplicate = false;
  for (const auto& r : rows) {
    if (r.sign > 0) labels.push_back(r.label);
    else duplicate = true;
  }
  Codebook book;
  try {
    PointH tau = preset->base_point_default;
    if (!labels.empty()) {
      const auto first = resolve_labels(std::span(labels).first(1), *preset);
      const auto it = std::find_if(rows.begin(), rows.end(), [](const Row& r) { return r.sign > 0; });
      tau = moebius_apply(first[0].matrix.inverse(), PointH::from(it->point));
    }
    book = build_codebook(labels, std::move(preset), tau, duplicate);
  } catch (const Error& e) {
    throw Error(ErrorCode::Parse, std::string("codebook CSV does not fit the preset: ") + e.what());
  }
  if (book.entries.size() != rows.size()) throw Error(ErrorCode::Parse, "codebook CSV rows do not match its labels");
  for (const auto& r : rows) {
    const auto i = book.find(r.label);
    if (!i) throw Error(ErrorCode::Parse, "codebook CSV label " + to_string(r.label) + " is inconsistent");
    auto& e = book.entries[*i];
    if (e.sign != r.sign || (r.tuple && e.tuple != r.tuple) || (r.tuple.has_value() != e.tuple.has_value()) ||
        std::abs(e.point - r.point) > 1e-8 * (1.0 + std::abs(r.point)))
      throw Error(ErrorCode::Parse, "codebook CSV row " + to_string(r.label) + " disagrees with the preset");
    e.point = r.point;
  }
  return book;
}

}  // namespace fuchsian
