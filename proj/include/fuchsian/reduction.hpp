#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fuchsian/group_matrix.hpp"
#include "fuchsian/hyperbolic.hpp"

namespace fuchsian {

struct Generator {
  std::string name;
  GroupMatrix matrix;
  GroupMatrix inverse;

  Generator(std::string n, GroupMatrix m) : name(std::move(n)), matrix(std::move(m)), inverse(matrix.inverse()) {}
};

struct Letter {
  std::string generator;
  std::int64_t exponent = 1;

  friend bool operator==(const Letter&, const Letter&) = default;
};

/// Ordered product: the word [l0, l1, ...] denotes l0 * l1 * ...
using Word = std::vector<Letter>;

std::string to_string(const Word& w);

/// How codewords are labelled for a preset.
enum class CodebookKind {
  Words,       // reduced words over the generators
  Quaternion,  // gen_phi triples embedded through (3,-1)
};

struct GroupPreset {
  std::string name;
  std::vector<Generator> generators;
  DomainSpec domain;
  PointH base_point_default;
  CodebookKind codebook_kind = CodebookKind::Words;
  /// Index into generators of the strip homothety (strip presets only).
  std::optional<std::size_t> homothety;
  /// Every generator's inverse is, up to sign, another generator.
  bool inverse_closed = false;

  const Generator& generator(const std::string& name) const;
  bool is_strip() const { return std::holds_alternative<StripDomain>(domain); }
};

/// Builds a strip preset: domain S(lambda) from the homothety, cut by the
/// isometry circles of every other generator and its inverse.
GroupPreset make_strip_preset(std::string name, std::vector<Generator> generators, std::size_t homothety,
                              PointH base_point, CodebookKind kind = CodebookKind::Words);

/// Builds a Dirichlet preset centred at `center`.
GroupPreset make_dirichlet_preset(std::string name, std::vector<Generator> generators, PointH center,
                                  CodebookKind kind = CodebookKind::Quaternion);

/// The signature (1;2) group e2d1D6ii with its rectangle domain.
const GroupPreset& preset_e2d1D6ii();
/// Norm-one units of the natural order Z<I,J> of (3,-1), with the Dirichlet
/// domain used for decoding.
const GroupPreset& preset_gamma61();
/// Lookup by name ("e2d1D6ii", "gamma61"); nullptr if unknown.
const GroupPreset* find_builtin_preset(const std::string& name);

struct ReductionResult {
  Word word;           // word_to_matrix(word) == matrix
  GroupMatrix matrix;  // the reducer delta: delta(z) = reduced_point
  PointH reduced_point;
  std::int64_t steps = 0;  // generator applications
};

inline constexpr std::int64_t kDefaultMaxSteps = 512;

/// Point reduction for strip presets: fold into S(lambda) with a power of the
/// homothety, then leave the interiors of the isometry circles by applying
/// the generator that owns the circle, until the point lands in F.
ReductionResult reduce_point_1e(const GroupPreset& preset, PointH z, std::int64_t max_steps = kDefaultMaxSteps);

/// Greedy descent toward `center`: apply the generator (or, with
/// include_inverses, generator inverse) whose image is closest to center while
/// that strictly decreases the distance.
ReductionResult reduce_point_dirichlet(std::span<const Generator> generators, PointH center, PointH z,
                                       std::int64_t max_steps = kDefaultMaxSteps, bool include_inverses = true);

/// Dispatches on the preset's domain.
ReductionResult reduce_point(const GroupPreset& preset, PointH z, std::int64_t max_steps = kDefaultMaxSteps);

/// embed_phi of every (x,y,z,t) in [-box, box]^4 with x^2 - 3y^2 + z^2 - 3t^2 = 1,
/// lexicographic in (x,y,z,t).
std::vector<GroupMatrix> enumerate_norm_one_units(std::int64_t box);

/// Returns (+g, +1) when the first-column sum a + c is positive, else (-g, -1).
std::pair<GroupMatrix, int> sign_normalize(const GroupMatrix& g);

GroupMatrix word_to_matrix(const Word& word, const GroupPreset& preset);

/// Non-identity reduced words (no letter next to its inverse) over the
/// generators in length-lex order, skipping words whose matrix repeats one
/// already listed up to sign. Stops after `limit` words or at max_length.
std::vector<Word> enumerate_words(const GroupPreset& preset, std::size_t limit, std::size_t max_length = 64);

}  // namespace fuchsian
