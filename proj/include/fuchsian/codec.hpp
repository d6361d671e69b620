#pragma once

#include <array>
#include <complex>
#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fuchsian/hyperbolic.hpp"
#include "fuchsian/reduction.hpp"

namespace fuchsian {

/// (x, y, z, t) with x^2 - 3y^2 + z^2 - 3t^2 = 1.
struct Tuple4 {
  std::int64_t x = 1, y = 0, z = 0, t = 0;

  std::int64_t normic() const { return x * x - 3 * y * y + z * z - 3 * t * t; }
  friend bool operator==(const Tuple4&, const Tuple4&) = default;
};

/// (m, k1, k2); the sign of m marks the duplicated half of a codebook.
struct LabelTriple {
  std::int64_t m = 1, k1 = 0, k2 = 0;

  LabelTriple negated() const { return {-m, k1, k2}; }
  friend auto operator<=>(const LabelTriple&, const LabelTriple&) = default;
};

std::string to_string(const Tuple4& t);
std::string to_string(const LabelTriple& l);

/// phi(m, k1, k2): x + sqrt3 y = a_m eps^k1 and z + sqrt3 t = sqrt3 b_m eps^k2,
/// where a_m + sqrt3 b_m = eps^m and eps = 2 + sqrt3.
Tuple4 gen_phi(std::int64_t m, std::int64_t k1, std::int64_t k2);

/// Inverse of gen_phi on its image; NotInImage otherwise.
LabelTriple invert_phi(const Tuple4& tuple);

/// Reads (x, y, z, t) off a matrix of the form embed_phi(x + yI + zJ + tK)
/// over (3,-1). NotInOrderPattern when the entries do not fit.
Tuple4 matrix_to_tuple(const GroupMatrix& g);

/// embed_phi of the quaternion x + yI + zJ + tK in (3,-1).
GroupMatrix tuple_to_matrix(const Tuple4& tuple);

/// The first n triples with m >= 1, ordered by max(m, k1, k2), then lexicographically.
std::vector<LabelTriple> spiral_labels(std::size_t n);

struct CodebookEntry {
  LabelTriple label;
  std::optional<Tuple4> tuple;  // quaternion codebooks only
  Word word;                    // word codebooks only
  GroupMatrix matrix;           // sign-normalized
  std::complex<double> point;
  int sign = 1;
};

struct Codebook {
  std::vector<CodebookEntry> entries;
  PointH tau;
  std::string preset_name;
  std::shared_ptr<const GroupPreset> preset;
  bool duplicated = false;

  std::size_t size() const { return entries.size(); }
  /// Index of the entry with this label, or nullopt.
  std::optional<std::size_t> find(const LabelTriple& label) const;
  std::vector<std::complex<double>> points() const;
};

/// Labels are gen_phi triples for quaternion presets and (index + 1, 0, 0)
/// into enumerate_words for word presets.
Codebook build_codebook(std::span<const LabelTriple> labels, std::shared_ptr<const GroupPreset> preset, PointH tau,
                        bool duplicate);

/// Default labels for |C| = size (before duplication) and the default tau:
/// optimize_tau on strip presets, the base point otherwise.
Codebook make_codebook(std::shared_ptr<const GroupPreset> preset, std::size_t size, bool duplicate,
                       std::optional<PointH> tau = std::nullopt);

/// Labels make_codebook would use for this preset and size.
std::vector<LabelTriple> default_labels(const GroupPreset& preset, std::size_t size);

/// argmin over interior z of sum_k |g_k(z) - g_k(p)|^2 with p the deepest point.
PointH optimize_tau(std::span<const GroupMatrix> matrices, const DomainSpec& dom, GridResolution grid = {});

std::complex<double> encode(const Codebook& book, const LabelTriple& label);

struct DecodeResult {
  LabelTriple label;
  std::int64_t steps = 0;
};

/// Reduce, invert the reducer and read off the label. Throws RealAxisSignal,
/// ReductionFailed, MaxStepsExceeded, NotInImage or NotInOrderPattern.
DecodeResult decode_detailed(const Codebook& book, std::complex<double> v);
inline LabelTriple decode(const Codebook& book, std::complex<double> v) { return decode_detailed(book, v).label; }

struct Rates {
  double r;   // bits per channel use
  double rc;  // real dimensions per channel use
};
Rates compute_rates(const Codebook& book);

/// Columns m,k1,k2,x,y,z,t,re,im,sign; x..t are empty for word codebooks.
std::string export_codebook_csv(const Codebook& book);
/// Rebuilds the codebook against `preset`, recovering tau from the first entry.
Codebook import_codebook_csv(const std::string& text, std::shared_ptr<const GroupPreset> preset);

}  // namespace fuchsian
