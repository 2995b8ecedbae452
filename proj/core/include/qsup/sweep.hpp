#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "qsup/state.hpp"
#include "qsup/witnesses.hpp"

namespace qsup {

// Grid over alpha: a real interval, a complex rectangle, or a fixed-modulus
// phase arc (the lower-order squeezing phase plot).
struct AlphaGrid {
  enum class Kind { Real, Rect, Polar };
  Kind kind = Kind::Real;
  // Real: [min, max] with count points. Polar: modulus fixed, phase in
  // [phase_min, phase_max] with count points.
  double min = 0.0;
  double max = 0.0;
  std::size_t count = 0;
  double im_min = 0.0;
  double im_max = 0.0;
  std::size_t im_count = 0;
  double modulus = 0.0;
  double phase_min = 0.0;
  double phase_max = 0.0;

  std::size_t size() const;
  std::complex<double> point(std::size_t index) const;
};

struct SweepSpec {
  std::vector<Witness> witnesses;
  std::vector<int> orders;     // l or m, per witness where applicable
  std::vector<double> r_values;
  AlphaGrid alpha;

  static SweepSpec from_json_text(std::string_view text);
  static SweepSpec from_json_file(const std::string& path);
  std::size_t grid_size() const;
};

struct SweepRow {
  std::string witness;
  int order = 0;
  double alpha_re = 0.0;
  double alpha_im = 0.0;
  double r = 0.0;
  double value = 0.0;
  bool nonclassical = false;
  bool degenerate = false;
};

// Evaluates the selected witnesses over the full grid in deterministic
// lexicographic order (witness, order, r, alpha). Degenerate points are
// flagged, never dropped. Throws SpecTooLarge above 1e7 rows.
std::vector<SweepRow> run_sweep(const SweepSpec& spec);

// Nonclassicality domains detected per criterion over the r-alpha plane.
struct MaskSpec {
  double alpha_min = 0.01;
  double alpha_max = 2.0;
  std::size_t alpha_count = 100;
  double r_min = 0.0;
  double r_max = 0.99;
  std::size_t r_count = 100;
  int order = 2;              // l for mandel/hoa/hosps/hos
  int klyshko_m = 3;          // most-negative index for moderate amplitudes
  std::complex<double> beta{0.1, 0.0};
  std::vector<std::string> criteria{"mandel", "hoa",     "hosps",   "hos",
                                    "a3",     "klyshko", "psmatrix"};

  static MaskSpec from_json_text(std::string_view text);
  static MaskSpec from_json_file(const std::string& path);
};

struct MaskResult {
  MaskSpec spec;
  // Row-major over (r outer, alpha inner); one boolean layer per criterion in
  // spec.criteria order.
  std::vector<double> alpha_values;
  std::vector<double> r_values;
  std::vector<std::vector<bool>> layers;
};

MaskResult domain_mask(const MaskSpec& spec);

}  // namespace qsup
