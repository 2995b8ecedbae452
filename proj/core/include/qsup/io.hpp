#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qsup/phase_space.hpp"
#include "qsup/sweep.hpp"

namespace qsup {

// Shortest-width decimal with 17 significant digits, locale-independent;
// byte-deterministic for a given value.
std::string format_double(double value);

// CSV schema: witness,order,alpha_re,alpha_im,r,value,nonclassical,degenerate
// with booleans as 0/1. Byte-deterministic for fixed rows.
void emit_csv(const std::vector<SweepRow>& rows, std::ostream& out);
void emit_json(const std::vector<SweepRow>& rows, std::ostream& out);
std::vector<SweepRow> parse_csv(std::istream& in);

// Phase grid CSV: header re,im,q, row-major with the re index outer.
void emit_grid_csv(const PhaseGrid& grid, std::ostream& out);

void emit_mask_csv(const MaskResult& mask, std::ostream& out);

}  // namespace qsup
