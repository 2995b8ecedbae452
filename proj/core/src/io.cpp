#include "qsup/io.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

#include "json.hpp"

namespace qsup {

std::string format_double(double value) {
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value,
                                    std::chars_format::general, 17);
  return std::string(buffer, result.ptr);
}

namespace {

constexpr std::string_view kRowHeader =
    "witness,order,alpha_re,alpha_im,r,value,nonclassical,degenerate";

double parse_field_double(const std::string& field) {
  double value = 0.0;
  const auto res =
      std::from_chars(field.data(), field.data() + field.size(), value);
  if (res.ec != std::errc{} || res.ptr != field.data() + field.size()) {
    throw IoError("malformed numeric CSV field: " + field);
  }
  return value;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string current;
  for (char ch : line) {
    if (ch == ',') {
      fields.push_back(std::move(current));
      current.clear();
    } else {
      current.push_back(ch);
    }
  }
  fields.push_back(std::move(current));
  return fields;
}

}  // namespace

void emit_csv(const std::vector<SweepRow>& rows, std::ostream& out) {
  out << kRowHeader << '\n';
  for (const auto& row : rows) {
    out << row.witness << ',' << row.order << ',' << format_double(row.alpha_re)
        << ',' << format_double(row.alpha_im) << ',' << format_double(row.r) << ','
        << format_double(row.value) << ',' << (row.nonclassical ? '1' : '0') << ','
        << (row.degenerate ? '1' : '0') << '\n';
  }
  if (!out) throw IoError("failed to write CSV output");
}

void emit_json(const std::vector<SweepRow>& rows, std::ostream& out) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& row : rows) {
    arr.push_back({{"witness", row.witness},
                   {"order", row.order},
                   {"alpha_re", row.alpha_re},
                   {"alpha_im", row.alpha_im},
                   {"r", row.r},
                   {"value", row.value},
                   {"nonclassical", row.nonclassical},
                   {"degenerate", row.degenerate}});
  }
  out << arr.dump(2) << '\n';
  if (!out) throw IoError("failed to write JSON output");
}

std::vector<SweepRow> parse_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kRowHeader) {
    throw IoError("missing or unexpected CSV header");
  }
  std::vector<SweepRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto fields = split_csv_line(line);
    if (fields.size() != 8) throw IoError("CSV row must have 8 fields");
    SweepRow row;
    row.witness = fields[0];
    row.order = static_cast<int>(parse_field_double(fields[1]));
    row.alpha_re = parse_field_double(fields[2]);
    row.alpha_im = parse_field_double(fields[3]);
    row.r = parse_field_double(fields[4]);
    row.value = parse_field_double(fields[5]);
    row.nonclassical = fields[6] == "1";
    row.degenerate = fields[7] == "1";
    rows.push_back(std::move(row));
  }
  return rows;
}

void emit_grid_csv(const PhaseGrid& grid, std::ostream& out) {
  out << "re,im,q\n";
  const auto& spec = grid.spec;
  const double d_re =
      spec.n_re > 1 ? (spec.re_max - spec.re_min) / static_cast<double>(spec.n_re - 1) : 0.0;
  const double d_im =
      spec.n_im > 1 ? (spec.im_max - spec.im_min) / static_cast<double>(spec.n_im - 1) : 0.0;
  for (std::size_t i = 0; i < spec.n_re; ++i) {
    const double re = spec.re_min + d_re * static_cast<double>(i);
    for (std::size_t j = 0; j < spec.n_im; ++j) {
      const double im = spec.im_min + d_im * static_cast<double>(j);
      out << format_double(re) << ',' << format_double(im) << ','
          << format_double(grid.at(i, j)) << '\n';
    }
  }
  if (!out) throw IoError("failed to write grid CSV");
}

void emit_mask_csv(const MaskResult& mask, std::ostream& out) {
  out << "r,alpha";
  for (const auto& name : mask.spec.criteria) out << ',' << name;
  out << '\n';
  for (std::size_t ir = 0; ir < mask.r_values.size(); ++ir) {
    for (std::size_t ia = 0; ia < mask.alpha_values.size(); ++ia) {
      out << format_double(mask.r_values[ir]) << ','
          << format_double(mask.alpha_values[ia]);
      for (const auto& layer : mask.layers) {
        out << ',' << (layer[ir * mask.alpha_values.size() + ia] ? '1' : '0');
      }
      out << '\n';
    }
  }
  if (!out) throw IoError("failed to write mask CSV");
}

}  // namespace qsup
