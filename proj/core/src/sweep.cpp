#include "qsup/sweep.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "qsup/phase_space.hpp"

namespace qsup {

namespace {

Witness witness_from_name(const std::string& name) {
  if (name == "mandel") return Witness::MandelQ;
  if (name == "hoa") return Witness::Hoa;
  if (name == "hosps") return Witness::Hosps;
  if (name == "hos") return Witness::Hos;
  if (name == "agarwal-tara" || name == "a3") return Witness::AgarwalTara;
  if (name == "klyshko") return Witness::Klyshko;
  throw DomainError("unknown witness name: " + name);
}

AlphaGrid alpha_grid_from_json(const nlohmann::json& j) {
  AlphaGrid grid;
  const std::string type = j.value("type", "real");
  if (type == "real") {
    grid.kind = AlphaGrid::Kind::Real;
    grid.min = j.at("min").get<double>();
    grid.max = j.at("max").get<double>();
    grid.count = j.at("count").get<std::size_t>();
  } else if (type == "rect") {
    grid.kind = AlphaGrid::Kind::Rect;
    grid.min = j.at("re_min").get<double>();
    grid.max = j.at("re_max").get<double>();
    grid.count = j.at("re_count").get<std::size_t>();
    grid.im_min = j.at("im_min").get<double>();
    grid.im_max = j.at("im_max").get<double>();
    grid.im_count = j.at("im_count").get<std::size_t>();
  } else if (type == "polar") {
    grid.kind = AlphaGrid::Kind::Polar;
    grid.modulus = j.at("modulus").get<double>();
    grid.phase_min = j.at("phase_min").get<double>();
    grid.phase_max = j.at("phase_max").get<double>();
    grid.count = j.at("count").get<std::size_t>();
  } else {
    throw DomainError("alpha grid type must be real, rect, or polar");
  }
  if (grid.size() < 1) throw DomainError("alpha grid must not be empty");
  return grid;
}

double linspace_point(double lo, double hi, std::size_t count, std::size_t i) {
  if (count <= 1) return lo;
  return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
}

}  // namespace

std::size_t AlphaGrid::size() const {
  return kind == Kind::Rect ? count * im_count : count;
}

std::complex<double> AlphaGrid::point(std::size_t index) const {
  switch (kind) {
    case Kind::Real:
      return {linspace_point(min, max, count, index), 0.0};
    case Kind::Rect: {
      const std::size_t i_re = index / im_count;
      const std::size_t i_im = index % im_count;
      return {linspace_point(min, max, count, i_re),
              linspace_point(im_min, im_max, im_count, i_im)};
    }
    case Kind::Polar:
      return std::polar(modulus, linspace_point(phase_min, phase_max, count, index));
  }
  throw DomainError("invalid alpha grid kind");
}

SweepSpec SweepSpec::from_json_text(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw IoError(std::string("spec parse error: ") + e.what());
  }
  SweepSpec spec;
  for (const auto& w : j.at("witnesses")) {
    spec.witnesses.push_back(witness_from_name(w.get<std::string>()));
  }
  for (const auto& o : j.value("orders", nlohmann::json::array({2}))) {
    spec.orders.push_back(o.get<int>());
  }
  for (const auto& r : j.at("r_values")) {
    const double rv = r.get<double>();
    if (rv < 0.0 || rv > 1.0) throw DomainError("sweep r values must lie in [0, 1]");
    spec.r_values.push_back(rv);
  }
  spec.alpha = alpha_grid_from_json(j.at("alpha"));
  return spec;
}

SweepSpec SweepSpec::from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open spec file: " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return from_json_text(buffer.str());
}

std::size_t SweepSpec::grid_size() const {
  return witnesses.size() * orders.size() * r_values.size() * alpha.size();
}

namespace {

WitnessRecord evaluate(Witness w, const StateParams& params, int order) {
  switch (w) {
    case Witness::MandelQ: return mandel_q(params, order);
    case Witness::Hoa: return hoa(params, order);
    case Witness::Hosps: return hosps(params, order);
    case Witness::Hos: return hos(params, order);
    case Witness::AgarwalTara: return agarwal_tara(params);
    case Witness::Klyshko: return klyshko(params, order);
  }
  throw DomainError("invalid witness");
}

SweepRow row_from_record(const WitnessRecord& rec, std::complex<double> alpha,
                         double r) {
  SweepRow row;
  row.witness = std::string(witness_name(rec.name));
  row.order = rec.order;
  row.alpha_re = alpha.real();
  row.alpha_im = alpha.imag();
  row.r = r;
  row.value = rec.degenerate ? 0.0 : rec.value;
  row.nonclassical = rec.nonclassical;
  row.degenerate = rec.degenerate;
  return row;
}

}  // namespace

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
  if (spec.grid_size() > 10'000'000) {
    throw SpecTooLarge("sweep limited to 1e7 grid points");
  }
  std::vector<SweepRow> rows;
  rows.reserve(spec.grid_size());
  for (Witness w : spec.witnesses) {
    for (int order : spec.orders) {
      for (double r : spec.r_values) {
        for (std::size_t i = 0; i < spec.alpha.size(); ++i) {
          const std::complex<double> alpha = spec.alpha.point(i);
          SweepRow row;
          try {
            const StateParams params = make_state(alpha, r);
            row = row_from_record(evaluate(w, params, order), alpha, r);
          } catch (const DegenerateState&) {
            row.witness = std::string(witness_name(w));
            row.order = order;
            row.alpha_re = alpha.real();
            row.alpha_im = alpha.imag();
            row.r = r;
            row.degenerate = true;
          }
          rows.push_back(std::move(row));
        }
      }
    }
  }
  return rows;
}

MaskSpec MaskSpec::from_json_text(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw IoError(std::string("mask spec parse error: ") + e.what());
  }
  MaskSpec spec;
  spec.alpha_min = j.value("alpha_min", spec.alpha_min);
  spec.alpha_max = j.value("alpha_max", spec.alpha_max);
  spec.alpha_count = j.value("alpha_count", spec.alpha_count);
  spec.r_min = j.value("r_min", spec.r_min);
  spec.r_max = j.value("r_max", spec.r_max);
  spec.r_count = j.value("r_count", spec.r_count);
  spec.order = j.value("order", spec.order);
  spec.klyshko_m = j.value("klyshko_m", spec.klyshko_m);
  if (j.contains("beta_re") || j.contains("beta_im")) {
    spec.beta = {j.value("beta_re", 0.1), j.value("beta_im", 0.0)};
  }
  if (j.contains("criteria")) {
    spec.criteria.clear();
    for (const auto& c : j.at("criteria")) spec.criteria.push_back(c.get<std::string>());
  }
  return spec;
}

MaskSpec MaskSpec::from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open mask spec file: " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return from_json_text(buffer.str());
}

namespace {

bool mask_cell(const std::string& criterion, const MaskSpec& spec,
               std::complex<double> alpha, double r) {
  StateParams params;
  try {
    params = make_state(alpha, r);
  } catch (const DegenerateState&) {
    return false;
  }
  if (criterion == "mandel") return mandel_q(params, spec.order).nonclassical;
  if (criterion == "hoa") return hoa(params, spec.order).nonclassical;
  if (criterion == "hosps") return hosps(params, spec.order).nonclassical;
  if (criterion == "hos") return hos(params, spec.order).nonclassical;
  if (criterion == "a3" || criterion == "agarwal-tara") {
    const auto rec = agarwal_tara(params);
    return rec.nonclassical;
  }
  if (criterion == "klyshko") return klyshko(params, spec.klyshko_m).nonclassical;
  if (criterion == "psmatrix") {
    if (r <= 1e-12) return false;  // no Husimi zero exists at r = 0
    const double det = psmatrix_special(params, spec.beta);
    return det < -1e-12;
  }
  if (criterion == "husimi_zero") return r > 1e-12;
  throw DomainError("unknown mask criterion: " + criterion);
}

}  // namespace

MaskResult domain_mask(const MaskSpec& spec) {
  if (spec.alpha_count * spec.r_count > 10'000'000) {
    throw SpecTooLarge("mask limited to 1e7 grid points");
  }
  if (spec.alpha_count < 1 || spec.r_count < 1 || spec.criteria.empty()) {
    throw DomainError("mask needs a non-empty grid and criteria list");
  }
  if ((spec.order % 2) != 0) {
    for (const auto& c : spec.criteria) {
      if (c == "hos") throw DomainError("hos mask layer requires an even order");
    }
  }

  MaskResult result;
  result.spec = spec;
  result.alpha_values.resize(spec.alpha_count);
  result.r_values.resize(spec.r_count);
  for (std::size_t i = 0; i < spec.alpha_count; ++i) {
    result.alpha_values[i] =
        linspace_point(spec.alpha_min, spec.alpha_max, spec.alpha_count, i);
  }
  for (std::size_t i = 0; i < spec.r_count; ++i) {
    result.r_values[i] = linspace_point(spec.r_min, spec.r_max, spec.r_count, i);
  }
  result.layers.assign(spec.criteria.size(),
                       std::vector<bool>(spec.alpha_count * spec.r_count, false));
  for (std::size_t ir = 0; ir < spec.r_count; ++ir) {
    for (std::size_t ia = 0; ia < spec.alpha_count; ++ia) {
      const std::complex<double> alpha{result.alpha_values[ia], 0.0};
      const double r = result.r_values[ir];
      for (std::size_t c = 0; c < spec.criteria.size(); ++c) {
        result.layers[c][ir * spec.alpha_count + ia] =
            mask_cell(spec.criteria[c], spec, alpha, r);
      }
    }
  }
  return result;
}

}  // namespace qsup
