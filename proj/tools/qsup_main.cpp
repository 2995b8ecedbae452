// Command-line surface over the qsup library: single-point witness
// evaluations, Husimi grids, parameter sweeps, nonclassicality masks, the
// heralding simulator, and the closed-form-vs-oracle verifier.

#include <complex>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "qsup/herald.hpp"
#include "qsup/io.hpp"
#include "qsup/moments.hpp"
#include "qsup/oracle.hpp"
#include "qsup/phase_space.hpp"
#include "qsup/sweep.hpp"
#include "qsup/witnesses.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumeric = 3;

struct CommonArgs {
  double alpha_re = 0.0;
  double alpha_im = 0.0;
  double r = 0.0;
  int order = 2;
  double tail_tol = 1e-12;
  std::string format = "csv";
  std::string out_path;
};

void add_common(CLI::App* cmd, CommonArgs& args, bool with_order = true) {
  cmd->add_option("--alpha-re", args.alpha_re, "Re(alpha)");
  cmd->add_option("--alpha-im", args.alpha_im, "Im(alpha)");
  cmd->add_option("--r", args.r, "superposition weight r in [0, 1]");
  if (with_order) cmd->add_option("--order", args.order, "witness order l or m");
  cmd->add_option("--tail-tol", args.tail_tol, "Fock truncation tail tolerance");
  cmd->add_option("--format", args.format, "output format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", args.out_path, "output path (default stdout)");
}

void write_output(const std::string& out_path, const std::string& payload) {
  if (out_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw qsup::IoError("cannot open output file: " + out_path);
  out << payload;
  if (!out) throw qsup::IoError("failed writing output file: " + out_path);
}

std::string render_rows(const std::vector<qsup::SweepRow>& rows,
                        const std::string& format) {
  std::ostringstream buffer;
  if (format == "json") {
    qsup::emit_json(rows, buffer);
  } else {
    qsup::emit_csv(rows, buffer);
  }
  return buffer.str();
}

qsup::SweepRow to_row(const qsup::WitnessRecord& rec) {
  qsup::SweepRow row;
  row.witness = std::string(qsup::witness_name(rec.name));
  row.order = rec.order;
  row.alpha_re = rec.params.alpha.real();
  row.alpha_im = rec.params.alpha.imag();
  row.r = rec.params.r;
  row.value = rec.degenerate ? 0.0 : rec.value;
  row.nonclassical = rec.nonclassical;
  row.degenerate = rec.degenerate;
  return row;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"nonclassicality witnesses of (t a + r adag)|alpha>"};
  app.require_subcommand(1);

  CommonArgs args;

  auto* cmd_moments = app.add_subcommand("moments", "general moment <adag^m a^n>");
  int moment_m = 1;
  int moment_n = 1;
  add_common(cmd_moments, args, false);
  cmd_moments->add_option("--m", moment_m, "dagger power");
  cmd_moments->add_option("--n", moment_n, "annihilation power");

  auto* cmd_mandel = app.add_subcommand("mandel", "higher-order Mandel Q");
  add_common(cmd_mandel, args);
  auto* cmd_hoa = app.add_subcommand("hoa", "higher-order antibunching d(l-1)");
  add_common(cmd_hoa, args);
  auto* cmd_hosps = app.add_subcommand("hosps", "higher-order sub-Poissonian statistics");
  add_common(cmd_hosps, args);
  auto* cmd_hos = app.add_subcommand("hos", "Hong-Mandel higher-order squeezing");
  add_common(cmd_hos, args);
  std::optional<double> hos_phase;
  cmd_hos->add_option("--phase", hos_phase, "rotate alpha to |alpha| e^{i phase}");

  auto* cmd_qfunc = app.add_subcommand("qfunc", "Husimi Q on a grid or point");
  add_common(cmd_qfunc, args, false);
  std::optional<double> beta_re;
  std::optional<double> beta_im;
  qsup::GridSpec grid_spec;
  bool grid_given = false;
  cmd_qfunc->add_option("--beta-re", beta_re, "single-point Re(beta)");
  cmd_qfunc->add_option("--beta-im", beta_im, "single-point Im(beta)");
  cmd_qfunc->add_option("--re-min", grid_spec.re_min)->each([&](const std::string&) { grid_given = true; });
  cmd_qfunc->add_option("--re-max", grid_spec.re_max)->each([&](const std::string&) { grid_given = true; });
  cmd_qfunc->add_option("--im-min", grid_spec.im_min)->each([&](const std::string&) { grid_given = true; });
  cmd_qfunc->add_option("--im-max", grid_spec.im_max)->each([&](const std::string&) { grid_given = true; });
  cmd_qfunc->add_option("--n-re", grid_spec.n_re)->each([&](const std::string&) { grid_given = true; });
  cmd_qfunc->add_option("--n-im", grid_spec.n_im)->each([&](const std::string&) { grid_given = true; });

  auto* cmd_psmatrix = app.add_subcommand("psmatrix", "phase-space matrix determinant");
  add_common(cmd_psmatrix, args, false);
  std::optional<double> b1_re;
  std::optional<double> b1_im;
  double b2_re = 0.0;
  double b2_im = 0.0;
  cmd_psmatrix->add_option("--beta1-re", b1_re, "Re(beta1); defaults to the Husimi zero");
  cmd_psmatrix->add_option("--beta1-im", b1_im, "Im(beta1)");
  cmd_psmatrix->add_option("--beta2-re", b2_re, "Re(beta2)")->required();
  cmd_psmatrix->add_option("--beta2-im", b2_im, "Im(beta2)");

  auto* cmd_at = app.add_subcommand("agarwal-tara", "Agarwal-Tara A3 parameter");
  add_common(cmd_at, args, false);

  auto* cmd_klyshko = app.add_subcommand("klyshko", "Klyshko B(m) criterion");
  add_common(cmd_klyshko, args);

  auto* cmd_sweep = app.add_subcommand("sweep", "witness sweep from a JSON spec");
  std::string spec_path;
  cmd_sweep->add_option("--spec", spec_path, "JSON sweep spec file")->required();
  cmd_sweep->add_option("--format", args.format, "output format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd_sweep->add_option("--out", args.out_path, "output path (default stdout)");

  auto* cmd_mask = app.add_subcommand("domain-mask", "nonclassicality domains (r-alpha plane)");
  std::string mask_spec_path;
  cmd_mask->add_option("--spec", mask_spec_path, "JSON mask spec file")->required();
  cmd_mask->add_option("--out", args.out_path, "output path (default stdout)");

  auto* cmd_herald = app.add_subcommand("herald-sim", "simulate the generation scheme");
  double eta = 0.01;
  double t1 = 0.995;
  std::optional<double> r1_opt;
  double t2 = 1.0 / std::sqrt(2.0);
  std::optional<double> r2_opt;
  std::string pdc_order = "exact";
  std::string pattern = "pd1";
  cmd_herald->add_option("--alpha-re", args.alpha_re, "Re(alpha)");
  cmd_herald->add_option("--alpha-im", args.alpha_im, "Im(alpha)");
  cmd_herald->add_option("--eta", eta, "PDC coupling strength");
  cmd_herald->add_option("--t1", t1, "BS1 transmissivity");
  cmd_herald->add_option("--r1", r1_opt, "BS1 reflectivity (default sqrt(1-t1^2))");
  cmd_herald->add_option("--t2", t2, "BS2 transmissivity");
  cmd_herald->add_option("--r2", r2_opt, "BS2 reflectivity (default sqrt(1-t2^2))");
  cmd_herald->add_option("--pdc-order", pdc_order, "first or exact")
      ->check(CLI::IsMember({"first", "exact"}));
  cmd_herald->add_option("--pattern", pattern, "heralding pattern: pd1 or pd2")
      ->check(CLI::IsMember({"pd1", "pd2"}));
  cmd_herald->add_option("--out", args.out_path, "output path (default stdout)");

  auto* cmd_verify = app.add_subcommand("verify", "closed forms vs the Fock oracle");
  add_common(cmd_verify, args, false);
  double verify_tol = 1e-8;
  cmd_verify->add_option("--tol", verify_tol, "relative tolerance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    const std::complex<double> alpha{args.alpha_re, args.alpha_im};

    if (app.got_subcommand(cmd_moments)) {
      const auto params = qsup::make_state(alpha, args.r);
      const auto value = qsup::general_moment(params, moment_m, moment_n);
      std::string payload;
      if (args.format == "json") {
        nlohmann::json doc{{"m", moment_m},
                           {"n", moment_n},
                           {"alpha_re", alpha.real()},
                           {"alpha_im", alpha.imag()},
                           {"r", args.r},
                           {"value_re", value.real()},
                           {"value_im", value.imag()}};
        payload = doc.dump(2) + "\n";
      } else {
        payload = "m,n,alpha_re,alpha_im,r,value_re,value_im\n" +
                  std::to_string(moment_m) + "," + std::to_string(moment_n) + "," +
                  qsup::format_double(alpha.real()) + "," +
                  qsup::format_double(alpha.imag()) + "," +
                  qsup::format_double(args.r) + "," +
                  qsup::format_double(value.real()) + "," +
                  qsup::format_double(value.imag()) + "\n";
      }
      write_output(args.out_path, payload);
      return kExitOk;
    }

    if (app.got_subcommand(cmd_mandel) || app.got_subcommand(cmd_hoa) ||
        app.got_subcommand(cmd_hosps) || app.got_subcommand(cmd_hos) ||
        app.got_subcommand(cmd_at) || app.got_subcommand(cmd_klyshko)) {
      const auto params = qsup::make_state(alpha, args.r);
      qsup::WitnessRecord rec;
      if (app.got_subcommand(cmd_mandel)) rec = qsup::mandel_q(params, args.order);
      if (app.got_subcommand(cmd_hoa)) rec = qsup::hoa(params, args.order);
      if (app.got_subcommand(cmd_hosps)) rec = qsup::hosps(params, args.order);
      if (app.got_subcommand(cmd_hos)) rec = qsup::hos(params, args.order, hos_phase);
      if (app.got_subcommand(cmd_at)) rec = qsup::agarwal_tara(params);
      if (app.got_subcommand(cmd_klyshko)) rec = qsup::klyshko(params, args.order);
      write_output(args.out_path, render_rows({to_row(rec)}, args.format));
      return kExitOk;
    }

    if (app.got_subcommand(cmd_qfunc)) {
      const auto params = qsup::make_state(alpha, args.r);
      if (beta_re || beta_im) {
        const std::complex<double> beta{beta_re.value_or(0.0), beta_im.value_or(0.0)};
        const double q = qsup::husimi_q(params, beta);
        std::string payload;
        if (args.format == "json") {
          nlohmann::json doc{
              {"re", beta.real()}, {"im", beta.imag()}, {"q", q}};
          payload = doc.dump(2) + "\n";
        } else {
          payload = "re,im,q\n" + qsup::format_double(beta.real()) + "," +
                    qsup::format_double(beta.imag()) + "," +
                    qsup::format_double(q) + "\n";
        }
        write_output(args.out_path, payload);
        return kExitOk;
      }
      if (!grid_given) {
        grid_spec.re_min = alpha.real() - 4.0;
        grid_spec.re_max = alpha.real() + 4.0;
        grid_spec.im_min = alpha.imag() - 4.0;
        grid_spec.im_max = alpha.imag() + 4.0;
      }
      const auto grid = qsup::husimi_grid(params, grid_spec);
      std::ostringstream buffer;
      if (args.format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        const double d_re = grid_spec.n_re > 1 ? (grid_spec.re_max - grid_spec.re_min) /
                                                     static_cast<double>(grid_spec.n_re - 1)
                                               : 0.0;
        const double d_im = grid_spec.n_im > 1 ? (grid_spec.im_max - grid_spec.im_min) /
                                                     static_cast<double>(grid_spec.n_im - 1)
                                               : 0.0;
        for (std::size_t i = 0; i < grid_spec.n_re; ++i) {
          for (std::size_t j = 0; j < grid_spec.n_im; ++j) {
            arr.push_back({{"re", grid_spec.re_min + d_re * static_cast<double>(i)},
                           {"im", grid_spec.im_min + d_im * static_cast<double>(j)},
                           {"q", grid.at(i, j)}});
          }
        }
        buffer << arr.dump(2) << '\n';
      } else {
        qsup::emit_grid_csv(grid, buffer);
      }
      write_output(args.out_path, buffer.str());
      return kExitOk;
    }

    if (app.got_subcommand(cmd_psmatrix)) {
      const auto params = qsup::make_state(alpha, args.r);
      const std::complex<double> beta2{b2_re, b2_im};
      double det = 0.0;
      std::string route;
      if (b1_re || b1_im) {
        const std::complex<double> beta1{b1_re.value_or(0.0), b1_im.value_or(0.0)};
        det = qsup::psmatrix_det(params, beta1, beta2);
        route = "det";
      } else {
        det = qsup::psmatrix_special(params, beta2);
        route = "special";
      }
      std::string payload;
      if (args.format == "json") {
        nlohmann::json doc{{"route", route},
                           {"beta2_re", beta2.real()},
                           {"beta2_im", beta2.imag()},
                           {"value", det}};
        payload = doc.dump(2) + "\n";
      } else {
        payload = "route,beta2_re,beta2_im,value\n" + route + "," +
                  qsup::format_double(beta2.real()) + "," +
                  qsup::format_double(beta2.imag()) + "," +
                  qsup::format_double(det) + "\n";
      }
      write_output(args.out_path, payload);
      return kExitOk;
    }

    if (app.got_subcommand(cmd_sweep)) {
      const auto spec = qsup::SweepSpec::from_json_file(spec_path);
      const auto rows = qsup::run_sweep(spec);
      write_output(args.out_path, render_rows(rows, args.format));
      return kExitOk;
    }

    if (app.got_subcommand(cmd_mask)) {
      const auto spec = qsup::MaskSpec::from_json_file(mask_spec_path);
      const auto mask = qsup::domain_mask(spec);
      std::ostringstream buffer;
      qsup::emit_mask_csv(mask, buffer);
      write_output(args.out_path, buffer.str());
      return kExitOk;
    }

    if (app.got_subcommand(cmd_herald)) {
      qsup::SchemeConfig config;
      config.eta = eta;
      config.t1 = t1;
      config.r1 = r1_opt ? *r1_opt : std::sqrt(std::max(0.0, 1.0 - t1 * t1));
      config.t2 = t2;
      config.r2 = r2_opt ? *r2_opt : std::sqrt(std::max(0.0, 1.0 - t2 * t2));
      config.pdc_order =
          pdc_order == "first" ? qsup::PdcOrder::First : qsup::PdcOrder::Exact;
      const auto which = pattern == "pd2" ? qsup::HeraldPattern::Pd2ClickPd1Silent
                                          : qsup::HeraldPattern::Pd1ClickPd2Silent;
      const auto result = qsup::scheme_fidelity(alpha, config, which);
      nlohmann::json doc{
          {"config",
           {{"eta", config.eta},
            {"t1", config.t1.real()},
            {"r1", config.r1.real()},
            {"t2", config.t2.real()},
            {"r2", config.r2.real()},
            {"pdc_order", pdc_order},
            {"pattern", pattern},
            {"alpha_re", alpha.real()},
            {"alpha_im", alpha.imag()}}},
          {"success_probability", result.success_probability},
          {"implied_t", {{"re", result.implied_t.real()}, {"im", result.implied_t.imag()}}},
          {"implied_r", {{"re", result.implied_r.real()}, {"im", result.implied_r.imag()}}},
          {"fidelity", result.fidelity}};
      write_output(args.out_path, doc.dump(2) + "\n");
      return kExitOk;
    }

    if (app.got_subcommand(cmd_verify)) {
      const auto params = qsup::make_state(alpha, args.r);
      const auto report = qsup::verify_all(params, verify_tol);
      write_output(args.out_path, report.to_json() + "\n");
      return report.all_pass ? kExitOk : kExitVerifyFailed;
    }
  } catch (const qsup::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNumeric;
  }

  return kExitUsage;
}
