#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "radon/radon.hpp"

namespace {

using namespace radon;

enum Exit { ok = 0, usage = 1, check_failed = 2, io = 3 };

struct CheckFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void write_text(const std::string& path, const std::string& text) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw IoError("cannot open for writing: " + path);
  os << text;
  if (!os) throw IoError("write failed: " + path);
}

struct PhantomArgs {
  std::string kind = "dog";
  std::size_t size = 128;
  double spacing = 0.25;
  double radius = 1.0;
  std::string out, pgm;
};

int cmd_phantom(const PhantomArgs& a) {
  const Grid2 g = Grid2::centered(a.size, a.spacing);
  if (a.kind == "disk") {
    const double half = 0.5 * static_cast<double>(a.size - 1) * a.spacing;
    if (!(a.radius > 0.0) || a.radius > half)
      throw UsageError("disk radius " + std::to_string(a.radius) + " exceeds the half-width " + std::to_string(half));
  }
  RfaFile f;
  f.kind = "image";
  f.image = sample(make_phantom(a.kind, a.radius), g);
  save_rfa(a.out, f);
  if (!a.pgm.empty()) save_pgm(a.pgm, f.image);
  return ok;
}

struct RadonArgs {
  std::string family = "polar";
  std::string in, out;
  std::size_t angles = 90, offsets = 256, slopes = 128;
  double slope_range = 1.25;
  double alpha = 0.5;
  double r_min = 1e-3, r_switch = 0.5, r_step = 0.05, r_max = 6.0;
  std::size_t lattice_size = 0;
  double lattice_spacing = 0.0;
};

int cmd_radon(const RadonArgs& a) {
  const RfaFile in = load_rfa(a.in);
  if (in.kind != "image") throw UsageError("radon needs an image file, got " + in.kind);
  const Image& img = in.image;
  // offsets and circle centers follow the lattice; by default the image grid itself
  const Grid2 lat = a.lattice_size > 0 ? Grid2::centered(a.lattice_size, a.lattice_spacing > 0.0 ? a.lattice_spacing
                                                                                                   : img.grid.dx)
                                       : img.grid;
  RfaFile out;
  if (a.family == "polar") {
    out.kind = "sino_polar";
    out.polar = radon_polar(img, default_angles(a.angles), default_offsets(lat, a.offsets), default_step(img.grid));
  } else if (a.family == "affine") {
    out.kind = "sino_affine";
    out.affine = radon_affine(img, default_slopes(a.slopes, a.slope_range), default_offsets(lat, a.offsets),
                              default_step(img.grid));
  } else if (a.family == "circular") {
    out.kind = "sino_circular";
    out.circular = radon_circular(img, lat, hybrid_radii(a.r_min, a.r_switch, a.r_step, a.r_max), a.alpha);
  } else {
    throw UsageError("unknown family: " + a.family);
  }
  save_rfa(a.out, out);
  return ok;
}

int cmd_unitarize(const std::string& in_path, const std::string& out_path) {
  RfaFile f = load_rfa(in_path);
  if (f.kind == "sino_polar")
    f.polar = apply_I_polar(f.polar);
  else if (f.kind == "sino_affine")
    f.affine = apply_I_affine(f.affine);
  else if (f.kind == "sino_circular")
    f.circular = apply_I_circular(f.circular);
  else
    throw UsageError("unitarize needs a sinogram file, got " + f.kind);
  save_rfa(out_path, f);
  return ok;
}

std::string report_table(const ExperimentConfig& c, const ReconstructionReport& r) {
  std::string out = "key,value\n";
  char buf[128];
  auto row = [&](const char* k, double v) {
    std::snprintf(buf, sizeof buf, "%s,%.6e\n", k, v);
    out += buf;
  };
  out += "family," + r.family + "\n";
  if (c.input.empty()) out += "phantom," + c.phantom_name() + "\n";
  out += "planes," + std::to_string(r.planes) + "\n";
  out += "lattice," + std::to_string(r.lattice_n1) + "x" + std::to_string(r.lattice_n2) + "\n";
  row("energy_coefficients", r.energy_rhs);
  // the remaining rows compare against the phantom
  if (!c.input.empty()) return out;
  row("rel_l2_error", r.rel_l2_error);
  row("peak_error", r.peak_error);
  row("budget", c.budget());
  row("energy_in_band", r.energy_lhs);
  row("energy_residual", r.energy_residual());
  row("energy_total", r.energy_total);
  return out;
}

int cmd_invert(const std::string& config, const std::vector<std::string>& sets, const std::string& pgm) {
  ExperimentConfig c = config.empty() ? ExperimentConfig{} : load_config(config);
  for (const auto& kv : sets) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) throw UsageError("expected key=value, got " + kv);
    apply_setting(c, detail::trim(kv.substr(0, eq)), detail::trim(kv.substr(eq + 1)));
  }
  const ExperimentResult r = run_experiment(c);
  const std::string table = report_table(c, r.report);
  std::cout << table;
  std::cerr << "seconds " << r.rec.report.seconds << "\n";
  if (!c.out_report.empty()) write_text(c.out_report, table);
  if (!c.out_image.empty()) {
    RfaFile f;
    f.kind = "image";
    f.image = r.rec.image;
    save_rfa(c.out_image, f);
  }
  if (!pgm.empty()) save_pgm(pgm, r.rec.image);
  if (c.input.empty() && !(r.report.rel_l2_error <= c.budget()))
    throw CheckFailure("round trip error above budget for family " + c.family);
  return ok;
}

int cmd_calpha(double alpha, double tolerance) {
  const double ca = c_alpha(alpha, CalphaScheme::adaptive_simpson);
  const double cb = c_alpha(alpha, CalphaScheme::midpoint);
  const double gap = std::abs(ca - cb) / std::abs(ca);
  std::printf("scheme,c_alpha,k_alpha\n");
  std::printf("adaptive_simpson,%.12e,%.12e\n", ca, 1.0 / std::sqrt(ca));
  std::printf("midpoint,%.12e,%.12e\n", cb, 1.0 / std::sqrt(cb));
  std::printf("relative_gap,%.3e\n", gap);
  if (!(gap <= tolerance)) throw CheckFailure("c_alpha quadrature schemes disagree");
  return ok;
}

int cmd_verify(const std::string& suite, std::uint64_t seed, const std::string& out) {
  const Checks checks = run_suite(suite, seed);
  const std::string table = format_table(checks);
  std::cout << table;
  for (const auto& c : checks)
    if (!c.time_ok()) std::cerr << c.property << " took " << c.seconds << " s, limit " << c.time_budget << " s\n";
  if (!out.empty()) write_text(out, table);
  for (const auto& c : checks)
    if (!c.pass()) throw CheckFailure("verify suite " + suite + " has failing checks");
  return ok;
}

int fail(const char* code, const std::string& what, int status) {
  std::cerr << "error[" << code << "]: " << what << "\n";
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Group-covariant Radon transforms: phantoms, sinograms, unitarization and wavelet inversion"};
  app.require_subcommand(1);

  PhantomArgs ph;
  auto* phantom = app.add_subcommand("phantom", "write a phantom image");
  phantom->add_option("--kind", ph.kind, "gaussian, dog, disk, bars, blobs or cone_dog")->capture_default_str();
  phantom->add_option("--size", ph.size, "samples per axis")->capture_default_str();
  phantom->add_option("--spacing", ph.spacing, "sample spacing")->capture_default_str();
  phantom->add_option("--radius", ph.radius, "disk radius")->capture_default_str();
  phantom->add_option("--out", ph.out, "RFA1 output")->required();
  phantom->add_option("--pgm", ph.pgm, "optional grayscale preview");

  RadonArgs ra;
  auto* rad = app.add_subcommand("radon", "sample the Radon transform of an image");
  rad->add_option("--family", ra.family, "polar, affine or circular")->capture_default_str();
  rad->add_option("--in", ra.in, "RFA1 image")->required();
  rad->add_option("--out", ra.out, "RFA1 sinogram")->required();
  rad->add_option("--angles", ra.angles)->capture_default_str();
  rad->add_option("--offsets", ra.offsets)->capture_default_str();
  rad->add_option("--slopes", ra.slopes)->capture_default_str();
  rad->add_option("--slope-range", ra.slope_range)->capture_default_str();
  rad->add_option("--alpha", ra.alpha)->capture_default_str();
  rad->add_option("--r-min", ra.r_min)->capture_default_str();
  rad->add_option("--r-switch", ra.r_switch)->capture_default_str();
  rad->add_option("--r-step", ra.r_step)->capture_default_str();
  rad->add_option("--r-max", ra.r_max)->capture_default_str();
  rad->add_option("--lattice-size", ra.lattice_size, "offset/center lattice size (default: image grid)");
  rad->add_option("--lattice-spacing", ra.lattice_spacing, "offset/center lattice spacing");

  std::string u_in, u_out;
  auto* uni = app.add_subcommand("unitarize", "apply the unitarizing multiplier to a sinogram");
  uni->add_option("--in", u_in, "RFA1 sinogram")->required();
  uni->add_option("--out", u_out, "RFA1 output")->required();

  std::string config, inv_pgm;
  std::vector<std::string> sets;
  auto* inv = app.add_subcommand("invert", "wavelet inversion from a sinogram or a phantom round trip");
  inv->add_option("--config", config, "key = value file");
  inv->add_option("--set", sets, "key=value override, repeatable");
  inv->add_option("--pgm", inv_pgm, "optional grayscale preview of the reconstruction");

  double alpha = 0.5, cal_tol = 1e-4;
  auto* cal = app.add_subcommand("calpha", "normalization constant of the circular family");
  cal->add_option("alpha", alpha)->capture_default_str();
  cal->add_option("--tolerance", cal_tol, "allowed relative gap between the two schemes")->capture_default_str();

  std::string suite = "all", v_out;
  std::uint64_t seed = 1;
  auto* ver = app.add_subcommand("verify", "run invariant checks and print a table");
  ver->add_option("suite", suite, "slice, unitarity, intertwining, semi_invariance, admissibility, energy, lowpass, "
                                  "roundtrip, factorized or all")
      ->capture_default_str();
  ver->add_option("--seed", seed)->capture_default_str();
  ver->add_option("--out", v_out, "write the table here as well");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    return fail("usage", e.what(), usage);
  }

  try {
    if (*phantom) return cmd_phantom(ph);
    if (*rad) return cmd_radon(ra);
    if (*uni) return cmd_unitarize(u_in, u_out);
    if (*inv) return cmd_invert(config, sets, inv_pgm);
    if (*cal) return cmd_calpha(alpha, cal_tol);
    if (*ver) return cmd_verify(suite, seed, v_out);
  } catch (const CheckFailure& e) {
    return fail("check", e.what(), check_failed);
  } catch (const UsageError& e) {
    return fail("usage", e.what(), usage);
  } catch (const DomainError& e) {
    return fail("usage", e.what(), usage);
  } catch (const IoError& e) {
    return fail("io", e.what(), io);
  } catch (const std::exception& e) {
    return fail("internal", e.what(), check_failed);
  }
  return usage;
}
