#pragma once

#include <cmath>
#include <cstdint>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

#include "inversion.hpp"
#include "io.hpp"
#include "phantom.hpp"
#include "transforms.hpp"

namespace radon {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ExperimentConfig {
  std::string family = "polar";
  std::string phantom;  // empty picks the family default
  std::size_t image_size = 128;
  double image_spacing = 0.25;
  std::size_t oversample = 4;  // the sinogram is taken from the phantom sampled this much finer
  std::size_t angles = 90;
  std::size_t offsets = 256;
  std::size_t slopes = 128;
  double slope_range = 1.25;
  double r_min = 1e-3, r_switch = 0.5, r_step = 0.05, r_max = 6.0;
  double alpha = 0.5;
  std::size_t group_angles = 36;
  std::size_t shears = 0;  // 0 picks a spacing of sqrt(a_min)/4
  double shear_range = 3.0;
  double a_min = 0.125, a_max = 4.0;
  std::size_t scales = 14;
  std::size_t refine = 8;
  double tolerance = 0.0;  // 0 uses the family budget
  std::string input;       // sinogram file; empty means round trip of `phantom`
  std::string out_image;
  std::string out_report;
  std::uint64_t seed = 1;

  // dog, restricted to the horizontal frequency cone for the affine family
  std::string phantom_name() const {
    if (!phantom.empty()) return phantom;
    return family == "affine" ? "cone_dog" : "dog";
  }
  double budget() const {
    if (tolerance > 0.0) return tolerance;
    if (family == "affine") return 8e-2;
    if (family == "circular") return 1e-1;
    return 5e-2;
  }
  std::size_t shear_count() const {
    if (shears > 0) return shears;
    const double ds = std::sqrt(a_min) / 4.0;
    return static_cast<std::size_t>(std::ceil(2.0 * shear_range / ds)) + 1;
  }
};

namespace detail {

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline std::size_t parse_count(const std::string& key, const std::string& v) {
  std::size_t pos = 0;
  long long n = 0;
  try {
    n = std::stoll(v, &pos);
  } catch (const std::exception&) {
    throw UsageError("bad value for key " + key + ": " + v);
  }
  if (pos != v.size() || n < 0) throw UsageError("bad value for key " + key + ": " + v);
  return static_cast<std::size_t>(n);
}

inline double parse_real(const std::string& key, const std::string& v) {
  std::size_t pos = 0;
  double x = 0.0;
  try {
    x = std::stod(v, &pos);
  } catch (const std::exception&) {
    throw UsageError("bad value for key " + key + ": " + v);
  }
  if (pos != v.size() || !std::isfinite(x)) throw UsageError("bad value for key " + key + ": " + v);
  return x;
}

}  // namespace detail

inline void apply_setting(ExperimentConfig& c, const std::string& key, const std::string& value) {
  using detail::parse_count;
  using detail::parse_real;
  const std::map<std::string, std::size_t*> counts = {
      {"image_size", &c.image_size}, {"oversample", &c.oversample}, {"angles", &c.angles},
      {"offsets", &c.offsets},       {"slopes", &c.slopes},         {"group_angles", &c.group_angles},
      {"shears", &c.shears},         {"scales", &c.scales},         {"refine", &c.refine}};
  const std::map<std::string, double*> reals = {
      {"image_spacing", &c.image_spacing}, {"slope_range", &c.slope_range}, {"r_min", &c.r_min},
      {"r_switch", &c.r_switch},           {"r_step", &c.r_step},           {"r_max", &c.r_max},
      {"alpha", &c.alpha},                 {"shear_range", &c.shear_range}, {"a_min", &c.a_min},
      {"a_max", &c.a_max},                 {"tolerance", &c.tolerance}};
  const std::map<std::string, std::string*> strings = {{"family", &c.family},       {"phantom", &c.phantom},
                                                       {"input", &c.input},         {"out_image", &c.out_image},
                                                       {"out_report", &c.out_report}};
  if (auto it = counts.find(key); it != counts.end()) {
    *it->second = parse_count(key, value);
  } else if (auto jt = reals.find(key); jt != reals.end()) {
    *jt->second = parse_real(key, value);
  } else if (auto kt = strings.find(key); kt != strings.end()) {
    *kt->second = value;
  } else if (key == "seed") {
    c.seed = parse_count(key, value);
  } else {
    throw UsageError("unknown config key: " + key);
  }
}

inline void validate(const ExperimentConfig& c) {
  if (c.family != "polar" && c.family != "affine" && c.family != "circular")
    throw UsageError("bad value for key family: " + c.family);
  struct Count {
    const char* key;
    std::size_t value, minimum;
  };
  const Count counts[] = {{"image_size", c.image_size, 2}, {"angles", c.angles, 2},   {"offsets", c.offsets, 2},
                          {"slopes", c.slopes, 2},         {"scales", c.scales, 2},   {"oversample", c.oversample, 1},
                          {"group_angles", c.group_angles, 1}, {"refine", c.refine, 1}};
  for (const auto& n : counts)
    if (n.value < n.minimum)
      throw UsageError(std::string("bad value for key ") + n.key + ": must be at least " + std::to_string(n.minimum));
  if (c.shears == 1) throw UsageError("bad value for key shears: counts must be at least 2");
  if (!(c.image_spacing > 0.0)) throw UsageError("bad value for key image_spacing: must be positive");
  if (!(c.a_min > 0.0) || !(c.a_max > c.a_min)) throw UsageError("bad value for key a_min: need 0 < a_min < a_max");
  if (!(c.alpha > 0.0 && c.alpha < 1.0)) throw UsageError("bad value for key alpha: must lie in (0, 1)");
  if (!(c.r_min > 0.0 && c.r_switch > c.r_min && c.r_max > c.r_switch && c.r_step > 0.0))
    throw UsageError("bad value for key r_min: need 0 < r_min < r_switch < r_max");
}

// Flat "key = value" lines; '#' starts a comment.
inline ExperimentConfig parse_config(std::istream& is, ExperimentConfig c = {}) {
  std::string line;
  while (std::getline(is, line)) {
    if (const auto h = line.find('#'); h != std::string::npos) line.erase(h);
    line = detail::trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw UsageError("malformed config line: " + line);
    const std::string key = detail::trim(line.substr(0, eq));
    const std::string value = detail::trim(line.substr(eq + 1));
    if (key.empty() || value.empty()) throw UsageError("malformed config line: " + line);
    apply_setting(c, key, value);
  }
  return c;
}

inline ExperimentConfig load_config(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw IoError("cannot open config: " + path);
  return parse_config(is);
}

// One refinement step of the group grid: twice the angles, half the log-scale step,
// and the scale range widened by a factor 2 at both ends.
inline ExperimentConfig refined(const ExperimentConfig& c) {
  ExperimentConfig r = c;
  const double step = std::log(c.a_max / c.a_min) / static_cast<double>(c.scales);
  r.a_min = c.a_min / 2.0;
  r.a_max = c.a_max * 2.0;
  r.scales = static_cast<std::size_t>(std::ceil(std::log(r.a_max / r.a_min) / (0.5 * step) - 1e-9));
  r.group_angles = 2 * c.group_angles;
  if (c.shears > 0) r.shears = 2 * c.shears - 1;
  return r;
}

struct ExperimentResult {
  Image truth;  // empty grid when the input is a file
  Reconstruction rec;
  ReconstructionReport report;
};

inline Grid2 lattice_of(const ExperimentConfig& c) { return Grid2::centered(c.image_size, c.image_spacing); }

inline Sim2Grid sim2_grid_of(const ExperimentConfig& c) {
  return Sim2Grid::make(lattice_of(c), c.group_angles, c.a_min, c.a_max, c.scales);
}

inline ShearGrid shear_grid_of(const ExperimentConfig& c) {
  return ShearGrid::make(lattice_of(c), Axis::span(-c.shear_range, c.shear_range, c.shear_count()), c.a_min, c.a_max,
                         c.scales);
}

inline RfaFile sinogram_of(const ExperimentConfig& c, const Image& fine) {
  const Grid2 lat = lattice_of(c);
  RfaFile f;
  if (c.family == "polar") {
    f.kind = "sino_polar";
    f.polar = radon_polar(fine, default_angles(c.angles), default_offsets(lat, c.offsets), default_step(fine.grid));
  } else if (c.family == "affine") {
    f.kind = "sino_affine";
    f.affine = radon_affine(fine, default_slopes(c.slopes, c.slope_range), default_offsets(lat, c.offsets),
                            default_step(fine.grid));
  } else {
    f.kind = "sino_circular";
    f.circular = radon_circular(fine, lat, hybrid_radii(c.r_min, c.r_switch, c.r_step, c.r_max), c.alpha);
  }
  return f;
}

inline Reconstruction invert_file(const ExperimentConfig& c, const RfaFile& s) {
  SinogramAnalysisOptions opt;
  opt.refine = c.refine;
  if (s.kind == "sino_polar" && c.family == "polar") return invert(s.polar, make_sim2_wavelet(), sim2_grid_of(c), opt);
  if (s.kind == "sino_affine" && c.family == "affine") return invert(s.affine, make_shearlet(), shear_grid_of(c), opt);
  if (s.kind == "sino_circular" && c.family == "circular") {
    const BesselSquareTail tail(s.circular.alpha);
    return invert(s.circular, tail, make_sim2_wavelet(), sim2_grid_of(c));
  }
  throw UsageError("sinogram kind " + s.kind + " does not match family " + c.family);
}

// Round trip of the configured phantom, or plain inversion of `input`.
inline ExperimentResult run_experiment(const ExperimentConfig& c) {
  validate(c);
  ExperimentResult out;
  if (!c.input.empty()) {
    out.rec = invert_file(c, load_rfa(c.input));
    out.report = out.rec.report;
    return out;
  }
  const Phantom ph = make_phantom(c.phantom_name());
  const Grid2 lat = lattice_of(c);
  out.truth = sample(ph, lat);
  const Image fine = sample(ph, Grid2::centered(c.image_size * c.oversample, c.image_spacing / c.oversample));
  out.rec = invert_file(c, sinogram_of(c, fine));
  if (c.family == "affine")
    out.report = report_metrics(out.truth, out.rec, shear_grid_of(c));
  else
    out.report = report_metrics(out.truth, out.rec, sim2_grid_of(c));
  return out;
}

}  // namespace radon
