#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "signal.hpp"
#include "sinogram.hpp"

namespace radon {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Contents of one RFA1 file; exactly one payload is set, according to `kind`.
struct RfaFile {
  std::string kind;  // image | sino_polar | sino_affine | sino_circular
  Image image;
  PolarSinogram polar;
  AffineSinogram affine;
  CircularSinogram circular;
};

namespace detail {

inline std::string fmt17(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

inline void put_values(std::ostream& os, const std::vector<cplx>& data) {
  std::vector<unsigned char> buf(data.size() * 16);
  for (std::size_t i = 0; i < data.size(); ++i) {
    const double parts[2] = {data[i].real(), data[i].imag()};
    for (int k = 0; k < 2; ++k) {
      std::uint64_t bits = std::bit_cast<std::uint64_t>(parts[k]);
      for (int b = 0; b < 8; ++b) buf[i * 16 + static_cast<std::size_t>(k) * 8 + static_cast<std::size_t>(b)] =
          static_cast<unsigned char>(bits >> (8 * b));
    }
  }
  os.write(reinterpret_cast<const char*>(buf.data()), static_cast<std::streamsize>(buf.size()));
}

inline void get_values(std::istream& is, std::vector<cplx>& data) {
  std::vector<unsigned char> buf(data.size() * 16);
  is.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(buf.size()));
  if (static_cast<std::size_t>(is.gcount()) != buf.size()) throw IoError("truncated data block");
  for (std::size_t i = 0; i < data.size(); ++i) {
    double parts[2];
    for (int k = 0; k < 2; ++k) {
      std::uint64_t bits = 0;
      for (int b = 0; b < 8; ++b)
        bits |= static_cast<std::uint64_t>(buf[i * 16 + static_cast<std::size_t>(k) * 8 + static_cast<std::size_t>(b)])
                << (8 * b);
      parts[k] = std::bit_cast<double>(bits);
    }
    data[i] = {parts[0], parts[1]};
  }
}

inline std::vector<std::string> words(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> out;
  for (std::string w; is >> w;) out.push_back(w);
  return out;
}

inline double number(const std::string& s) {
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &pos);
  } catch (const std::exception&) {
    throw IoError("bad number in header: " + s);
  }
  if (pos != s.size()) throw IoError("bad number in header: " + s);
  return v;
}

}  // namespace detail

// Header lines: magic, kind, "n", "origin", "step", optional "alpha"/"radii", then "data".
inline void write_rfa(std::ostream& os, const RfaFile& f) {
  os << "RFA1\n" << "kind " << f.kind << "\n";
  using detail::fmt17;
  if (f.kind == "image") {
    const Grid2& g = f.image.grid;
    os << "n " << g.n1 << " " << g.n2 << "\norigin " << fmt17(g.origin.x) << " " << fmt17(g.origin.y) << "\nstep "
       << fmt17(g.dx) << " " << fmt17(g.dy) << "\ndata\n";
    detail::put_values(os, f.image.data);
  } else if (f.kind == "sino_polar" || f.kind == "sino_affine") {
    const bool polar = f.kind == "sino_polar";
    const Axis a1 = polar ? f.polar.theta : f.affine.v;
    const Axis a2 = polar ? f.polar.t : f.affine.t;
    os << "n " << a1.n << " " << a2.n << "\norigin " << fmt17(a1.origin) << " " << fmt17(a2.origin) << "\nstep "
       << fmt17(a1.step) << " " << fmt17(a2.step) << "\ndata\n";
    detail::put_values(os, polar ? f.polar.values.data : f.affine.values.data);
  } else if (f.kind == "sino_circular") {
    const CircularSinogram& s = f.circular;
    const Grid2& g = s.centers;
    os << "n " << g.n1 << " " << g.n2 << " " << s.nr() << "\norigin " << fmt17(g.origin.x) << " "
       << fmt17(g.origin.y) << "\nstep " << fmt17(g.dx) << " " << fmt17(g.dy) << "\nalpha " << fmt17(s.alpha)
       << "\nradii";
    for (double r : s.radii) os << " " << fmt17(r);
    os << "\ndata\n";
    detail::put_values(os, s.values);
  } else {
    throw IoError("unknown RFA1 kind: " + f.kind);
  }
  if (!os) throw IoError("write failed");
}

inline RfaFile read_rfa(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != "RFA1") throw IoError("missing RFA1 magic");
  RfaFile f;
  std::vector<std::size_t> n;
  std::vector<double> origin, step, radii;
  double alpha = NAN;
  while (std::getline(is, line)) {
    const auto w = detail::words(line);
    if (w.empty()) continue;
    if (w[0] == "data") break;
    if (w[0] == "kind" && w.size() == 2) {
      f.kind = w[1];
    } else if (w[0] == "n") {
      for (std::size_t i = 1; i < w.size(); ++i) n.push_back(static_cast<std::size_t>(detail::number(w[i])));
    } else if (w[0] == "origin") {
      for (std::size_t i = 1; i < w.size(); ++i) origin.push_back(detail::number(w[i]));
    } else if (w[0] == "step") {
      for (std::size_t i = 1; i < w.size(); ++i) step.push_back(detail::number(w[i]));
    } else if (w[0] == "alpha" && w.size() == 2) {
      alpha = detail::number(w[1]);
    } else if (w[0] == "radii") {
      for (std::size_t i = 1; i < w.size(); ++i) radii.push_back(detail::number(w[i]));
    } else {
      throw IoError("unexpected header line: " + line);
    }
  }
  if (n.size() < 2 || origin.size() != 2 || step.size() != 2) throw IoError("incomplete RFA1 header");
  try {
    if (f.kind == "image") {
      f.image = Image(Grid2{n[0], n[1], {origin[0], origin[1]}, step[0], step[1]});
      detail::get_values(is, f.image.data);
    } else if (f.kind == "sino_polar") {
      f.polar = PolarSinogram({n[0], origin[0], step[0]}, {n[1], origin[1], step[1]});
      detail::get_values(is, f.polar.values.data);
    } else if (f.kind == "sino_affine") {
      f.affine = AffineSinogram({n[0], origin[0], step[0]}, {n[1], origin[1], step[1]});
      detail::get_values(is, f.affine.values.data);
    } else if (f.kind == "sino_circular") {
      if (n.size() != 3 || radii.size() != n[2]) throw IoError("circular header needs n1 n2 nr and nr radii");
      f.circular = CircularSinogram(Grid2{n[0], n[1], {origin[0], origin[1]}, step[0], step[1]}, radii, alpha);
      detail::get_values(is, f.circular.values);
    } else {
      throw IoError("unknown RFA1 kind: " + f.kind);
    }
  } catch (const DomainError& e) {
    throw IoError(std::string("invalid RFA1 header: ") + e.what());
  }
  return f;
}

inline void save_rfa(const std::string& path, const RfaFile& f) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw IoError("cannot open for writing: " + path);
  write_rfa(os, f);
}

inline RfaFile load_rfa(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw IoError("cannot open: " + path);
  return read_rfa(is);
}

// Binary PGM of the real part, min-max scaled to 0..255.
inline void save_pgm(const std::string& path, const Image& img) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw IoError("cannot open for writing: " + path);
  double lo = INFINITY, hi = -INFINITY;
  for (const auto& v : img.data) {
    lo = std::min(lo, v.real());
    hi = std::max(hi, v.real());
  }
  const double span = hi > lo ? hi - lo : 1.0;
  os << "P5\n" << img.grid.n1 << " " << img.grid.n2 << "\n255\n";
  // top row first: highest second coordinate
  for (std::size_t r = 0; r < img.grid.n2; ++r) {
    const std::size_t i2 = img.grid.n2 - 1 - r;
    for (std::size_t i1 = 0; i1 < img.grid.n1; ++i1) {
      const double u = (img(i1, i2).real() - lo) / span;
      os.put(static_cast<char>(static_cast<unsigned char>(std::lround(255.0 * u))));
    }
  }
  if (!os) throw IoError("write failed: " + path);
}

}  // namespace radon
