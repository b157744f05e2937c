#include "eit2des/csv.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "eit2des/errors.hpp"

namespace eit2des::csv {

std::string format_number(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", value);
  return buf;
}

std::string spectrum_csv(const Spectrum2D& spectrum) {
  const std::size_t n1 = spectrum.grid.n1();
  const std::size_t n3 = spectrum.grid.n3();
  std::string out = "omega1,omega3,value\n";
  out.reserve(out.size() + n1 * n3 * 32);
  for (std::size_t i3 = 0; i3 < n3; ++i3) {
    const std::string w3 = format_number(spectrum.grid.omega3(i3));
    for (std::size_t i1 = 0; i1 < n1; ++i1) {
      out += format_number(spectrum.grid.omega1(i1));
      out += ',';
      out += w3;
      out += ',';
      out += format_number(spectrum.at(i3, i1));
      out += '\n';
    }
  }
  return out;
}

std::string greens_csv(std::span<const double> omega, std::span<const double> re,
                       std::span<const double> im) {
  std::string out = "omega,re,im\n";
  for (std::size_t i = 0; i < omega.size(); ++i) {
    out += format_number(omega[i]);
    out += ',';
    out += format_number(re[i]);
    out += ',';
    out += format_number(im[i]);
    out += '\n';
  }
  return out;
}

std::string population_csv(std::span<const PopulationRow> rows) {
  std::string out = "t2,g_aa_aa,g_bb_aa,g_aa_bb,g_bb_bb,oracle_aa,oracle_bb\n";
  for (const PopulationRow& r : rows) {
    out += format_number(r.t2);
    out += ',';
    out += format_number(r.g_aa_aa);
    out += ',';
    out += format_number(r.g_bb_aa);
    out += ',';
    out += format_number(r.g_aa_bb);
    out += ',';
    out += format_number(r.g_bb_bb);
    out += ',';
    out += format_number(r.oracle_aa);
    out += ',';
    out += format_number(r.oracle_bb);
    out += '\n';
  }
  return out;
}

void write_file(const std::string& path, const std::string& content) {
  const std::filesystem::path p(path);
  if (p.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(p.parent_path(), ec);
    if (ec) throw ConfigError("cannot create directory " + p.parent_path().string());
  }
  std::ofstream out(p, std::ios::binary);
  if (!out) throw ConfigError("cannot open for writing: " + path);
  out << content;
  if (!out) throw ConfigError("write failed: " + path);
}

}  // namespace eit2des::csv
