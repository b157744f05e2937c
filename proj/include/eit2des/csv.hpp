#pragma once

#include <span>
#include <string>
#include <vector>

#include "eit2des/response.hpp"

namespace eit2des::csv {

/// Canonical numeric formatting for every data file: 9 significant digits,
/// shortest form. Re-parsing and re-emitting a file is byte-identical.
std::string format_number(double value);

/// Long-format spectrum: header `omega1,omega3,value`, one row per node,
/// omega1 varying fastest.
std::string spectrum_csv(const Spectrum2D& spectrum);

/// Header `omega,re,im`, one row per frequency.
std::string greens_csv(std::span<const double> omega, std::span<const double> re,
                       std::span<const double> im);

struct PopulationRow {
  double t2;
  double g_aa_aa, g_bb_aa, g_aa_bb, g_bb_bb;  ///< closed forms
  double oracle_aa;  ///< propagated population of a, start in a
  double oracle_bb;  ///< propagated population of b, start in b
};

/// Header `t2,g_aa_aa,g_bb_aa,g_aa_bb,g_bb_bb,oracle_aa,oracle_bb`.
std::string population_csv(std::span<const PopulationRow> rows);

/// Writes content to path, creating parent directories. Throws ConfigError
/// on I/O failure.
void write_file(const std::string& path, const std::string& content);

}  // namespace eit2des::csv
