#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "eit2des/params.hpp"
#include "eit2des/response.hpp"

namespace eit2des {

/// Fully resolved run configuration. Defaults reproduce the reference
/// parameter set (omega_ab = 12579, Gamma1 = 1, Gamma2 = 1e-4, gamma0_a = 80,
/// gamma0_b = gamma0_c = 1, Omega = 50, all cm^-1) on the standard
/// +/- 150 cm^-1, 0.5-step grid at t2 in {0, 2, 4, 300} ps.
struct RunConfig {
  SystemParams params;
  SpectralGrid grid;
  std::vector<double> t2_list;
  std::string output_path = ".";
  bool control_on = true;
  SignalKind signal_kind = SignalKind::rephasing;

  RunConfig();

  /// Throws ConfigError unless params/grid are valid and t2_list is
  /// non-empty, non-negative and ascending.
  void validate() const;

  /// Echo of every accepted value, one `key = value` per line.
  void write_summary(std::ostream& os) const;
};

/// Parses a line-oriented `key = value` document ('#' starts a comment).
/// Unknown keys are rejected with their line number; missing keys keep the
/// defaults above. `t2` accepts a comma-separated list; repeated `t2` lines
/// append.
RunConfig parse_config(std::string_view text);

/// parse_config over the contents of a file.
RunConfig load_config(const std::string& path);

SignalKind parse_signal_kind(std::string_view token);  ///< rp | nr | abs

}  // namespace eit2des
