#pragma once

#include <filesystem>
#include <vector>

namespace wifiplan {

/// Symmetric k x k matrix of co-channel attenuations in dB relative to the
/// co-channel case (0 dB = full spectral overlap). -inf encodes zero
/// spectral overlap: such channel pairs contribute no interference at all.
///
/// Channel indices are 1-based (Wi-Fi convention, channels 1..k).
class InterferenceMatrix {
 public:
  /// Matrix derived from the overlap of rectangular spectral masks of
  /// `channel_bandwidth_mhz` width centered `channel_spacing_mhz` apart:
  /// w[i][j] = 10*log10(max(0, 1 - |i-j|*spacing/bandwidth)), with zero
  /// overlap mapped to -inf. Measured values can be substituted via
  /// load_csv.
  static InterferenceMatrix rectangular_mask(int k, double channel_spacing_mhz = 5.0,
                                             double channel_bandwidth_mhz = 22.0);

  /// Builds from explicit rows; validates squareness and symmetry.
  /// Entries must be finite or -inf.
  static InterferenceMatrix from_rows(const std::vector<std::vector<double>>& rows);

  /// CSV, k rows x k columns. "-inf" (also accepted: "inf-") encodes zero
  /// overlap. The loader validates symmetry.
  static InterferenceMatrix load_csv(const std::filesystem::path& path);
  void save_csv(const std::filesystem::path& path) const;
  std::string to_csv() const;

  int size() const { return k_; }

  /// Attenuation in dB for the (1-based) channel pair; may be -inf.
  double db(int ci, int cj) const;

  /// 10^(db/10); zero for -inf entries. This is the linear overlap factor
  /// used by the evaluators.
  double overlap_linear(int ci, int cj) const;

  /// Row-major k*k table of linear overlap factors.
  const std::vector<double>& linear_table() const { return lin_; }

 private:
  InterferenceMatrix(int k, std::vector<double> db);

  int k_ = 0;
  std::vector<double> db_;   // row-major
  std::vector<double> lin_;  // row-major, precomputed
};

/// Alias matching the operation vocabulary: the bundled default matrix for
/// a k-channel spectrum.
InterferenceMatrix default_interference_matrix(int k, double channel_spacing_mhz = 5.0,
                                               double channel_bandwidth_mhz = 22.0);

}  // namespace wifiplan
