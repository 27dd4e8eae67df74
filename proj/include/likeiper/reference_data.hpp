#ifndef LIKEIPER_REFERENCE_DATA_HPP
#define LIKEIPER_REFERENCE_DATA_HPP

#include <string_view>
#include <vector>

namespace likeiper {

/// Where a reference row comes from.
enum class DataSource {
  Table,    ///< the 6-decimal table of λ_tiny for n = 1..31
  Maslanka, ///< high-n values quoted from Maslanka
  PlotRead, ///< values read approximately off published plots
  Computed, ///< computed by this library
};

inline std::string_view to_string(DataSource s) {
  switch (s) {
  case DataSource::Table: return "TABLE";
  case DataSource::Maslanka: return "MASLANKA";
  case DataSource::PlotRead: return "PLOT_READ";
  case DataSource::Computed: return "COMPUTED";
  }
  return "?";
}

/// One published row: n, λ_tiny(n)/(n γ), λ_tiny(n), 2 log n. Values are the
/// decimal strings as printed; `two_log_n` is empty where the source leaves
/// it blank.
struct ReferenceRow {
  long n;
  std::string_view ratio;
  std::string_view tiny;
  std::string_view two_log_n;
  DataSource source;
  std::string_view note;
};

inline constexpr std::string_view reference_dataset_version = "reference_dataset_v1";

inline const std::vector<ReferenceRow> &reference_dataset() {
  using enum DataSource;
  static const std::vector<ReferenceRow> rows{
      {1, "1", "0.577215", "", Table, ""},
      {2, "0.837542", "0.966885", "1.386294", Table, ""},
      {3, "0.704934", "1.220696", "2.197224", Table, "printed as '2.197 224'"},
      {4, "0.595786", "1.375588", "2.772588", Table, ""},
      {5, "0.505276", "1.458268", "3.218875", Table, ""},
      {6, "0.429734", "1.488298", "3.583518", Table, ""},
      {7, "0.366337", "1.480190", "3.891820", Table, ""},
      {8, "0.312893", "1.444855", "4.158883", Table, ""},
      {9, "0.267682", "1.399596", "4.394449", Table, ""},
      {10, "0.229342", "1.323802", "4.605170", Table, ""},
      {15, "0.108860", "0.942358", "5.416100", Table, ""},
      {20, "0.058093", "0.670652", "5.991464", Table, ""},
      {25, "0.052749", "0.594962", "6.437751", Table, ""},
      {26, "0.040167", "0.602799", "6.516193", Table, ""},
      {27, "0.039627", "0.617452", "6.591673", Table, ""},
      {28, "0.039511", "0.638020", "6.664409", Table, ""},
      {29, "0.039724", "0.665174", "6.734591", Table, ""},
      {30, "0.040235", "0.697102", "6.802394", Table, ""},
      {31, "0.041021", "0.733544", "6.867974", Table, ""},
      {100, "0.0108", "0.628752", "9.210", Maslanka, ""},
      {500, "0.0092", "2.663502", "12.429", Maslanka, ""},
      {1000, "0.0030", "1.756264", "13.815", Maslanka, ""},
      {2000, "0.0093", "10.76850", "15.201", Maslanka, ""},
      {3000, "0.0012", "-2.09000", "16.012", Maslanka, ""},
      {200, "0.0311", "3.600", "10.596", PlotRead, ""},
      {760, "0.0144", "-6.33", "13.266", PlotRead, ""},
      {840, "0.0173", "8.4", "13.466", PlotRead, ""},
      {900, "0.0173", "9.000", "13.604", PlotRead, ""},
      {1870, "0.0104", "-11.226", "15.067", PlotRead, ""},
      {3300, "0.00519", "-9.900", "16.203", PlotRead, ""},
      {5080, "0.00573", "16.830", "17.066", PlotRead, "ratio also printed as (0.00335)"},
      {5500, "0.00519", "16.500", "17.225", PlotRead, ""},
      {6500, "0.00346", "13.000", "17.559", PlotRead, ""},
      {8000, "0.00346", "16.000", "17.774", PlotRead, ""},
  };
  return rows;
}

} // namespace likeiper

#endif // LIKEIPER_REFERENCE_DATA_HPP
