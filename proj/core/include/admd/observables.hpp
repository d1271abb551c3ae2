#ifndef ADMD_OBSERVABLES_HPP
#define ADMD_OBSERVABLES_HPP

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <vector>

namespace admd {

/// One row of the observables CSV. v_m always equals the sum of its five
/// components by construction.
struct ObservableRecord {
    std::uint64_t step = 0;
    double time_ps = 0.0;
    double temperature = 0.0;     // K
    double v_m = 0.0;             // kJ/mol
    double v_fg_nonbonded = 0.0;  // lambda-weighted
    double v_cg_nonbonded = 0.0;  // (1-lambda)-weighted
    double v_fg_bonded = 0.0;
    double v_cg_bonded = 0.0;
    double v_transition = 0.0;
    double e_kinetic = 0.0;
    int n_fg = 0;
    int n_hybrid = 0;
    int n_cg = 0;
};

inline constexpr const char* observables_csv_header =
    "step,time_ps,temperature_K,v_m,v_fg_nonbonded,v_cg_nonbonded,v_fg_bonded,v_cg_bonded,"
    "v_transition,e_kinetic,n_fg,n_hybrid,n_cg";

void write_observables_header(std::ostream& out);
void write_observable_row(std::ostream& out, const ObservableRecord& rec);

/// Parses a CSV produced by write_observable_row; validates the header.
std::vector<ObservableRecord> read_observables_csv(std::istream& in);
std::vector<ObservableRecord> read_observables_csv(const std::filesystem::path& path);

} // namespace admd

#endif
