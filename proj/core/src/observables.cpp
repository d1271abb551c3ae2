#include "admd/observables.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace admd {

void write_observables_header(std::ostream& out) { out << observables_csv_header << '\n'; }

void write_observable_row(std::ostream& out, const ObservableRecord& r) {
    char buf[512];
    std::snprintf(buf, sizeof buf,
                  "%llu,%.9g,%.9g,%.9g,%.9g,%.9g,%.9g,%.9g,%.9g,%.9g,%d,%d,%d\n",
                  static_cast<unsigned long long>(r.step), r.time_ps, r.temperature, r.v_m,
                  r.v_fg_nonbonded, r.v_cg_nonbonded, r.v_fg_bonded, r.v_cg_bonded, r.v_transition,
                  r.e_kinetic, r.n_fg, r.n_hybrid, r.n_cg);
    out << buf;
}

std::vector<ObservableRecord> read_observables_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("observables CSV is empty");
    if (line.back() == '\r') line.pop_back();
    if (line != observables_csv_header)
        throw std::runtime_error("observables CSV has an unexpected header: " + line);

    std::vector<ObservableRecord> out;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::istringstream row(line);
        ObservableRecord r;
        char comma;
        unsigned long long step;
        if (!(row >> step >> comma >> r.time_ps >> comma >> r.temperature >> comma >> r.v_m >>
              comma >> r.v_fg_nonbonded >> comma >> r.v_cg_nonbonded >> comma >> r.v_fg_bonded >>
              comma >> r.v_cg_bonded >> comma >> r.v_transition >> comma >> r.e_kinetic >> comma >>
              r.n_fg >> comma >> r.n_hybrid >> comma >> r.n_cg))
            throw std::runtime_error("observables CSV: malformed row at line " +
                                     std::to_string(line_no));
        r.step = step;
        out.push_back(r);
    }
    return out;
}

std::vector<ObservableRecord> read_observables_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open observables CSV: " + path.string());
    return read_observables_csv(in);
}

} // namespace admd
