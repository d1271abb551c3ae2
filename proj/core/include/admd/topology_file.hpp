#ifndef ADMD_TOPOLOGY_FILE_HPP
#define ADMD_TOPOLOGY_FILE_HPP

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "admd/topology.hpp"

namespace admd {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parsed contents of a topology file: one molecule template plus the
/// nonbonded parameter tables. The molecule count comes from the coordinate
/// file, so it is not part of the topology file itself.
///
/// Sections: [sites], [bonds], [angles], [dihedrals], [nonbonded_fg],
/// [nonbonded_cg], [mapping]. See data/butane.top for a documented example.
struct TopologyFile {
    MoleculeTemplate tmpl;
    std::vector<std::string> fg_type_names;
    std::vector<std::string> cg_type_names;
    LjTable fg_lj;
    LjTable cg_lj;
};

TopologyFile parse_topology_text(std::string_view text, const std::string& origin);
TopologyFile parse_topology_file(const std::filesystem::path& path);

/// Replicates the template n_molecules times into a full Topology.
Topology make_topology(const TopologyFile& file, int n_molecules);

} // namespace admd

#endif
