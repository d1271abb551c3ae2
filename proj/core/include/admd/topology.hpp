#ifndef ADMD_TOPOLOGY_HPP
#define ADMD_TOPOLOGY_HPP

#include <array>
#include <span>
#include <string>
#include <vector>

#include "admd/box.hpp"
#include "admd/vec.hpp"

namespace admd {

// Bonded interaction parameters. Harmonic forms carry the 1/2 in the energy:
// V_bond = k/2 (r - r0)^2, V_angle = k/2 (theta - theta0)^2 with theta in rad.
struct BondParam {
    double k = 0.0;   // kJ mol^-1 nm^-2
    double r0 = 0.0;  // nm
};

struct AngleParam {
    double k = 0.0;       // kJ mol^-1 rad^-2
    double theta0 = 0.0;  // rad
};

/// Cosine-series dihedral V(phi) = sum_n c[n] cos^n(psi), psi = phi - pi.
struct DihedralParam {
    std::array<double, 6> c{};  // kJ/mol
};

struct BondTerm {
    int i = 0, j = 0;
    int param = 0;
};
struct AngleTerm {
    int i = 0, j = 0, k = 0;
    int param = 0;
};
struct DihedralTerm {
    int i = 0, j = 0, k = 0, l = 0;
    int param = 0;
};

/// 12-6 Lennard-Jones pair parameters (cut-and-shifted kernel).
struct LjParams {
    double sigma = 0.0;    // nm
    double epsilon = 0.0;  // kJ/mol
    double cutoff = 0.0;   // nm

    bool valid() const noexcept { return sigma > 0.0 && epsilon > 0.0 && cutoff > sigma; }
};

/// Symmetric (type, type) -> LjParams lookup.
class LjTable {
public:
    LjTable() = default;
    explicit LjTable(int n_types) : n_(n_types), entries_(std::size_t(n_types) * n_types), present_(std::size_t(n_types) * n_types, 0) {}

    void set(int a, int b, const LjParams& p) {
        entries_[index(a, b)] = p;
        entries_[index(b, a)] = p;
        present_[index(a, b)] = 1;
        present_[index(b, a)] = 1;
    }
    const LjParams& get(int a, int b) const { return entries_[index(a, b)]; }
    bool has(int a, int b) const { return n_ > 0 && present_[index(a, b)] != 0; }
    int n_types() const { return n_; }

    /// Largest cutoff over all entries; 0 when empty.
    double max_cutoff() const {
        double c = 0.0;
        for (std::size_t i = 0; i < entries_.size(); ++i)
            if (present_[i] && entries_[i].cutoff > c) c = entries_[i].cutoff;
        return c;
    }

private:
    std::size_t index(int a, int b) const { return std::size_t(a) * n_ + b; }

    int n_ = 0;
    std::vector<LjParams> entries_;
    std::vector<char> present_;
};

/// Per-molecule structure shared by every molecule in the system.
struct MoleculeTemplate {
    std::vector<double> site_masses;  // u, one per fine-grained site
    std::vector<int> site_types;      // index into Topology::fg_type_names
    std::vector<BondTerm> bonds;
    std::vector<AngleTerm> angles;
    std::vector<DihedralTerm> dihedrals;
    std::vector<BondParam> bond_params;
    std::vector<AngleParam> angle_params;
    std::vector<DihedralParam> dihedral_params;
    int bead_type = 0;  // index into Topology::cg_type_names; one bead per molecule
    double total_mass = 0.0;

    int n_sites() const { return static_cast<int>(site_masses.size()); }
};

/// Lightweight view of one molecule's slice of the global site arrays.
struct Molecule {
    int molecule_id = 0;
    int first_site = 0;
    int n_sites = 0;
    double total_mass = 0.0;
    const MoleculeTemplate* tmpl = nullptr;

    int site(int k) const { return first_site + k; }
};

/// CG beads derived from the FG state: one bead per molecule at its COM.
struct CgView {
    std::vector<Vec3> positions;
    std::vector<double> masses;
};

/// Molecular structure: FG sites grouped into molecules, the FG<->CG mapping,
/// bonded terms and the nonbonded parameter tables. Immutable after load.
class Topology {
public:
    Topology() = default;
    Topology(MoleculeTemplate tmpl, int n_molecules,
             std::vector<std::string> fg_type_names, std::vector<std::string> cg_type_names,
             LjTable fg_lj, LjTable cg_lj);

    int n_molecules() const { return n_molecules_; }
    int sites_per_molecule() const { return tmpl_.n_sites(); }
    int n_sites() const { return n_molecules_ * tmpl_.n_sites(); }

    Molecule molecule(int id) const {
        return {id, id * tmpl_.n_sites(), tmpl_.n_sites(), tmpl_.total_mass, &tmpl_};
    }

    int molecule_of_site(int site) const { return site / tmpl_.n_sites(); }
    double site_mass(int site) const { return tmpl_.site_masses[site % tmpl_.n_sites()]; }
    int site_type(int site) const { return tmpl_.site_types[site % tmpl_.n_sites()]; }
    double site_mass_fraction(int site) const { return site_mass(site) / tmpl_.total_mass; }

    /// Intra-molecular FG pairs are excluded from nonbonded interactions;
    /// bonded terms cover them. This is the full exclusion list for the
    /// single-template systems this engine supports.
    bool excluded(int site_a, int site_b) const {
        return molecule_of_site(site_a) == molecule_of_site(site_b);
    }

    const MoleculeTemplate& molecule_template() const { return tmpl_; }
    const LjTable& fg_lj() const { return fg_lj_; }
    const LjTable& cg_lj() const { return cg_lj_; }
    const std::vector<std::string>& fg_type_names() const { return fg_type_names_; }
    const std::vector<std::string>& cg_type_names() const { return cg_type_names_; }
    const std::string& site_type_name(int site) const { return fg_type_names_[site_type(site)]; }

    /// All site masses flattened to one array ordered by global site id.
    const std::vector<double>& site_masses() const { return site_masses_flat_; }

    double total_mass() const { return tmpl_.total_mass * n_molecules_; }

private:
    MoleculeTemplate tmpl_;
    int n_molecules_ = 0;
    std::vector<std::string> fg_type_names_;
    std::vector<std::string> cg_type_names_;
    LjTable fg_lj_;
    LjTable cg_lj_;
    std::vector<double> site_masses_flat_;
};

/// Mass-weighted mean position, Sum_k m_ik x_ik / M_i. Sites are unwrapped
/// relative to site 0 through the minimum image first so molecules spanning
/// the periodic boundary get a sensible COM.
Vec3 center_of_mass(const Molecule& mol, std::span<const Vec3> positions, const PeriodicBox& box);

/// Splits a molecule-level force over the sites with weights m_ik / M_i,
/// the dX_i/dx_ik factor of the COM mapping.
std::vector<Vec3> distribute_to_sites(const Molecule& mol, const Vec3& f_com);
void distribute_to_sites(const Molecule& mol, const Vec3& f_com, std::span<Vec3> out);

/// One bead per molecule, positioned at the COM, carrying the molecular mass.
CgView build_cg_view(const Topology& topology, std::span<const Vec3> positions,
                     const PeriodicBox& box);

} // namespace admd

#endif
