#include "admd/topology.hpp"

#include <stdexcept>

namespace admd {

Topology::Topology(MoleculeTemplate tmpl, int n_molecules,
                   std::vector<std::string> fg_type_names, std::vector<std::string> cg_type_names,
                   LjTable fg_lj, LjTable cg_lj)
    : tmpl_(std::move(tmpl)),
      n_molecules_(n_molecules),
      fg_type_names_(std::move(fg_type_names)),
      cg_type_names_(std::move(cg_type_names)),
      fg_lj_(std::move(fg_lj)),
      cg_lj_(std::move(cg_lj)) {
    if (tmpl_.n_sites() < 1)
        throw std::invalid_argument("molecule template must have at least one site");
    if (n_molecules_ < 0)
        throw std::invalid_argument("negative molecule count");

    double m = 0.0;
    for (double mk : tmpl_.site_masses) {
        if (!(mk > 0.0)) throw std::invalid_argument("site masses must be positive");
        m += mk;
    }
    tmpl_.total_mass = m;

    site_masses_flat_.reserve(std::size_t(n_sites()));
    for (int i = 0; i < n_molecules_; ++i)
        site_masses_flat_.insert(site_masses_flat_.end(), tmpl_.site_masses.begin(),
                                 tmpl_.site_masses.end());
}

Vec3 center_of_mass(const Molecule& mol, std::span<const Vec3> positions, const PeriodicBox& box) {
    if (mol.n_sites < 1) throw std::invalid_argument("center_of_mass: empty molecule");
    if (std::size_t(mol.first_site + mol.n_sites) > positions.size())
        throw std::out_of_range("center_of_mass: site positions missing");

    const Vec3 origin = positions[mol.first_site];
    Vec3 weighted{};  // mass-weighted displacement from site 0
    for (int k = 0; k < mol.n_sites; ++k) {
        const Vec3 d = minimum_image(positions[mol.site(k)] - origin, box);
        weighted += mol.tmpl->site_masses[k] * d;
    }
    return origin + (1.0 / mol.total_mass) * weighted;
}

void distribute_to_sites(const Molecule& mol, const Vec3& f_com, std::span<Vec3> out) {
    const double inv_m = 1.0 / mol.total_mass;
    for (int k = 0; k < mol.n_sites; ++k)
        out[k] = (mol.tmpl->site_masses[k] * inv_m) * f_com;
}

std::vector<Vec3> distribute_to_sites(const Molecule& mol, const Vec3& f_com) {
    std::vector<Vec3> out(std::size_t(mol.n_sites));
    distribute_to_sites(mol, f_com, out);
    return out;
}

CgView build_cg_view(const Topology& topology, std::span<const Vec3> positions,
                     const PeriodicBox& box) {
    CgView view;
    view.positions.reserve(std::size_t(topology.n_molecules()));
    view.masses.reserve(std::size_t(topology.n_molecules()));
    for (int i = 0; i < topology.n_molecules(); ++i) {
        const Molecule mol = topology.molecule(i);
        view.positions.push_back(center_of_mass(mol, positions, box));
        view.masses.push_back(mol.total_mass);
    }
    return view;
}

} // namespace admd
