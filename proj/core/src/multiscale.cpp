#include "admd/multiscale.hpp"

#include <numeric>

namespace admd {

void ForceBreakdown::resize(std::size_t n) {
    for (auto* term : {&fg_nonbonded_scaled, &fg_bonded, &fg_drift, &cg_nonbonded_distributed,
                       &cg_drift, &cg_bonded_distributed, &transition})
        term->assign(n, Vec3{});
}

Vec3 ForceBreakdown::total(std::size_t site) const {
    return fg_nonbonded_scaled[site] + fg_bonded[site] + fg_drift[site] +
           cg_nonbonded_distributed[site] + cg_drift[site] + cg_bonded_distributed[site] +
           transition[site];
}

std::vector<Vec3> ForceBreakdown::totals() const {
    std::vector<Vec3> out(n_sites());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = total(i);
    return out;
}

namespace {

inline bool lj_visit(const LjDerived& d, double r2, double& energy, double& f_over_r) {
    if (r2 >= d.cutoff2 || r2 <= 0.0) return false;
    const double sr2 = d.sigma2 / r2;
    const double sr6 = sr2 * sr2 * sr2;
    const double sr12 = sr6 * sr6;
    energy = d.four_eps * (sr12 - sr6) - d.shift;
    f_over_r = 6.0 * d.four_eps * (2.0 * sr12 - sr6) / r2;
    return true;
}

} // namespace

void assemble_multiscale(const LocalSystem& sys, const NeighborTable& fg_table,
                         const NeighborTable& cg_table, AssemblyScratch& scratch,
                         ForceBreakdown& forces, MultiscaleEnergy& energy) {
    const Topology& topo = *sys.topology;
    const MoleculeTemplate& tmpl = topo.molecule_template();
    const int n_mols = sys.n_local_molecules();
    const int spm = topo.sites_per_molecule();
    const std::size_t n_sites = std::size_t(sys.n_local_sites());

    forces.resize(n_sites);
    energy = MultiscaleEnergy{};

    // Per-molecule COM, lambda and lambda' from the current positions
    // (Fig. 3 ordering: resolution weights first, then bonded, nonbonded and
    // the multiscale combination).
    scratch.com.resize(std::size_t(n_mols));
    scratch.lam.resize(std::size_t(n_mols));
    scratch.dlam.resize(std::size_t(n_mols));
    scratch.attr_fg.assign(std::size_t(n_mols), 0.0);
    scratch.attr_cg.assign(std::size_t(n_mols), 0.0);
    scratch.cg_gather.assign(std::size_t(n_mols), Vec3{});
    for (int m = 0; m < n_mols; ++m) {
        Molecule mol{sys.molecule_ids[std::size_t(m)], m * spm, spm, tmpl.total_mass, &tmpl};
        const Vec3 com = center_of_mass(mol, sys.positions, sys.box);
        scratch.com[std::size_t(m)] = com;
        scratch.lam[std::size_t(m)] = lambda(com.x, sys.geometry, sys.box);
        scratch.dlam[std::size_t(m)] = dlambda_dx(com.x, sys.geometry, sys.box);
    }
    if (scratch.site_types.size() != n_sites) {
        scratch.site_types.resize(n_sites);
        for (std::size_t s = 0; s < n_sites; ++s)
            scratch.site_types[s] = tmpl.site_types[s % std::size_t(spm)];
    }

    // FG bonded: unscaled, computed for every owned molecule no matter the region.
    for (int m = 0; m < n_mols; ++m) {
        if (!sys.owned[std::size_t(m)]) continue;
        accumulate_bonded_molecule(tmpl, m * spm, sys.positions, sys.box, forces.fg_bonded,
                                   energy.fg_bonded);
    }

    // FG nonbonded, gathered per owned site. Each visit contributes half the
    // pair energy, so summing over both sides counts every pair once; the
    // same half goes into the owning molecule's drift attribution.
    const std::vector<LjDerived> fg_lj = derive_lj_table(topo.fg_lj());
    const int n_fg_types = topo.fg_lj().n_types();
    for (int m = 0; m < n_mols; ++m) {
        if (!sys.owned[std::size_t(m)]) continue;
        const double lam_m = scratch.lam[std::size_t(m)];
        double attr = 0.0;
        for (int k = 0; k < spm; ++k) {
            const std::int32_t a = m * spm + k;
            const int type_a = scratch.site_types[std::size_t(a)];
            Vec3 f{};
            for (std::int32_t b : fg_table.partners_of(a)) {
                const int mb = b / spm;
                const double lam_b = scratch.lam[std::size_t(mb)];
                // Pure CG pair: weight and both lambda' vanish, nothing to add.
                if (lam_m == 0.0 && lam_b == 0.0) continue;
                const Vec3 d =
                    minimum_image(sys.positions[std::size_t(a)] - sys.positions[std::size_t(b)],
                                  sys.box);
                double e_raw, f_over_r;
                if (!lj_visit(fg_lj[std::size_t(type_a) * n_fg_types +
                                    scratch.site_types[std::size_t(b)]],
                              norm2(d), e_raw, f_over_r))
                    continue;
                const double w = pair_weight(lam_m, lam_b);
                f += (w * f_over_r) * d;
                energy.fg_nonbonded += 0.5 * w * e_raw;
                attr += 0.5 * e_raw;
            }
            forces.fg_nonbonded_scaled[std::size_t(a)] = f;
        }
        scratch.attr_fg[std::size_t(m)] = attr;
    }

    // CG nonbonded between beads, weighted by (1 - w), gathered per owned bead.
    const std::vector<LjDerived> cg_lj = derive_lj_table(topo.cg_lj());
    const int n_cg_types = topo.cg_lj().n_types();
    const LjDerived& bead_lj = cg_lj[std::size_t(tmpl.bead_type) * n_cg_types + tmpl.bead_type];
    for (int m = 0; m < n_mols; ++m) {
        if (!sys.owned[std::size_t(m)]) continue;
        const double lam_m = scratch.lam[std::size_t(m)];
        Vec3 f{};
        double attr = 0.0;
        for (std::int32_t j : cg_table.partners_of(m)) {
            const double lam_j = scratch.lam[std::size_t(j)];
            // Pure FG pair: (1 - w) and both lambda' vanish.
            if (lam_m == 1.0 && lam_j == 1.0) continue;
            const Vec3 d = minimum_image(scratch.com[std::size_t(m)] - scratch.com[std::size_t(j)],
                                         sys.box);
            double e_raw, f_over_r;
            if (!lj_visit(bead_lj, norm2(d), e_raw, f_over_r)) continue;
            const double one_minus_w = 1.0 - pair_weight(lam_m, lam_j);
            f += (one_minus_w * f_over_r) * d;
            energy.cg_nonbonded += 0.5 * one_minus_w * e_raw;
            attr += 0.5 * e_raw;
        }
        scratch.cg_gather[std::size_t(m)] = f;
        scratch.attr_cg[std::size_t(m)] = attr;
    }

    // CG bonded would be distributed the same way; single-bead molecules have
    // no such terms, so only the energy slot exists here.

    // Per-site terms that hang off the molecule-level quantities: the CG pair
    // force and the drift/transition forces distributed by mass fraction.
    for (int m = 0; m < n_mols; ++m) {
        if (!sys.owned[std::size_t(m)]) continue;
        const double lam_m = scratch.lam[std::size_t(m)];
        const double dlam_m = scratch.dlam[std::size_t(m)];
        const Vec3 cg_f = scratch.cg_gather[std::size_t(m)];
        const double drift_fg = -dlam_m * scratch.attr_fg[std::size_t(m)];
        const double drift_cg = dlam_m * scratch.attr_cg[std::size_t(m)];
        const bool has_vt = sys.vt != nullptr && !sys.vt->is_zero();
        double vt_force_x = 0.0;
        if (has_vt) {
            energy.transition += sys.vt->value(lam_m);
            if (dlam_m != 0.0) vt_force_x = -sys.vt->derivative(lam_m) * dlam_m;
        }
        for (int k = 0; k < spm; ++k) {
            const std::size_t site = std::size_t(m * spm + k);
            const double frac = tmpl.site_masses[std::size_t(k)] / tmpl.total_mass;
            forces.cg_nonbonded_distributed[site] = frac * cg_f;
            if (dlam_m != 0.0) {
                forces.fg_drift[site] = {frac * drift_fg, 0.0, 0.0};
                forces.cg_drift[site] = {frac * drift_cg, 0.0, 0.0};
            }
            if (vt_force_x != 0.0) forces.transition[site] = {frac * vt_force_x, 0.0, 0.0};
        }
    }
}

namespace {

struct SerialView {
    std::vector<std::int32_t> molecule_ids;
    std::vector<std::uint8_t> owned;
    std::vector<std::int32_t> fg_groups;
    NeighborTable fg_table;
    NeighborTable cg_table;
    std::vector<Vec3> com;
};

SerialView make_serial_view(std::span<const Vec3> positions, const Topology& topology,
                            const PeriodicBox& box) {
    SerialView v;
    const int n_mols = topology.n_molecules();
    v.molecule_ids.resize(std::size_t(n_mols));
    std::iota(v.molecule_ids.begin(), v.molecule_ids.end(), 0);
    v.owned.assign(std::size_t(n_mols), 1);
    v.fg_groups.resize(positions.size());
    for (std::size_t i = 0; i < positions.size(); ++i)
        v.fg_groups[i] = topology.molecule_of_site(static_cast<int>(i));
    v.fg_table =
        build_neighbor_table(positions, {}, v.fg_groups, box, topology.fg_lj().max_cutoff());
    v.com.reserve(std::size_t(n_mols));
    for (int m = 0; m < n_mols; ++m)
        v.com.push_back(center_of_mass(topology.molecule(m), positions, box));
    v.cg_table = build_neighbor_table(v.com, {}, {}, box, topology.cg_lj().max_cutoff());
    return v;
}

} // namespace

MultiscaleResult multiscale_forces(std::span<const Vec3> positions, const Topology& topology,
                                   const SwitchingGeometry& geometry, const PeriodicBox& box,
                                   const TransitionPotential& vt) {
    SerialView v = make_serial_view(positions, topology, box);
    LocalSystem sys{&topology, box, geometry, &vt, positions, v.molecule_ids, v.owned};
    AssemblyScratch scratch;
    MultiscaleResult out;
    assemble_multiscale(sys, v.fg_table, v.cg_table, scratch, out.forces, out.energy);
    return out;
}

MultiscaleEnergy multiscale_potential(std::span<const Vec3> positions, const Topology& topology,
                                      const SwitchingGeometry& geometry, const PeriodicBox& box,
                                      const TransitionPotential& vt) {
    return multiscale_forces(positions, topology, geometry, box, vt).energy;
}

} // namespace admd
