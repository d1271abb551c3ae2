#ifndef ADMD_FORCEFIELD_HPP
#define ADMD_FORCEFIELD_HPP

#include <span>
#include <vector>

#include "admd/box.hpp"
#include "admd/neighbor.hpp"
#include "admd/topology.hpp"
#include "admd/vec.hpp"

namespace admd {

/// Energy plus per-site forces of one interaction class, kept separate so the
/// multiscale combination can weight them individually.
struct EnergyForces {
    double energy = 0.0;             // kJ/mol
    std::vector<Vec3> forces;        // kJ mol^-1 nm^-1, one per site (or bead)
};

struct LjPairResult {
    double energy = 0.0;  // shifted so E(cutoff) = 0
    double force = 0.0;   // -dE/dr along the pair axis; > 0 is repulsive
};

/// Cut-and-shifted 12-6 Lennard-Jones. Exactly (0, 0) for r >= cutoff.
/// Throws std::domain_error for r <= 0 (overlapping sites mean the state is
/// corrupt and continuing would only produce NaNs later).
LjPairResult lj_pair(double r, const LjParams& p);

/// Precomputed per type-pair quantities for the inner loops.
struct LjDerived {
    double sigma2 = 0.0;
    double four_eps = 0.0;
    double cutoff2 = 0.0;
    double shift = 0.0;  // unshifted energy at the cutoff
};

LjDerived derive_lj(const LjParams& p);
std::vector<LjDerived> derive_lj_table(const LjTable& table);

/// FG intermolecular Lennard-Jones over a prebuilt neighbor table
/// (intra-molecular pairs are excluded when the table is built). The table
/// must list each pair from both sides; every visit adds half the pair energy.
EnergyForces fg_nonbonded(std::span<const Vec3> positions, const Topology& topology,
                          const PeriodicBox& box, const NeighborTable& table);

/// Convenience overload that builds the neighbor table internally.
EnergyForces fg_nonbonded(std::span<const Vec3> positions, const Topology& topology,
                          const PeriodicBox& box);

/// Harmonic bonds, harmonic angles and cosine-series dihedrals for every
/// molecule. Throws std::domain_error on degenerate angle/dihedral geometry.
EnergyForces fg_bonded(std::span<const Vec3> positions, const Topology& topology,
                       const PeriodicBox& box);

/// Bonded terms of a single molecule accumulated into caller-owned arrays;
/// `forces` is indexed by the molecule's local site offset base + k.
void accumulate_bonded_molecule(const MoleculeTemplate& tmpl, int first_site,
                                std::span<const Vec3> positions, const PeriodicBox& box,
                                std::span<Vec3> forces, double& energy);

/// CG bead-bead Lennard-Jones (one bead per molecule).
EnergyForces cg_nonbonded(const CgView& cg, const Topology& topology, const PeriodicBox& box,
                          const NeighborTable& table);
EnergyForces cg_nonbonded(const CgView& cg, const Topology& topology, const PeriodicBox& box);

/// CG bonded terms between beads. Single-bead mappings have none, so this is
/// identically (0, zeros) for the shipped systems; the kernel still supports
/// explicit bead bonds.
struct CgBondedTerms {
    std::vector<BondTerm> bonds;  // bead indices
    std::vector<BondParam> params;
};

EnergyForces cg_bonded(std::span<const Vec3> bead_positions, const CgBondedTerms& terms,
                       const PeriodicBox& box);
EnergyForces cg_bonded(const CgView& cg, const Topology& topology, const PeriodicBox& box);

} // namespace admd

#endif
