#ifndef ADMD_MULTISCALE_HPP
#define ADMD_MULTISCALE_HPP

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "admd/forcefield.hpp"
#include "admd/neighbor.hpp"
#include "admd/switching.hpp"
#include "admd/topology.hpp"

namespace admd {

/// Symmetric per-pair resolution weight. Reduces to the single-molecule
/// weight when both molecules share the same lambda.
inline double pair_weight(double lambda_i, double lambda_j) noexcept {
    return 0.5 * (lambda_i + lambda_j);
}

/// Corrective potential over the hybrid zone, tabulated as V_t(lambda).
/// Outside the ramp lambda is constant (0 or 1), so the tabulated value is a
/// constant offset there and contributes no force.
class TransitionPotential {
public:
    TransitionPotential() = default;  // zero mode

    static TransitionPotential zero() { return {}; }

    /// Natural cubic spline through (lambda, energy) knots. The knots must
    /// be strictly increasing and cover [0, 1].
    static TransitionPotential tabulated(std::vector<double> lambdas,
                                         std::vector<double> energies);

    /// Two-column text table; first non-comment line declares the mode
    /// ("mode zero" or "mode tabulated"), then one "lambda energy" row per line.
    static TransitionPotential load(const std::filesystem::path& path);

    bool is_zero() const { return knots_.empty(); }

    /// Throws std::out_of_range for lambda outside the tabulated range.
    double value(double lam) const;
    double derivative(double lam) const;

private:
    std::size_t segment(double lam) const;

    std::vector<double> knots_;
    std::vector<double> values_;
    std::vector<double> second_;  // spline second derivatives
};

/// Force on one site from the transition potential:
/// -dV_t/dlambda * lambda' * (m_ik / M_i) along x.
Vec3 transition_force(double mass_fraction, double lam, double lam_prime,
                      const TransitionPotential& vt);

/// Every term of the multiscale force, kept per site so the combination can
/// be audited term by term.
struct ForceBreakdown {
    std::vector<Vec3> fg_nonbonded_scaled;      // w_ij-weighted FG pair forces
    std::vector<Vec3> fg_bonded;                // unscaled, computed everywhere
    std::vector<Vec3> fg_drift;                 // -(m/M) lambda' V^nb_FG,i along x
    std::vector<Vec3> cg_nonbonded_distributed; // (1-w) CG pair forces, mass-fraction split
    std::vector<Vec3> cg_drift;                 // +(m/M) lambda' V^nb_CG,i along x
    std::vector<Vec3> cg_bonded_distributed;
    std::vector<Vec3> transition;

    void resize(std::size_t n);
    Vec3 total(std::size_t site) const;
    std::vector<Vec3> totals() const;
    std::size_t n_sites() const { return fg_bonded.size(); }
};

struct MultiscaleEnergy {
    double fg_nonbonded = 0.0;  // sum_pairs w_ij u_ij
    double cg_nonbonded = 0.0;  // sum_pairs (1 - w_IJ) U_IJ
    double fg_bonded = 0.0;
    double cg_bonded = 0.0;
    double transition = 0.0;    // sum_i V_t(lambda_i)

    double total() const {
        return fg_nonbonded + cg_nonbonded + fg_bonded + cg_bonded + transition;
    }
};

/// View of the molecules a worker assembles forces for. Positions are blocked
/// per local molecule (template-sized slices); `molecule_ids` maps local
/// molecule slots to global ids and `owned` marks the molecules whose forces
/// and energy contributions this caller accumulates (halo copies are context
/// only). The serial API wraps the whole system in one view.
struct LocalSystem {
    const Topology* topology = nullptr;
    PeriodicBox box;
    SwitchingGeometry geometry;
    const TransitionPotential* vt = nullptr;  // nullptr behaves as zero mode
    std::span<const Vec3> positions;
    std::span<const std::int32_t> molecule_ids;
    std::span<const std::uint8_t> owned;

    int n_local_molecules() const { return static_cast<int>(molecule_ids.size()); }
    int n_local_sites() const { return n_local_molecules() * topology->sites_per_molecule(); }
};

/// Per-step scratch reused across calls to keep the hot path allocation-free.
struct AssemblyScratch {
    std::vector<Vec3> com;
    std::vector<double> lam;
    std::vector<double> dlam;
    std::vector<double> attr_fg;   // half-sum of raw FG pair energies per molecule
    std::vector<double> attr_cg;   // half-sum of raw CG pair energies per molecule
    std::vector<Vec3> cg_gather;   // (1-w)-weighted CG pair force per molecule
    std::vector<std::int32_t> site_types;
};

/// Assembles the multiscale forces and energy over the view. `fg_table` and
/// `cg_table` hold partner lists for the local sites and local beads; pair
/// visits are gathered per owned site in partner-key order, which makes the
/// per-site sums independent of the decomposition.
void assemble_multiscale(const LocalSystem& sys, const NeighborTable& fg_table,
                         const NeighborTable& cg_table, AssemblyScratch& scratch,
                         ForceBreakdown& forces, MultiscaleEnergy& energy);

/// Serial whole-system multiscale potential (builds tables internally).
MultiscaleEnergy multiscale_potential(std::span<const Vec3> positions, const Topology& topology,
                                      const SwitchingGeometry& geometry, const PeriodicBox& box,
                                      const TransitionPotential& vt = {});

/// Serial whole-system multiscale forces; energy is reported alongside since
/// the assembly produces both.
struct MultiscaleResult {
    ForceBreakdown forces;
    MultiscaleEnergy energy;
};

MultiscaleResult multiscale_forces(std::span<const Vec3> positions, const Topology& topology,
                                   const SwitchingGeometry& geometry, const PeriodicBox& box,
                                   const TransitionPotential& vt = {});

} // namespace admd

#endif
