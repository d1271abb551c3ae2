#include "admd/forcefield.hpp"

#include <cmath>
#include <stdexcept>

namespace admd {

LjDerived derive_lj(const LjParams& p) {
    LjDerived d;
    d.sigma2 = p.sigma * p.sigma;
    d.four_eps = 4.0 * p.epsilon;
    d.cutoff2 = p.cutoff * p.cutoff;
    const double sr2 = d.sigma2 / d.cutoff2;
    const double sr6 = sr2 * sr2 * sr2;
    d.shift = d.four_eps * (sr6 * sr6 - sr6);
    return d;
}

std::vector<LjDerived> derive_lj_table(const LjTable& table) {
    const int n = table.n_types();
    std::vector<LjDerived> out(std::size_t(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (table.has(a, b)) out[std::size_t(a) * n + b] = derive_lj(table.get(a, b));
    return out;
}

LjPairResult lj_pair(double r, const LjParams& p) {
    if (!(r > 0.0)) throw std::domain_error("lj_pair: nonpositive distance (overlapping sites)");
    if (r >= p.cutoff) return {0.0, 0.0};
    const LjDerived d = derive_lj(p);
    const double sr2 = d.sigma2 / (r * r);
    const double sr6 = sr2 * sr2 * sr2;
    const double sr12 = sr6 * sr6;
    LjPairResult out;
    out.energy = d.four_eps * (sr12 - sr6) - d.shift;
    out.force = 6.0 * d.four_eps * (2.0 * sr12 - sr6) / r;
    return out;
}

namespace {

// Shared inner-loop form: energy and f/r for r^2 below the cutoff.
inline bool lj_visit(const LjDerived& d, double r2, double& energy, double& f_over_r) {
    if (r2 >= d.cutoff2 || r2 <= 0.0) return false;
    const double sr2 = d.sigma2 / r2;
    const double sr6 = sr2 * sr2 * sr2;
    const double sr12 = sr6 * sr6;
    energy = d.four_eps * (sr12 - sr6) - d.shift;
    f_over_r = 6.0 * d.four_eps * (2.0 * sr12 - sr6) / r2;
    return true;
}

void bond_force(const Vec3& xi, const Vec3& xj, const BondParam& p, const PeriodicBox& box,
                Vec3& fi, Vec3& fj, double& energy) {
    const Vec3 d = minimum_image(xi - xj, box);
    const double r = norm(d);
    if (!(r > 0.0)) throw std::domain_error("bond between coincident sites");
    const double dr = r - p.r0;
    energy += 0.5 * p.k * dr * dr;
    const Vec3 f = (-p.k * dr / r) * d;
    fi += f;
    fj -= f;
}

void angle_force(const Vec3& xi, const Vec3& xj, const Vec3& xk, const AngleParam& p,
                 const PeriodicBox& box, Vec3& fi, Vec3& fj, Vec3& fk, double& energy) {
    const Vec3 u = minimum_image(xi - xj, box);
    const Vec3 v = minimum_image(xk - xj, box);
    const double ru = norm(u);
    const double rv = norm(v);
    if (!(ru > 0.0) || !(rv > 0.0))
        throw std::domain_error("degenerate angle: zero-length arm");
    double cos_t = dot(u, v) / (ru * rv);
    cos_t = std::clamp(cos_t, -1.0, 1.0);
    const double sin_t = std::sqrt(1.0 - cos_t * cos_t);
    if (sin_t < 1e-9) throw std::domain_error("degenerate angle: collinear arms");
    const double theta = std::acos(cos_t);
    const double dv_dtheta = p.k * (theta - p.theta0);
    energy += 0.5 * p.k * (theta - p.theta0) * (theta - p.theta0);

    // F_i = dV/dtheta * grad_i cos(theta) / sin(theta), and symmetrically for k.
    const double c = dv_dtheta / sin_t;
    const Vec3 grad_i = (1.0 / ru) * ((1.0 / rv) * v - (cos_t / ru) * u);
    const Vec3 grad_k = (1.0 / rv) * ((1.0 / ru) * u - (cos_t / rv) * v);
    const Vec3 f_i = c * grad_i;
    const Vec3 f_k = c * grad_k;
    fi += f_i;
    fk += f_k;
    fj -= f_i + f_k;
}

void dihedral_force(const Vec3& xi, const Vec3& xj, const Vec3& xk, const Vec3& xl,
                    const DihedralParam& p, const PeriodicBox& box, Vec3& fi, Vec3& fj, Vec3& fk,
                    Vec3& fl, double& energy) {
    const Vec3 b1 = minimum_image(xj - xi, box);
    const Vec3 b2 = minimum_image(xk - xj, box);
    const Vec3 b3 = minimum_image(xl - xk, box);
    const Vec3 m = cross(b1, b2);
    const Vec3 n = cross(b2, b3);
    const double m2 = norm2(m);
    const double n2 = norm2(n);
    const double b2len = norm(b2);
    if (m2 < 1e-18 || n2 < 1e-18 || b2len < 1e-12)
        throw std::domain_error("degenerate dihedral: collinear backbone");

    const double phi = std::atan2(dot(cross(m, n), b2) / b2len, dot(m, n));

    // V = sum c_n cos^n(psi), psi = phi - pi, so cos(psi) = -cos(phi).
    const double cp = -std::cos(phi);
    double v = p.c[0];
    double dv_dphi_over_sin = 0.0;  // sum n c_n cos^{n-1}(psi)
    double power = 1.0;
    for (int nth = 1; nth < 6; ++nth) {
        dv_dphi_over_sin += nth * p.c[std::size_t(nth)] * power;
        power *= cp;
        v += p.c[std::size_t(nth)] * power;
    }
    energy += v;
    const double dv_dphi = std::sin(phi) * dv_dphi_over_sin;

    // Analytic dihedral gradient: dphi/dx_i = -(|b2|/|m|^2) m and
    // dphi/dx_l = (|b2|/|n|^2) n; the j/k terms follow from the force- and
    // torque-free distribution of the remainder.
    const Vec3 f_i = (dv_dphi * b2len / m2) * m;
    const Vec3 f_l = (-dv_dphi * b2len / n2) * n;
    const double t1 = dot(b1, b2) / (b2len * b2len);
    const double t2 = dot(b3, b2) / (b2len * b2len);
    const Vec3 sv = t1 * f_i - t2 * f_l;
    fi += f_i;
    fj += sv - f_i;
    fk += -sv - f_l;
    fl += f_l;
}

} // namespace

void accumulate_bonded_molecule(const MoleculeTemplate& tmpl, int first_site,
                                std::span<const Vec3> positions, const PeriodicBox& box,
                                std::span<Vec3> forces, double& energy) {
    for (const BondTerm& t : tmpl.bonds)
        bond_force(positions[std::size_t(first_site + t.i)], positions[std::size_t(first_site + t.j)],
                   tmpl.bond_params[std::size_t(t.param)], box, forces[std::size_t(first_site + t.i)],
                   forces[std::size_t(first_site + t.j)], energy);
    for (const AngleTerm& t : tmpl.angles)
        angle_force(positions[std::size_t(first_site + t.i)], positions[std::size_t(first_site + t.j)],
                    positions[std::size_t(first_site + t.k)], tmpl.angle_params[std::size_t(t.param)],
                    box, forces[std::size_t(first_site + t.i)], forces[std::size_t(first_site + t.j)],
                    forces[std::size_t(first_site + t.k)], energy);
    for (const DihedralTerm& t : tmpl.dihedrals)
        dihedral_force(positions[std::size_t(first_site + t.i)],
                       positions[std::size_t(first_site + t.j)],
                       positions[std::size_t(first_site + t.k)],
                       positions[std::size_t(first_site + t.l)],
                       tmpl.dihedral_params[std::size_t(t.param)], box,
                       forces[std::size_t(first_site + t.i)], forces[std::size_t(first_site + t.j)],
                       forces[std::size_t(first_site + t.k)], forces[std::size_t(first_site + t.l)],
                       energy);
}

EnergyForces fg_bonded(std::span<const Vec3> positions, const Topology& topology,
                       const PeriodicBox& box) {
    EnergyForces out;
    out.forces.assign(positions.size(), Vec3{});
    const MoleculeTemplate& tmpl = topology.molecule_template();
    for (int i = 0; i < topology.n_molecules(); ++i)
        accumulate_bonded_molecule(tmpl, topology.molecule(i).first_site, positions, box,
                                   out.forces, out.energy);
    return out;
}

EnergyForces fg_nonbonded(std::span<const Vec3> positions, const Topology& topology,
                          const PeriodicBox& box, const NeighborTable& table) {
    EnergyForces out;
    out.forces.assign(positions.size(), Vec3{});
    const std::vector<LjDerived> lj = derive_lj_table(topology.fg_lj());
    const int n_types = topology.fg_lj().n_types();

    for (std::int32_t a = 0; a < static_cast<std::int32_t>(positions.size()); ++a) {
        const int type_a = topology.site_type(a);
        Vec3 f{};
        double e = 0.0;
        for (std::int32_t b : table.partners_of(a)) {
            const Vec3 d = minimum_image(positions[std::size_t(a)] - positions[std::size_t(b)], box);
            double pair_e, f_over_r;
            if (!lj_visit(lj[std::size_t(type_a) * n_types + topology.site_type(b)], norm2(d),
                          pair_e, f_over_r))
                continue;
            f += f_over_r * d;
            e += 0.5 * pair_e;
        }
        out.forces[std::size_t(a)] = f;
        out.energy += e;
    }
    return out;
}

EnergyForces fg_nonbonded(std::span<const Vec3> positions, const Topology& topology,
                          const PeriodicBox& box) {
    std::vector<std::int32_t> groups(positions.size());
    for (std::size_t i = 0; i < positions.size(); ++i)
        groups[i] = topology.molecule_of_site(static_cast<int>(i));
    const NeighborTable table =
        build_neighbor_table(positions, {}, groups, box, topology.fg_lj().max_cutoff());
    return fg_nonbonded(positions, topology, box, table);
}

EnergyForces cg_nonbonded(const CgView& cg, const Topology& topology, const PeriodicBox& box,
                          const NeighborTable& table) {
    EnergyForces out;
    out.forces.assign(cg.positions.size(), Vec3{});
    const std::vector<LjDerived> lj = derive_lj_table(topology.cg_lj());
    const int n_types = topology.cg_lj().n_types();
    const int bead_type = topology.molecule_template().bead_type;

    for (std::int32_t a = 0; a < static_cast<std::int32_t>(cg.positions.size()); ++a) {
        Vec3 f{};
        double e = 0.0;
        for (std::int32_t b : table.partners_of(a)) {
            const Vec3 d =
                minimum_image(cg.positions[std::size_t(a)] - cg.positions[std::size_t(b)], box);
            double pair_e, f_over_r;
            if (!lj_visit(lj[std::size_t(bead_type) * n_types + bead_type], norm2(d), pair_e,
                          f_over_r))
                continue;
            f += f_over_r * d;
            e += 0.5 * pair_e;
        }
        out.forces[std::size_t(a)] = f;
        out.energy += e;
    }
    return out;
}

EnergyForces cg_nonbonded(const CgView& cg, const Topology& topology, const PeriodicBox& box) {
    const NeighborTable table =
        build_neighbor_table(cg.positions, {}, {}, box, topology.cg_lj().max_cutoff());
    return cg_nonbonded(cg, topology, box, table);
}

EnergyForces cg_bonded(std::span<const Vec3> bead_positions, const CgBondedTerms& terms,
                       const PeriodicBox& box) {
    EnergyForces out;
    out.forces.assign(bead_positions.size(), Vec3{});
    for (const BondTerm& t : terms.bonds)
        bond_force(bead_positions[std::size_t(t.i)], bead_positions[std::size_t(t.j)],
                   terms.params[std::size_t(t.param)], box, out.forces[std::size_t(t.i)],
                   out.forces[std::size_t(t.j)], out.energy);
    return out;
}

EnergyForces cg_bonded(const CgView& cg, const Topology& /*topology*/, const PeriodicBox& box) {
    // One bead per molecule: no intra-molecular CG structure exists, so the
    // term is identically zero for every topology this engine loads.
    return cg_bonded(cg.positions, CgBondedTerms{}, box);
}

} // namespace admd
