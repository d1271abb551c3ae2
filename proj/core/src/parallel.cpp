#include "admd/parallel.hpp"

#include <cmath>
#include <string>

namespace admd {

std::vector<WorkerSlab> decompose(const PeriodicBox& box, int n_workers, const Topology& topology,
                                  std::span<const Vec3> positions, double halo_width) {
    if (n_workers < 1) throw std::invalid_argument("decompose: need at least one worker");
    const double width = box.lx / n_workers;
    if (width < halo_width) {
        const int max_feasible = std::max(1, static_cast<int>(box.lx / halo_width));
        throw DecomposeError("decompose: slab width " + std::to_string(width) +
                                 " nm is below the halo width " + std::to_string(halo_width) +
                                 " nm; at most " + std::to_string(max_feasible) +
                                 " workers fit this box and cutoff",
                             max_feasible);
    }

    std::vector<WorkerSlab> slabs(std::size_t(n_workers));
    for (int w = 0; w < n_workers; ++w) {
        slabs[std::size_t(w)].worker_id = w;
        slabs[std::size_t(w)].x_lo = box.lx * w / n_workers;
        slabs[std::size_t(w)].x_hi = box.lx * (w + 1) / n_workers;
    }
    for (int m = 0; m < topology.n_molecules(); ++m) {
        const Vec3 com = center_of_mass(topology.molecule(m), positions, box);
        slabs[std::size_t(slab_of(com.x, box, n_workers))].owned_molecules.push_back(m);
    }
    return slabs;
}

std::vector<std::int32_t> halo_selection(const WorkerSlab& slab,
                                         std::span<const double> owned_com_x, double halo_width,
                                         int direction) {
    std::vector<std::int32_t> out;
    for (std::size_t i = 0; i < owned_com_x.size(); ++i) {
        const double x = owned_com_x[i];
        const bool near = direction < 0 ? (x - slab.x_lo) <= halo_width
                                        : (slab.x_hi - x) <= halo_width;
        if (near) out.push_back(static_cast<std::int32_t>(i));
    }
    return out;
}

int migration_direction(int from, int to, int n_workers) {
    if (from == to) return 0;
    if (to == (from + 1) % n_workers) return +1;
    if (to == (from - 1 + n_workers) % n_workers) return -1;
    throw MigrationError("molecule moved more than one slab in a single step (worker " +
                         std::to_string(from) + " -> " + std::to_string(to) +
                         "); the time step or slab width is misconfigured");
}

double reduce_scalars(std::span<const std::pair<int, double>> parts, int n_workers) {
    std::vector<char> seen(std::size_t(n_workers), 0);
    std::vector<double> by_id(std::size_t(n_workers), 0.0);
    for (const auto& [id, value] : parts) {
        if (id < 0 || id >= n_workers)
            throw ProtocolError("reduce: contribution from unknown worker " + std::to_string(id));
        if (seen[std::size_t(id)])
            throw ProtocolError("reduce: duplicate contribution from worker " + std::to_string(id));
        seen[std::size_t(id)] = 1;
        by_id[std::size_t(id)] = value;
    }
    for (int w = 0; w < n_workers; ++w)
        if (!seen[std::size_t(w)])
            throw ProtocolError("reduce: missing contribution from worker " + std::to_string(w));
    double total = 0.0;
    for (double v : by_id) total += v;
    return total;
}

} // namespace admd
