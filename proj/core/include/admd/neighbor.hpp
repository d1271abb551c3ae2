#ifndef ADMD_NEIGHBOR_HPP
#define ADMD_NEIGHBOR_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "admd/box.hpp"
#include "admd/vec.hpp"

namespace admd {

/// Full (two-sided) neighbor lists: every interacting pair appears in both
/// sites' partner lists. Partners are ordered by ascending sort key so the
/// per-site force accumulation order is identical no matter how the system is
/// laid out across workers.
struct NeighborTable {
    std::vector<std::int32_t> offsets;   // size n_sites + 1
    std::vector<std::int32_t> partners;  // local indices

    std::span<const std::int32_t> partners_of(std::int32_t site) const {
        return {partners.data() + offsets[std::size_t(site)],
                partners.data() + offsets[std::size_t(site) + 1]};
    }
    std::size_t n_sites() const { return offsets.empty() ? 0 : offsets.size() - 1; }
};

/// Builds neighbor lists with all pairs at distance <= range. Pairs whose
/// group ids match are skipped (pass the molecule index per site to realize
/// the intra-molecular exclusions; self pairs are always skipped).
///
/// `sort_keys` orders each partner list (pass global ids in parallel runs;
/// empty means local index order). Uses a cell grid spanning the full
/// periodic box when at least 3 cells fit per dimension, otherwise falls
/// back to the all-pairs scan; both produce identical tables.
NeighborTable build_neighbor_table(std::span<const Vec3> positions,
                                   std::span<const std::int64_t> sort_keys,
                                   std::span<const std::int32_t> group_ids,
                                   const PeriodicBox& box, double range);

/// Largest minimum-image displacement between two snapshots of the same
/// sites; drives the skin/2 rebuild trigger.
double max_displacement(std::span<const Vec3> current, std::span<const Vec3> reference,
                        const PeriodicBox& box);

} // namespace admd

#endif
