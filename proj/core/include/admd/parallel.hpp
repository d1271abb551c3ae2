#ifndef ADMD_PARALLEL_HPP
#define ADMD_PARALLEL_HPP

#include <algorithm>
#include <condition_variable>
#include <cstdint>
#include <deque>
#include <mutex>
#include <span>
#include <stdexcept>
#include <vector>

#include "admd/box.hpp"
#include "admd/topology.hpp"
#include "admd/vec.hpp"

namespace admd {

/// One x-interval of the box owned by one worker. Slabs partition [0, Lx)
/// exactly; a molecule belongs to the slab containing its COM x-coordinate
/// and is always owned whole.
struct WorkerSlab {
    int worker_id = 0;
    double x_lo = 0.0;
    double x_hi = 0.0;
    std::vector<std::int32_t> owned_molecules;  // global ids, ascending
};

class DecomposeError : public std::runtime_error {
public:
    DecomposeError(const std::string& msg, int max_feasible)
        : std::runtime_error(msg), max_feasible_workers(max_feasible) {}
    int max_feasible_workers = 0;
};

class ProtocolError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class MigrationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Slab index owning x (wrapped into the box). Shared by decomposition and
/// migration so ownership decisions always agree.
inline int slab_of(double x, const PeriodicBox& box, int n_workers) {
    const double w = x - box.lx * std::floor(x / box.lx);
    int s = static_cast<int>(w / box.lx * n_workers);
    return std::clamp(s, 0, n_workers - 1);
}

/// Equal-width slabs along x with whole-molecule assignment by COM.
/// Throws DecomposeError (carrying the maximum feasible worker count) when
/// the slab width would drop below the halo width.
std::vector<WorkerSlab> decompose(const PeriodicBox& box, int n_workers, const Topology& topology,
                                  std::span<const Vec3> positions, double halo_width);

/// Inter-worker message: halo copies each step, molecule handoff at
/// migration. Payload is blocked per molecule (sites_per_molecule entries per
/// record); velocities travel only when migrating.
struct HaloMessage {
    enum class Kind : std::uint8_t { halo = 0, migrate = 1 };

    std::uint64_t step = 0;
    std::int32_t sender = -1;
    Kind kind = Kind::halo;
    std::int8_t direction = 0;  // +1 = sent to the right neighbor, -1 = left

    std::vector<std::int32_t> molecule_ids;
    std::vector<Vec3> positions;
    std::vector<Vec3> velocities;

    /// Wire size: fixed-layout header (step, sender, kind, direction, record
    /// count) plus the per-molecule payload.
    std::size_t byte_size() const {
        constexpr std::size_t header = sizeof(std::uint64_t) + sizeof(std::int32_t) + 2 +
                                       sizeof(std::uint32_t);
        return header + molecule_ids.size() * sizeof(std::int32_t) +
               (positions.size() + velocities.size()) * sizeof(Vec3);
    }
};

/// Indices (into the owned list) of molecules whose COM lies within
/// halo_width of the slab boundary in the given direction (+1 right, -1 left).
std::vector<std::int32_t> halo_selection(const WorkerSlab& slab,
                                         std::span<const double> owned_com_x, double halo_width,
                                         int direction);

/// Direction of a one-slab hop from `from` to `to` under periodic wrap.
/// Throws MigrationError when the molecule moved further than one slab.
int migration_direction(int from, int to, int n_workers);

/// Fixed-order reduction: exactly one contribution per worker id, folded in
/// ascending id order so the result does not depend on arrival order.
/// Throws ProtocolError when a contribution is missing or duplicated.
double reduce_scalars(std::span<const std::pair<int, double>> parts, int n_workers);

struct ChannelClosed : std::exception {
    const char* what() const noexcept override { return "channel closed"; }
};

/// Unbounded MPSC mailbox with predicate matching. All inter-worker data
/// flows through these; workers share no mutable simulation state.
template <class T>
class Channel {
public:
    void push(T msg) {
        {
            std::lock_guard lock(mutex_);
            if (closed_) return;  // receiver is gone; message is dropped
            queue_.push_back(std::move(msg));
        }
        cv_.notify_all();
    }

    template <class Pred>
    T receive(Pred pred) {
        std::unique_lock lock(mutex_);
        for (;;) {
            const auto it = std::find_if(queue_.begin(), queue_.end(), pred);
            if (it != queue_.end()) {
                T out = std::move(*it);
                queue_.erase(it);
                return out;
            }
            if (closed_) throw ChannelClosed{};
            cv_.wait(lock);
        }
    }

    void close() {
        {
            std::lock_guard lock(mutex_);
            closed_ = true;
        }
        cv_.notify_all();
    }

private:
    std::mutex mutex_;
    std::condition_variable cv_;
    std::deque<T> queue_;
    bool closed_ = false;
};

} // namespace admd

#endif
