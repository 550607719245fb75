#pragma once

#include <cstdint>
#include <functional>
#include <queue>
#include <vector>

#include "rrs/simcore/event.hpp"
#include "rrs/simcore/metrics.hpp"

namespace rrs::sim {

// Single-threaded discrete-event kernel. Events fire in (fire_time,
// sequence_id) order; the clock never moves backwards.
class Kernel {
 public:
  using Handler = std::function<void(const Event&)>;

  void set_handler(Handler handler) { handler_ = std::move(handler); }

  // Returns the event's sequence id. Throws PastEvent if fire_time < now().
  std::uint64_t schedule(Event event);

  // Executes every event with fire_time <= t_end, then sets the clock to t_end.
  // Handler failures are rethrown as EventHandler errors naming the event.
  MetricsLog& run_until(SimTime t_end);

  SimTime now() const { return clock_; }
  std::size_t pending() const { return queue_.size(); }

  MetricsLog& metrics() { return metrics_; }
  const MetricsLog& metrics() const { return metrics_; }

 private:
  struct Entry {
    Event event;
    std::uint64_t insertion = 0;
  };
  struct Later {
    bool operator()(const Entry& a, const Entry& b) const;
  };

  std::priority_queue<Entry, std::vector<Entry>, Later> queue_;
  SimTime clock_{0};
  std::uint64_t next_sequence_ = 1;
  std::uint64_t insertions_ = 0;
  Handler handler_;
  MetricsLog metrics_;
};

}  // namespace rrs::sim
