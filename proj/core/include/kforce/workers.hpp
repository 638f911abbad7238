#pragma once

namespace kforce {

/// Worker count from KFORCE_WORKERS, else std::thread::hardware_concurrency()
/// (at least 1).
int default_worker_count();

}  // namespace kforce
