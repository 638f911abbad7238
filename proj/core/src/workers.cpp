#include "kforce/workers.hpp"

#include <cstdlib>
#include <string>
#include <thread>

namespace kforce {

int default_worker_count()
{
    if (const char * env = std::getenv("KFORCE_WORKERS")) {
        try {
            int n = std::stoi(env);
            if (n >= 1)
                return n;
        }
        catch (...) {
        }
    }
    auto hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace kforce
