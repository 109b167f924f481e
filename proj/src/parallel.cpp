#include "pursuit/parallel.hpp"

#include <cstdlib>
#include <string>

namespace pursuit {

unsigned thread_count() {
    if (const char* env = std::getenv("PURSUIT_THREADS")) {
        try {
            const int value = std::stoi(env);
            if (value > 0) {
                return static_cast<unsigned>(value);
            }
        } catch (const std::exception&) {
            // fall through to the hardware default
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace pursuit
