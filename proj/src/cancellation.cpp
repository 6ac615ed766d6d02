#include "ratcalc/cancellation.hpp"

namespace ratcalc {

namespace {
thread_local const std::atomic<bool>* current_token = nullptr;
}

CancellationScope::CancellationScope(const std::atomic<bool>& flag) : previous_(current_token) {
    current_token = &flag;
}

CancellationScope::~CancellationScope() {
    current_token = previous_;
}

void check_cancellation() {
    if (current_token && current_token->load(std::memory_order_relaxed))
        throw CancelledError("conversion cancelled");
}

} // namespace ratcalc
