#pragma once

#include "ratcalc/errors.hpp"

#include <atomic>

namespace ratcalc {

// A conversion interrupted through its cancellation token.
class CancelledError : public Error {
public:
    using Error::Error;
};

// Cooperative cancellation for long-running conversions (reduction,
// state elimination, rank computation). The token is thread-local;
// another thread flips the flag, the working thread notices between
// elimination steps. Scoped installation keeps nesting safe.
class CancellationScope {
public:
    explicit CancellationScope(const std::atomic<bool>& flag);
    ~CancellationScope();

    CancellationScope(const CancellationScope&) = delete;
    CancellationScope& operator=(const CancellationScope&) = delete;

private:
    const std::atomic<bool>* previous_;
};

// Throws CancelledError when the installed token is set; no-op without
// a scope. Called by the elimination loops.
void check_cancellation();

} // namespace ratcalc
