#pragma once

#include <functional>
#include <string>

namespace orch5g::failpoint {

// Hook invoked at every internal step of a multi-step transaction. Tests
// install a handler that throws at a chosen step to prove the surrounding
// rollback is total; in normal operation the hook is empty and hit() is a
// cheap no-op.
extern std::function<void(const std::string& step)> handler;

void hit(const std::string& step);

}  // namespace orch5g::failpoint
