#include "orch5g/failpoint.hpp"

namespace orch5g::failpoint {

std::function<void(const std::string&)> handler;

void hit(const std::string& step) {
  if (handler) handler(step);
}

}  // namespace orch5g::failpoint
