#include "orch5g/world.hpp"

#include <cstdio>

namespace orch5g {

Id next_id(World& world, const std::string& prefix) {
  std::int64_t n = ++world.id_counters[prefix];
  char buf[24];
  std::snprintf(buf, sizeof buf, "%06lld", static_cast<long long>(n));
  return prefix + "-" + buf;
}

}  // namespace orch5g
