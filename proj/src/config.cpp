#include "gqs/config.hpp"

#include "gqs/errors.hpp"

namespace gqs {

namespace {
Limits g_limits{};
}

const Limits& limits() { return g_limits; }

void set_limits(const Limits& l) {
  if (l.max_nodes < 1 || l.max_nodes > 20) {
    throw DomainError("max_nodes must be between 1 and 20");
  }
  if (l.max_edges < 0 || l.max_edges > 12) {
    throw DomainError("max_edges must be between 0 and 12");
  }
  g_limits = l;
}

void reset_limits() { g_limits = Limits{}; }

}  // namespace gqs
