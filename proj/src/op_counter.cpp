#include "sqfree/op_counter.hpp"

namespace sqfree {

namespace detail {
thread_local OpCounter* active_counter = nullptr;
}  // namespace detail

CountingScope::CountingScope(OpCounter& counter) noexcept : previous_(detail::active_counter) {
  detail::active_counter = &counter;
}

CountingScope::~CountingScope() { detail::active_counter = previous_; }

}  // namespace sqfree
