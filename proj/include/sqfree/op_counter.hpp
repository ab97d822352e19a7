#ifndef SQFREE_OP_COUNTER_HPP
#define SQFREE_OP_COUNTER_HPP

#include <cstdint>

namespace sqfree {

/// Tally of Rational x Rational multiplications.
struct OpCounter {
  std::uint64_t scalar_muls = 0;
};

/// Installs `counter` as the active counter of the calling thread for the
/// lifetime of the scope. Scopes nest; only the innermost one is charged,
/// and the previous counter is restored on exit.
class CountingScope {
 public:
  explicit CountingScope(OpCounter& counter) noexcept;
  ~CountingScope();

  CountingScope(const CountingScope&) = delete;
  CountingScope& operator=(const CountingScope&) = delete;

 private:
  OpCounter* previous_;
};

namespace detail {

extern thread_local OpCounter* active_counter;

inline void count_scalar_muls(std::uint64_t n) noexcept {
  if (active_counter != nullptr) active_counter->scalar_muls += n;
}

}  // namespace detail
}  // namespace sqfree

#endif  // SQFREE_OP_COUNTER_HPP
