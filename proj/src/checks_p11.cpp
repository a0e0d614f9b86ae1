#include "skewpair/checks.hpp"

namespace skewpair {
template CheckOutcome run_check<11>(int, std::uint64_t, int);
}  // namespace skewpair
