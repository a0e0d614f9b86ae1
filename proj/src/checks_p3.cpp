#include "skewpair/checks.hpp"

namespace skewpair {
template CheckOutcome run_check<3>(int, std::uint64_t, int);
}  // namespace skewpair
