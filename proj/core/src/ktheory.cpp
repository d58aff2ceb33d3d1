#include "dnc/ktheory.hpp"

#include "dnc/errors.hpp"

namespace dnc {

KGroups kgroups(int n, int l) {
    if (l < 0 || n < 0 || l > n) throw Error(ErrorCode::invalid_signature, "K-groups need 0 <= l <= n");
    if (n - l - 1 >= 64) throw Error(ErrorCode::invalid_signature, "rank does not fit in 64 bits");
    if (n == l) return {1, 0, true};
    std::uint64_t r = std::uint64_t{1} << (n - l - 1);
    return {r, r, true};
}

std::string group_string(std::uint64_t rank) {
    if (rank == 0) return "0";
    if (rank == 1) return "Z";
    return "Z^" + std::to_string(rank);
}

} // namespace dnc
