#pragma once

#include <cstdint>
#include <string>

namespace dnc {

/// Ranks of K_0 and K_1 of the algebra with n generators, the first l of
/// them isometries. The groups are free abelian and do not depend on the
/// twisting phases.
struct KGroups {
    std::uint64_t k0_rank = 0;
    std::uint64_t k1_rank = 0;
    bool torsion_free = true;

    friend bool operator==(const KGroups&, const KGroups&) = default;
};

/// (1, 0) when n == l, (2^{n-l-1}, 2^{n-l-1}) when n > l.
/// Throws InvalidSignature unless 0 <= l <= n.
KGroups kgroups(int n, int l);

/// "Z^r", or "0" for rank zero.
std::string group_string(std::uint64_t rank);

} // namespace dnc
