#pragma once

#include "wg/rational.hpp"

#include <compare>
#include <string>
#include <vector>

namespace wg {

// Integer partition: weakly decreasing positive parts. The empty partition
// (weight 0) is a legal value everywhere.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);  // throws unless weakly decreasing and positive

    // "2,1,1"; the empty string is the empty partition
    static Partition parse(const std::string& text);

    const std::vector<int>& parts() const { return parts_; }
    int weight() const;
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int part(int i) const {  // 0-based, 0 beyond the length
        return i >= 0 && i < length() ? parts_[static_cast<size_t>(i)] : 0;
    }

    std::string str() const;

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

// All partitions of n, reverse-lexicographic: (n) first, (1^n) last.
std::vector<Partition> partitions_of(int n);

// position of p in partitions_of(p.weight()); throws if absent (never for valid input)
int partition_index(const Partition& p);

BigInt z_mu(const Partition& mu);  // prod_i i^{m_i} m_i!
Partition doubled(const Partition& lambda);
Partition conjugate(const Partition& lambda);

// number of standard Young tableaux of shape lambda (hook length formula)
BigInt dim_f(const Partition& lambda);

// (2n)!/dim_f(doubled((r,s,1^{n-r-s}))) in closed form; requires s >= 1,
// r >= s, r + s <= n
BigInt hook_rsn(int r, int s, int n);

// irreducible symmetric group character chi^lambda on the class of cycle
// type mu; throws on weight mismatch
BigInt mn_character(const Partition& lambda, const Partition& mu);

}  // namespace wg
