#pragma once

#include "wg/partitions.hpp"

#include <compare>
#include <string>
#include <utility>
#include <vector>

namespace wg {

// Permutation of {0,...,m-1} stored as its image sequence.
class Perm {
public:
    Perm() = default;
    explicit Perm(std::vector<int> images);  // validates bijection
    static Perm identity(int m);

    int size() const { return static_cast<int>(img_.size()); }
    int operator()(int i) const { return img_[static_cast<size_t>(i)]; }
    const std::vector<int>& images() const { return img_; }

    Perm compose(const Perm& rhs) const;  // (this ∘ rhs)(i) = this(rhs(i))
    Perm inverse() const;
    Partition cycle_type() const;

    auto operator<=>(const Perm&) const = default;

private:
    std::vector<int> img_;
};

// Perfect matching of {0,...,2n-1}, stored as the canonical flattened block
// sequence s: s[2i] < s[2i+1] and s[0] < s[2] < ... < s[2n-2]. The text form
// is 1-based, e.g. "{1,2}{3,4}".
class PairPartition {
public:
    explicit PairPartition(std::vector<std::pair<int, int>> blocks);
    static PairPartition from_flat(std::vector<int> seq);  // canonicalizes
    static PairPartition identity(int n);                  // {0,1}{2,3}...
    static PairPartition parse(const std::string& text);

    int pairs() const { return static_cast<int>(seq_.size()) / 2; }
    int points() const { return static_cast<int>(seq_.size()); }
    const std::vector<int>& flat() const { return seq_; }

    Perm to_perm() const { return Perm(seq_); }
    std::string str() const;

    auto operator<=>(const PairPartition&) const = default;

private:
    PairPartition() = default;
    std::vector<int> seq_;
};

// All (2n-1)!! pair partitions, lexicographic in the flattened sequence
// (the identity pairing comes first).
std::vector<PairPartition> enumerate_pairings(int n);

// Coset type of a permutation on 2n points: half the (even) component sizes
// of the graph with edges {2i,2i+1} and {sigma(2i),sigma(2i+1)}.
Partition coset_type(const Perm& sigma);

// connected components of the union multigraph of two pairings
int loops(const PairPartition& a, const PairPartition& b);

// blockwise image {sigma(a),sigma(b)}, re-canonicalized
PairPartition act(const Perm& sigma, const PairPartition& m);

inline constexpr int kHyperoctahedralCap = 7;

// All 2^n n! permutations preserving the block structure {0,1}{2,3}...:
// a block permutation combined with independent in-block swaps.
std::vector<Perm> enumerate_hyperoctahedral(int n);

// A pair (m, n) of pairings whose relative coset type is rho: m is the
// identity pairing and n chains the blocks of each part into one loop.
std::pair<PairPartition, PairPartition> coset_rep_pair(const Partition& rho);

// The n! pairings matching {0,...,n-1} with {n,...,2n-1}.
std::vector<PairPartition> unitary_pairings(int n);

// For m in the unitary subset, the permutation sigma with sigma(i) = j
// exactly when m links i and n+j; throws otherwise.
Perm unitary_to_sn(const PairPartition& m);

}  // namespace wg
