#include "wg/pairings.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

namespace wg {

Perm::Perm(std::vector<int> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size(), false);
    for (int v : img_) {
        if (v < 0 || v >= static_cast<int>(img_.size()) || seen[static_cast<size_t>(v)]) {
            throw std::invalid_argument("permutation images are not a bijection");
        }
        seen[static_cast<size_t>(v)] = true;
    }
}

Perm Perm::identity(int m) {
    std::vector<int> img(static_cast<size_t>(m));
    std::iota(img.begin(), img.end(), 0);
    return Perm(std::move(img));
}

Perm Perm::compose(const Perm& rhs) const {
    if (size() != rhs.size()) throw std::invalid_argument("composing permutations of different sizes");
    std::vector<int> img(img_.size());
    for (size_t i = 0; i < img.size(); ++i) {
        img[i] = img_[static_cast<size_t>(rhs.img_[i])];
    }
    Perm p;
    p.img_ = std::move(img);  // already a bijection
    return p;
}

Perm Perm::inverse() const {
    std::vector<int> img(img_.size());
    for (size_t i = 0; i < img_.size(); ++i) {
        img[static_cast<size_t>(img_[i])] = static_cast<int>(i);
    }
    Perm p;
    p.img_ = std::move(img);
    return p;
}

Partition Perm::cycle_type() const {
    std::vector<bool> seen(img_.size(), false);
    std::vector<int> lens;
    for (size_t i = 0; i < img_.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        size_t j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = static_cast<size_t>(img_[j]);
            ++len;
        }
        lens.push_back(len);
    }
    std::sort(lens.begin(), lens.end(), std::greater<int>());
    return Partition(std::move(lens));
}

PairPartition::PairPartition(std::vector<std::pair<int, int>> blocks) {
    const int m = static_cast<int>(blocks.size()) * 2;
    std::vector<bool> seen(static_cast<size_t>(m), false);
    for (auto& [a, b] : blocks) {
        if (a > b) std::swap(a, b);
        if (a < 0 || b >= m || a == b) throw std::invalid_argument("pairing block out of range");
        if (seen[static_cast<size_t>(a)] || seen[static_cast<size_t>(b)]) {
            throw std::invalid_argument("pairing blocks overlap");
        }
        seen[static_cast<size_t>(a)] = seen[static_cast<size_t>(b)] = true;
    }
    std::sort(blocks.begin(), blocks.end());
    seq_.reserve(static_cast<size_t>(m));
    for (auto [a, b] : blocks) {
        seq_.push_back(a);
        seq_.push_back(b);
    }
}

PairPartition PairPartition::from_flat(std::vector<int> seq) {
    if (seq.size() % 2 != 0) throw std::invalid_argument("flat pairing sequence has odd length");
    std::vector<std::pair<int, int>> blocks;
    blocks.reserve(seq.size() / 2);
    for (size_t i = 0; i + 1 < seq.size(); i += 2) {
        blocks.emplace_back(seq[i], seq[i + 1]);
    }
    return PairPartition(std::move(blocks));
}

PairPartition PairPartition::identity(int n) {
    std::vector<int> seq(static_cast<size_t>(2 * n));
    std::iota(seq.begin(), seq.end(), 0);
    PairPartition p;
    p.seq_ = std::move(seq);
    return p;
}

PairPartition PairPartition::parse(const std::string& text) {
    std::vector<std::pair<int, int>> blocks;
    size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto read_int = [&]() -> int {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (start == pos) throw std::invalid_argument("expected number in pairing");
        return std::stoi(text.substr(start, pos - start));
    };
    skip_ws();
    while (pos < text.size()) {
        if (text[pos] != '{') throw std::invalid_argument("expected '{' in pairing");
        ++pos;
        int a = read_int();
        skip_ws();
        if (pos >= text.size() || text[pos] != ',') throw std::invalid_argument("expected ',' in pairing block");
        ++pos;
        int b = read_int();
        skip_ws();
        if (pos >= text.size() || text[pos] != '}') throw std::invalid_argument("expected '}' in pairing block");
        ++pos;
        if (a < 1 || b < 1) throw std::invalid_argument("pairing points are 1-based");
        blocks.emplace_back(a - 1, b - 1);
        skip_ws();
    }
    return PairPartition(std::move(blocks));
}

std::string PairPartition::str() const {
    std::string out;
    for (size_t i = 0; i + 1 < seq_.size(); i += 2) {
        out += "{" + std::to_string(seq_[i] + 1) + "," + std::to_string(seq_[i + 1] + 1) + "}";
    }
    return out;
}

std::vector<PairPartition> enumerate_pairings(int n) {
    if (n < 1) throw std::invalid_argument("enumerate_pairings requires n >= 1");
    std::vector<PairPartition> out;
    std::vector<int> avail(static_cast<size_t>(2 * n));
    std::iota(avail.begin(), avail.end(), 0);
    std::vector<int> seq;
    auto rec = [&](auto&& self, std::vector<int> rem) -> void {
        if (rem.empty()) {
            out.push_back(PairPartition::from_flat(seq));
            return;
        }
        int first = rem[0];
        for (size_t k = 1; k < rem.size(); ++k) {
            int partner = rem[k];
            std::vector<int> next;
            next.reserve(rem.size() - 2);
            for (size_t i = 1; i < rem.size(); ++i) {
                if (i != k) next.push_back(rem[i]);
            }
            seq.push_back(first);
            seq.push_back(partner);
            self(self, std::move(next));
            seq.pop_back();
            seq.pop_back();
        }
    };
    rec(rec, avail);
    return out;
}

namespace {

class UnionFind {
public:
    explicit UnionFind(int m) : parent_(static_cast<size_t>(m)) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }
    int find(int x) {
        while (parent_[static_cast<size_t>(x)] != x) {
            parent_[static_cast<size_t>(x)] = parent_[static_cast<size_t>(parent_[static_cast<size_t>(x)])];
            x = parent_[static_cast<size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) {
        int ra = find(a), rb = find(b);
        if (ra != rb) parent_[static_cast<size_t>(ra)] = rb;
    }

private:
    std::vector<int> parent_;
};

}  // namespace

Partition coset_type(const Perm& sigma) {
    const int m = sigma.size();
    if (m % 2 != 0) throw std::invalid_argument("coset type needs an even number of points");
    UnionFind uf(m);
    for (int i = 0; i < m / 2; ++i) {
        uf.unite(2 * i, 2 * i + 1);
        uf.unite(sigma(2 * i), sigma(2 * i + 1));
    }
    std::vector<int> size(static_cast<size_t>(m), 0);
    for (int x = 0; x < m; ++x) ++size[static_cast<size_t>(uf.find(x))];
    std::vector<int> halves;
    for (int s : size) {
        if (s == 0) continue;
        assert(s % 2 == 0);
        halves.push_back(s / 2);
    }
    std::sort(halves.begin(), halves.end(), std::greater<int>());
    return Partition(std::move(halves));
}

int loops(const PairPartition& a, const PairPartition& b) {
    if (a.points() != b.points()) throw std::invalid_argument("loop count needs pairings of equal size");
    const int m = a.points();
    UnionFind uf(m);
    for (int i = 0; i < m / 2; ++i) {
        uf.unite(a.flat()[static_cast<size_t>(2 * i)], a.flat()[static_cast<size_t>(2 * i + 1)]);
        uf.unite(b.flat()[static_cast<size_t>(2 * i)], b.flat()[static_cast<size_t>(2 * i + 1)]);
    }
    int count = 0;
    for (int x = 0; x < m; ++x) {
        if (uf.find(x) == x) ++count;
    }
    return count;
}

PairPartition act(const Perm& sigma, const PairPartition& m) {
    if (sigma.size() != m.points()) throw std::invalid_argument("action size mismatch");
    std::vector<std::pair<int, int>> blocks;
    blocks.reserve(static_cast<size_t>(m.pairs()));
    for (int i = 0; i < m.pairs(); ++i) {
        blocks.emplace_back(sigma(m.flat()[static_cast<size_t>(2 * i)]),
                            sigma(m.flat()[static_cast<size_t>(2 * i + 1)]));
    }
    return PairPartition(std::move(blocks));
}

std::vector<Perm> enumerate_hyperoctahedral(int n) {
    if (n < 1) throw std::invalid_argument("hyperoctahedral enumeration requires n >= 1");
    if (n > kHyperoctahedralCap) throw std::invalid_argument("hyperoctahedral enumeration capped at n = 7");
    std::vector<Perm> out;
    out.reserve((static_cast<size_t>(1) << n) * static_cast<size_t>(mpz_get_ui(factorial(n).get_mpz_t())));
    std::vector<int> w(static_cast<size_t>(n));
    std::iota(w.begin(), w.end(), 0);
    do {
        for (unsigned flips = 0; flips < (1u << n); ++flips) {
            std::vector<int> img(static_cast<size_t>(2 * n));
            for (int i = 0; i < n; ++i) {
                int a = 2 * w[static_cast<size_t>(i)];
                int b = a + 1;
                if (flips & (1u << i)) std::swap(a, b);
                img[static_cast<size_t>(2 * i)] = a;
                img[static_cast<size_t>(2 * i + 1)] = b;
            }
            out.push_back(Perm(std::move(img)));
        }
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

std::pair<PairPartition, PairPartition> coset_rep_pair(const Partition& rho) {
    const int n = rho.weight();
    PairPartition base = PairPartition::identity(n);
    std::vector<std::pair<int, int>> blocks;
    int off = 0;
    for (int part : rho.parts()) {
        // chain the points of this segment: {1,2},{3,4},...,{2k-1,0} within it
        for (int i = 0; i + 1 < part; ++i) {
            blocks.emplace_back(off + 2 * i + 1, off + 2 * i + 2);
        }
        blocks.emplace_back(off + 2 * part - 1, off);
        off += 2 * part;
    }
    return {base, PairPartition(std::move(blocks))};
}

std::vector<PairPartition> unitary_pairings(int n) {
    if (n < 1) throw std::invalid_argument("unitary_pairings requires n >= 1");
    std::vector<PairPartition> out;
    std::vector<int> sigma(static_cast<size_t>(n));
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
        std::vector<std::pair<int, int>> blocks;
        blocks.reserve(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) {
            blocks.emplace_back(i, n + sigma[static_cast<size_t>(i)]);
        }
        out.push_back(PairPartition(std::move(blocks)));
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return out;
}

Perm unitary_to_sn(const PairPartition& m) {
    const int n = m.pairs();
    std::vector<int> img(static_cast<size_t>(n), -1);
    for (int i = 0; i < n; ++i) {
        int a = m.flat()[static_cast<size_t>(2 * i)];
        int b = m.flat()[static_cast<size_t>(2 * i + 1)];
        if (a >= n || b < n) throw std::invalid_argument("pairing is not in the unitary subset");
        img[static_cast<size_t>(a)] = b - n;
    }
    return Perm(std::move(img));
}

}  // namespace wg
