#include "wg/partitions.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace wg {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1]) {
            throw std::invalid_argument("partition parts must be weakly decreasing");
        }
    }
}

Partition Partition::parse(const std::string& text) {
    std::vector<int> parts;
    std::string trimmed;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
    }
    if (trimmed.empty()) return Partition();
    std::stringstream ss(trimmed);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        parts.push_back(std::stoi(tok));
    }
    return Partition(std::move(parts));
}

int Partition::weight() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string Partition::str() const {
    std::string out;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(parts_[i]);
    }
    return out;
}

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions of negative weight");
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int maxpart) -> void {
        if (remaining == 0) {
            out.push_back(Partition(cur));
            return;
        }
        for (int k = std::min(remaining, maxpart); k >= 1; --k) {
            cur.push_back(k);
            self(self, remaining - k, k);
            cur.pop_back();
        }
    };
    rec(rec, n, n > 0 ? n : 1);
    return out;
}

int partition_index(const Partition& p) {
    auto all = partitions_of(p.weight());
    for (size_t i = 0; i < all.size(); ++i) {
        if (all[i] == p) return static_cast<int>(i);
    }
    throw std::logic_error("partition not found in its own weight class");
}

BigInt z_mu(const Partition& mu) {
    std::map<int, int> mult;
    for (int p : mu.parts()) ++mult[p];
    BigInt out = 1;
    for (auto [i, m] : mult) {
        BigInt ipow;
        mpz_ui_pow_ui(ipow.get_mpz_t(), static_cast<unsigned long>(i), static_cast<unsigned long>(m));
        out *= ipow * factorial(m);
    }
    return out;
}

Partition doubled(const Partition& lambda) {
    std::vector<int> parts = lambda.parts();
    for (int& p : parts) p *= 2;
    return Partition(std::move(parts));
}

Partition conjugate(const Partition& lambda) {
    if (lambda.empty()) return Partition();
    std::vector<int> parts(static_cast<size_t>(lambda.part(0)));
    for (int j = 1; j <= lambda.part(0); ++j) {
        int count = 0;
        for (int p : lambda.parts()) {
            if (p >= j) ++count;
        }
        parts[static_cast<size_t>(j - 1)] = count;
    }
    return Partition(std::move(parts));
}

BigInt dim_f(const Partition& lambda) {
    int n = lambda.weight();
    if (n == 0) return 1;
    Partition lc = conjugate(lambda);
    BigInt hooks = 1;
    for (int i = 1; i <= lambda.length(); ++i) {
        for (int j = 1; j <= lambda.part(i - 1); ++j) {
            hooks *= lambda.part(i - 1) - j + lc.part(j - 1) - i + 1;
        }
    }
    return factorial(n) / hooks;
}

BigInt hook_rsn(int r, int s, int n) {
    if (s < 1 || r < s || r + s > n) throw std::invalid_argument("hook_rsn requires 1 <= s <= r and r+s <= n");
    BigInt out = 1;
    out *= n + r - s + 1;
    out *= n + r - s;
    out *= n - r + s;
    out *= n - r + s - 1;
    out *= factorial(n - r - s + 1);
    out *= factorial(n - r - s);
    out *= factorial(2 * s - 2);
    out *= factorial(2 * r - 1) / (2 * r - 2 * s + 1);
    return out;
}

namespace {

// Border strips are removed through the beta-set encoding: with a fixed
// padding length L, beta_i = lambda_i + (L-1-i). Removing a strip of size r
// replaces some beta element b by b-r (b-r must be free); the sign is the
// parity of the number of beta elements strictly between b-r and b.
struct MnKey {
    std::vector<int> lambda;
    size_t mu_pos;
    bool operator<(const MnKey& o) const {
        if (mu_pos != o.mu_pos) return mu_pos < o.mu_pos;
        return lambda < o.lambda;
    }
};

BigInt mn_rec(const std::vector<int>& lambda, const std::vector<int>& mu, size_t mu_pos,
              std::map<MnKey, BigInt>& memo) {
    if (mu_pos == mu.size()) {
        return lambda.empty() ? BigInt(1) : BigInt(0);
    }
    MnKey key{lambda, mu_pos};
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    const int r = mu[mu_pos];
    const int L = static_cast<int>(lambda.size());
    std::vector<int> beta(static_cast<size_t>(L));
    for (int i = 0; i < L; ++i) beta[static_cast<size_t>(i)] = lambda[static_cast<size_t>(i)] + (L - 1 - i);

    BigInt total = 0;
    for (int idx = 0; idx < L; ++idx) {
        int b = beta[static_cast<size_t>(idx)];
        if (b < r) continue;
        int target = b - r;
        bool occupied = false;
        int between = 0;
        for (int j = 0; j < L; ++j) {
            int x = beta[static_cast<size_t>(j)];
            if (x == target) occupied = true;
            if (x > target && x < b) ++between;
        }
        if (occupied) continue;
        std::vector<int> nb = beta;
        nb[static_cast<size_t>(idx)] = target;
        std::sort(nb.begin(), nb.end(), std::greater<int>());
        std::vector<int> nl;
        for (int i = 0; i < L; ++i) {
            int part = nb[static_cast<size_t>(i)] - (L - 1 - i);
            if (part > 0) nl.push_back(part);
        }
        BigInt sub = mn_rec(nl, mu, mu_pos + 1, memo);
        if (between % 2 == 1) {
            total -= sub;
        } else {
            total += sub;
        }
    }
    memo.emplace(std::move(key), total);
    return total;
}

}  // namespace

BigInt mn_character(const Partition& lambda, const Partition& mu) {
    if (lambda.weight() != mu.weight()) throw std::invalid_argument("character weight mismatch");
    std::map<MnKey, BigInt> memo;  // per-call cache keeps the function pure
    return mn_rec(lambda.parts(), mu.parts(), 0, memo);
}

}  // namespace wg
