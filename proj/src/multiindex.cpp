#include "ruijops/multiindex.hpp"

#include <numeric>

namespace ruijops {

int mi_total(const MultiIndex& mu) { return std::accumulate(mu.begin(), mu.end(), 0); }

std::vector<int> mi_support(const MultiIndex& mu) {
    std::vector<int> s;
    for (int i = 0; i < static_cast<int>(mu.size()); ++i)
        if (mu[i] != 0) s.push_back(i);
    return s;
}

MultiIndex mi_sum(const MultiIndex& a, const MultiIndex& b) {
    MultiIndex c = a;
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += b[i];
    return c;
}

MultiIndex mi_from_subset(int n, const std::vector<int>& subset) {
    MultiIndex m(n, 0);
    for (int i : subset) m[i] = 1;
    return m;
}

namespace {

void rec_multiindices(int pos, int remaining, MultiIndex& cur, std::vector<MultiIndex>& out) {
    int n = static_cast<int>(cur.size());
    if (pos == n - 1) {
        cur[pos] = remaining;
        out.push_back(cur);
        return;
    }
    for (int v = remaining; v >= 0; --v) {
        cur[pos] = v;
        rec_multiindices(pos + 1, remaining - v, cur, out);
    }
    cur[pos] = 0;
}

void rec_subsets(int n, int r, int start, std::vector<int>& cur,
                 std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == r) {
        out.push_back(cur);
        return;
    }
    for (int i = start; i <= n - (r - static_cast<int>(cur.size())); ++i) {
        cur.push_back(i);
        rec_subsets(n, r, i + 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<MultiIndex> enumerate_multiindices(int n, int total) {
    std::vector<MultiIndex> out;
    if (n <= 0) return out;
    MultiIndex cur(n, 0);
    rec_multiindices(0, total, cur, out);
    return out;
}

std::vector<std::vector<int>> enumerate_subsets(int n, int r) {
    std::vector<std::vector<int>> out;
    if (r < 0 || r > n) return out;
    std::vector<int> cur;
    rec_subsets(n, r, 0, cur, out);
    return out;
}

std::vector<std::vector<int>> enumerate_all_subsets(int n) {
    std::vector<std::vector<int>> out;
    for (int r = 0; r <= n; ++r) {
        auto part = enumerate_subsets(n, r);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

std::vector<std::vector<int>> enumerate_compositions(int l, int d) {
    std::vector<std::vector<int>> out;
    if (l <= 0) return out;
    if (d == 0) {
        for (int parts = 1; parts <= l; ++parts) {
            auto sub = enumerate_compositions(l, parts);
            out.insert(out.end(), sub.begin(), sub.end());
        }
        return out;
    }
    if (d == 1) {
        out.push_back({l});
        return out;
    }
    for (int first = 1; first <= l - d + 1; ++first) {
        for (auto tail : enumerate_compositions(l - first, d - 1)) {
            tail.insert(tail.begin(), first);
            out.push_back(std::move(tail));
        }
    }
    return out;
}

}  // namespace ruijops
