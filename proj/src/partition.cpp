#include "ruijops/partition.hpp"

#include <algorithm>
#include <numeric>

#include "ruijops/errors.hpp"

namespace ruijops {

bool is_partition(const Partition& lam) {
    for (std::size_t i = 0; i < lam.size(); ++i) {
        if (lam[i] < 0) return false;
        if (i > 0 && lam[i] > lam[i - 1]) return false;
    }
    return true;
}

int partition_weight(const Partition& lam) {
    return std::accumulate(lam.begin(), lam.end(), 0);
}

int partition_length(const Partition& lam) {
    int len = 0;
    for (int p : lam)
        if (p > 0) ++len;
    return len;
}

Partition trim(Partition lam) {
    while (!lam.empty() && lam.back() == 0) lam.pop_back();
    return lam;
}

Partition pad(Partition lam, int n) {
    if (static_cast<int>(lam.size()) > n) lam = trim(std::move(lam));
    if (static_cast<int>(lam.size()) > n)
        throw invalid_parameters("partition longer than variable count");
    lam.resize(n, 0);
    return lam;
}

Partition sort_to_partition(std::vector<int> v) {
    std::sort(v.begin(), v.end(), std::greater<>());
    return trim(std::move(v));
}

bool dominates(const Partition& hi, const Partition& lo) {
    if (partition_weight(hi) != partition_weight(lo)) return false;
    int acc_hi = 0, acc_lo = 0;
    std::size_t len = std::max(hi.size(), lo.size());
    for (std::size_t i = 0; i < len; ++i) {
        acc_hi += i < hi.size() ? hi[i] : 0;
        acc_lo += i < lo.size() ? lo[i] : 0;
        if (acc_hi < acc_lo) return false;
    }
    return true;
}

namespace {

void rec_partitions(int remaining, int max_part, int max_len, Partition& cur,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(cur);
        return;
    }
    if (max_len == 0) return;
    for (int part = std::min(max_part, remaining); part >= 1; --part) {
        cur.push_back(part);
        rec_partitions(remaining - part, part, max_len - 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int k, int max_length) {
    std::vector<Partition> out;
    if (k < 0) return out;
    Partition cur;
    rec_partitions(k, k, max_length, cur, out);
    return out;
}

}  // namespace ruijops
