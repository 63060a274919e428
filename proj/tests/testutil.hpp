#pragma once

#include <algorithm>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "arcdyck/combinatorics.hpp"

// Test-only oracles, independent of the library's tiling machinery.
namespace oracle {

using arcdyck::DyckPath;
using arcdyck::Partition;
using arcdyck::PairClass;
using arcdyck::Tile;

inline std::vector<Tile> skew_tiles(const Partition& lambda, const Partition& mu) {
    std::vector<Tile> out;
    for (int r = 1; r <= mu.rows(); ++r)
        for (int c = lambda.part(r) + 1; c <= mu.part(r); ++c) out.emplace_back(r, c);
    return out;
}

// All maximal extensions of a tile chain into anchored Dyck paths inside a
// tile set. A chain is grown left (towards smaller contents) and right; the
// Dyck condition (minimal height at both ends) is checked on completion.
inline void grow_paths(const std::set<Tile>& region, std::vector<Tile> chain, bool leftDone,
                       std::vector<std::vector<Tile>>& out) {
    const Tile& a = chain.front();
    const Tile& b = chain.back();
    auto tryExtend = [&](Tile t, bool front) {
        if (t.r < 1 || t.c < 1 || !region.count(t)) return;
        auto next = chain;
        if (front) next.insert(next.begin(), t);
        else next.push_back(t);
        grow_paths(region, next, front ? false : true, out);
    };
    // Grow the front (towards smaller contents) first, then only the back,
    // so every chain is produced exactly once.
    if (!leftDone) {
        if (a.r - 1 >= 1) tryExtend(Tile(a.r - 1, a.c), true);
        tryExtend(Tile(a.r, a.c + 1), true);
    }
    tryExtend(Tile(b.r + 1, b.c), false);
    if (b.c - 1 >= 1) tryExtend(Tile(b.r, b.c - 1), false);
    // Record every valid chain, not only maximal ones: sub-chains are blocks too.
    int hmin = chain.front().height();
    for (auto& t : chain) hmin = std::min(hmin, t.height());
    if (chain.size() % 2 == 1 && chain.front().height() == hmin && chain.back().height() == hmin)
        out.push_back(chain);
}

inline std::vector<std::vector<Tile>> dyck_blocks_through(const std::set<Tile>& region, Tile t) {
    std::vector<std::vector<Tile>> out;
    grow_paths(region, {t}, false, out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

inline DyckPath interval_of(const std::vector<Tile>& block) {
    return DyckPath(block.front().content(), block.back().content());
}

// Enumerates every decomposition of mu \ lambda into anchored Dyck paths with
// pairwise nested-or-distant content intervals; returns the interval
// multisets of all of them.
inline void enumerate_tilings(std::set<Tile> region, std::vector<DyckPath> acc,
                              std::vector<std::vector<DyckPath>>& results) {
    if (region.empty()) {
        std::sort(acc.begin(), acc.end());
        results.push_back(acc);
        return;
    }
    Tile t = *region.begin();
    for (auto& block : dyck_blocks_through(region, t)) {
        DyckPath I = interval_of(block);
        bool ok = true;
        for (auto& J : acc) {
            PairClass pc = classify_pair(I, J);
            if (pc != PairClass::Distant && pc != PairClass::PCoversQ && pc != PairClass::QCoversP)
                ok = false;
        }
        if (!ok) continue;
        std::set<Tile> rest = region;
        for (auto& x : block) rest.erase(x);
        auto acc2 = acc;
        acc2.push_back(I);
        enumerate_tilings(rest, acc2, results);
    }
}

inline std::vector<std::vector<DyckPath>> all_tilings(const Partition& lambda, const Partition& mu) {
    std::vector<std::vector<DyckPath>> results;
    if (!mu.contains(lambda)) return results;
    auto tiles = skew_tiles(lambda, mu);
    enumerate_tilings(std::set<Tile>(tiles.begin(), tiles.end()), {}, results);
    return results;
}

} // namespace oracle
