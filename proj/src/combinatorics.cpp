#include "arcdyck/combinatorics.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace arcdyck {

namespace {

bool has_tile(const Partition& p, int r, int c) {
    return r >= 1 && c >= 1 && c <= p.part(r);
}

// Rows of mu holding a tile of content c, ascending.
std::vector<int> rows_with_content(const Partition& mu, int c) {
    std::vector<int> rows;
    for (int r = std::max(1, c + 1); r <= mu.rows(); ++r)
        if (mu.part(r) >= r - c) rows.push_back(r);
    return rows;
}

// Checks that tiles (sorted by content) trace a Dyck path: steps go through
// [r+1, c] or [r, c-1], and the minimal height is attained at both ends.
bool is_dyck_trace(const std::vector<Tile>& tiles) {
    if (tiles.empty() || tiles.size() % 2 == 0) return false;
    int hmin = tiles.front().height();
    for (size_t i = 0; i + 1 < tiles.size(); ++i) {
        const Tile& a = tiles[i];
        const Tile& b = tiles[i + 1];
        bool step = (b.r == a.r + 1 && b.c == a.c) || (b.r == a.r && b.c == a.c - 1);
        if (!step) return false;
        hmin = std::min(hmin, b.height());
    }
    return tiles.front().height() == hmin && tiles.back().height() == hmin;
}

} // namespace

// --- Partition ---------------------------------------------------------------

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0) throw std::invalid_argument("negative part");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw std::invalid_argument("parts must be weakly decreasing");
    }
}

Partition Partition::parse(const std::string& text) {
    std::vector<int> parts;
    std::string tok;
    std::istringstream in(text);
    while (std::getline(in, tok, ',')) {
        if (tok.empty()) continue;
        parts.push_back(std::stoi(tok));
    }
    return Partition(parts);
}

std::string Partition::str() const {
    std::string s;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    return s;
}

long Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0L); }

bool Partition::contains(const Partition& inner) const {
    for (int r = 1; r <= inner.rows(); ++r)
        if (inner.part(r) > part(r)) return false;
    return true;
}

std::vector<Tile> Partition::tiles() const {
    std::vector<Tile> t;
    for (int r = 1; r <= rows(); ++r)
        for (int c = 1; c <= part(r); ++c) t.emplace_back(r, c);
    return t;
}

std::vector<int> Partition::transpose_parts() const {
    std::vector<int> cols;
    if (parts_.empty()) return cols;
    cols.resize(parts_[0], 0);
    for (int r = 1; r <= rows(); ++r)
        for (int c = 1; c <= part(r); ++c) cols[c - 1]++;
    return cols;
}

std::strong_ordering Partition::operator<=>(const Partition& o) const {
    if (auto c = size() <=> o.size(); c != 0) return c;
    return parts_ <=> o.parts_;
}

// --- DyckPath ----------------------------------------------------------------

DyckPath DyckPath::parse(const std::string& text) {
    // "[first..last]"
    auto l = text.find('[');
    auto d = text.find("..");
    auto r = text.find(']');
    if (l == std::string::npos || d == std::string::npos || r == std::string::npos)
        throw std::invalid_argument("bad Dyck path literal: " + text);
    int f = std::stoi(text.substr(l + 1, d - l - 1));
    int la = std::stoi(text.substr(d + 2, r - d - 2));
    return DyckPath(f, la);
}

// --- partitions and weights --------------------------------------------------

std::vector<Partition> enum_partitions(const Shape& s) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int maxPart, int rowsLeft) {
        out.push_back(Partition(cur));
        if (rowsLeft == 0) return;
        for (int p = std::min(maxPart, s.m); p >= 1; --p) {
            cur.push_back(p);
            rec(p, rowsLeft - 1);
            cur.pop_back();
        }
    };
    rec(s.m, s.n);
    std::sort(out.begin(), out.end());
    return out;
}

Partition full_rectangle(const Shape& s) {
    return Partition(std::vector<int>(s.n, s.m));
}

std::vector<Arrow> partition_to_weight(const Partition& p, const Shape& s) {
    if (!p.fits(s)) throw std::invalid_argument("partition does not fit the frame");
    std::vector<Arrow> w(s.points());
    for (int i = 0; i < s.m; ++i) w[i] = Arrow::Down;
    for (int i = s.m; i < s.points(); ++i) w[i] = Arrow::Up;
    // Adding the tile of content k swaps the labels at positions (k+m, k+m+1).
    for (int r = 1; r <= p.rows(); ++r)
        for (int c = 1; c <= p.part(r); ++c) {
            int k = r - c;
            int i = k + s.m - 1; // 0-based left position
            assert(w[i] == Arrow::Down && w[i + 1] == Arrow::Up);
            w[i] = Arrow::Up;
            w[i + 1] = Arrow::Down;
        }
    return w;
}

Partition weight_to_partition(const std::vector<Arrow>& w, const Shape& s) {
    if (static_cast<int>(w.size()) != s.points())
        throw std::invalid_argument("weight has wrong length");
    std::vector<int> down; // 1-based positions of ^
    for (int i = 0; i < s.points(); ++i)
        if (w[i] == Arrow::Down) down.push_back(i + 1);
    if (static_cast<int>(down.size()) != s.m)
        throw std::invalid_argument("weight must carry exactly m down arrows");
    // Ascending down-positions q_i satisfy q_i = i + t_{m+1-i} where t is the
    // transpose (column lengths, weakly decreasing, padded to m).
    std::vector<int> cols(s.m);
    for (int i = 1; i <= s.m; ++i) cols[s.m - i] = down[i - 1] - i;
    for (int j = 0; j < s.m; ++j) {
        if (cols[j] < 0 || cols[j] > s.n) throw std::invalid_argument("weight out of frame");
        if (j + 1 < s.m && cols[j] < cols[j + 1]) throw std::invalid_argument("weight not a partition");
    }
    // Transpose back.
    std::vector<int> parts(cols.empty() ? 0 : cols[0], 0);
    for (int len : cols)
        for (int r = 0; r < len; ++r) parts[r]++;
    return Partition(parts);
}

std::string weight_str(const std::vector<Arrow>& w) {
    std::string s;
    for (Arrow a : w) s += (a == Arrow::Up) ? 'v' : '^';
    return s;
}

CupDiagram cup_diagram(const std::vector<Arrow>& w) {
    CupDiagram d;
    std::vector<int> stack;
    for (int i = 0; i < static_cast<int>(w.size()); ++i) {
        if (w[i] == Arrow::Up) {
            stack.push_back(i + 1);
        } else if (!stack.empty()) {
            d.cups.emplace_back(stack.back(), i + 1);
            stack.pop_back();
        } else {
            d.rays.push_back(i + 1);
        }
    }
    for (int p : stack) d.rays.push_back(p);
    std::sort(d.cups.begin(), d.cups.end());
    std::sort(d.rays.begin(), d.rays.end());
    return d;
}

CupDiagram cup_diagram(const Partition& p, const Shape& s) {
    return cup_diagram(partition_to_weight(p, s));
}

// --- removable/addable paths -------------------------------------------------

std::optional<Partition> try_remove_path(const Partition& mu, const DyckPath& P) {
    std::vector<Tile> trace;
    std::map<int, int> removed_in_row;
    for (int c = P.first; c <= P.last; ++c) {
        auto rows = rows_with_content(mu, c);
        if (rows.empty()) return std::nullopt;
        int r = rows.back(); // topmost tile of this content
        trace.emplace_back(r, r - c);
        removed_in_row[r]++;
    }
    if (!is_dyck_trace(trace)) return std::nullopt;
    std::vector<int> parts(mu.parts());
    for (auto [r, k] : removed_in_row) {
        parts[r - 1] -= k;
        if (parts[r - 1] < 0) return std::nullopt;
    }
    // The removed tiles of each row must be a suffix of that row (no holes).
    for (const Tile& t : trace)
        if (t.c <= parts[t.r - 1]) return std::nullopt;
    for (size_t i = 0; i + 1 < parts.size(); ++i)
        if (parts[i] < parts[i + 1]) return std::nullopt;
    return Partition(parts);
}

Partition remove_path(const Partition& mu, const DyckPath& P) {
    auto r = try_remove_path(mu, P);
    if (!r) throw std::invalid_argument("path " + P.str() + " is not removable from " + mu.str());
    return *r;
}

bool is_removable(const Partition& mu, const DyckPath& P) {
    return try_remove_path(mu, P).has_value();
}

std::optional<Partition> try_add_path(const Partition& mu, const DyckPath& P, const Shape& s) {
    std::vector<int> parts(mu.parts());
    std::map<int, int> added_in_row;
    for (int c = P.first; c <= P.last; ++c) {
        auto rows = rows_with_content(mu, c);
        int r = rows.empty() ? std::max(1, c + 1) : rows.back() + 1;
        if (r - c < 1) return std::nullopt;
        added_in_row[r]++;
    }
    int maxRow = added_in_row.rbegin()->first;
    if (maxRow > static_cast<int>(parts.size())) parts.resize(maxRow, 0);
    for (auto [r, k] : added_in_row) parts[r - 1] += k;
    for (size_t i = 0; i + 1 < parts.size(); ++i)
        if (parts[i] < parts[i + 1]) return std::nullopt;
    Partition result(parts);
    if (!result.fits(s)) return std::nullopt;
    if (!result.contains(mu)) return std::nullopt;
    if (result.size() != mu.size() + P.size()) return std::nullopt;
    // Mutual inverse pins the tile set down exactly.
    auto back = try_remove_path(result, P);
    if (!back || !(*back == mu)) return std::nullopt;
    return result;
}

Partition add_path(const Partition& mu, const DyckPath& P, const Shape& s) {
    auto r = try_add_path(mu, P, s);
    if (!r) throw std::invalid_argument("path " + P.str() + " is not addable to " + mu.str());
    return *r;
}

std::vector<DyckPath> dyck_rem(const Partition& mu) {
    std::vector<DyckPath> out;
    if (mu.empty()) return out;
    int lo = 1 - mu.part(1);
    int hi = mu.rows() - 1;
    for (int a = lo; a <= hi; ++a)
        for (int b = a; b <= hi; b += 2)
            if (is_removable(mu, DyckPath(a, b))) out.emplace_back(a, b);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<DyckPath> dyck_add(const Partition& mu, const Shape& s) {
    std::vector<DyckPath> out;
    for (int a = -s.m + 1; a <= s.n - 1; ++a)
        for (int b = a; b <= s.n - 1; b += 2)
            if (try_add_path(mu, DyckPath(a, b), s)) out.emplace_back(a, b);
    std::sort(out.begin(), out.end());
    return out;
}

// --- Dyck pairs and tilings ----------------------------------------------------

PairClass classify_pair(const DyckPath& P, const DyckPath& Q) {
    if (Q.first - P.last >= 2 || P.first - Q.last >= 2) return PairClass::Distant;
    if (P.last + 1 == Q.first || Q.last + 1 == P.first) return PairClass::Adjacent;
    if (P.first < Q.first && Q.last < P.last) return PairClass::PCoversQ;
    if (Q.first < P.first && P.last < Q.last) return PairClass::QCoversP;
    return PairClass::Other;
}

std::optional<DyckTiling> dyck_tiling(const Partition& lambda, const Partition& mu) {
    if (!mu.contains(lambda)) return std::nullopt;
    // Content histogram of the skew region.
    std::map<int, int> count;
    for (int r = 1; r <= mu.rows(); ++r)
        for (int c = lambda.part(r) + 1; c <= mu.part(r); ++c) count[r - c]++;
    if (count.empty()) return DyckTiling{};
    // Level sets of the histogram give the unique laminar interval family.
    DyckTiling paths;
    int maxLevel = 0;
    for (auto& [c, k] : count) maxLevel = std::max(maxLevel, k);
    for (int h = 1; h <= maxLevel; ++h) {
        std::vector<int> level;
        for (auto& [c, k] : count)
            if (k >= h) level.push_back(c);
        for (size_t i = 0; i < level.size();) {
            size_t j = i;
            while (j + 1 < level.size() && level[j + 1] == level[j] + 1) ++j;
            if ((level[j] - level[i]) % 2 != 0) return std::nullopt;
            paths.emplace_back(level[i], level[j]);
            i = j + 1;
        }
    }
    // Tiling condition: pairwise nested or distant, each removable from mu.
    for (size_t i = 0; i < paths.size(); ++i)
        for (size_t j = i + 1; j < paths.size(); ++j) {
            PairClass pc = classify_pair(paths[i], paths[j]);
            if (pc != PairClass::Distant && pc != PairClass::PCoversQ && pc != PairClass::QCoversP)
                return std::nullopt;
        }
    long total = 0;
    for (auto& P : paths) {
        total += P.size();
        if (!is_removable(mu, P)) return std::nullopt;
    }
    if (total != mu.size() - lambda.size()) return std::nullopt;
    // Peel down to lambda as a final consistency check.
    Partition cur = mu;
    std::vector<DyckPath> pool = paths;
    while (!pool.empty()) {
        size_t pick = pool.size();
        for (size_t i = 0; i < pool.size(); ++i) {
            bool covered = false;
            for (size_t j = 0; j < pool.size(); ++j)
                if (i != j && classify_pair(pool[j], pool[i]) == PairClass::PCoversQ) covered = true;
            if (!covered && (pick == pool.size() || pool[i].first < pool[pick].first)) pick = i;
        }
        auto next = try_remove_path(cur, pool[pick]);
        if (!next) return std::nullopt;
        cur = *next;
        pool.erase(pool.begin() + pick);
    }
    if (!(cur == lambda)) return std::nullopt;
    std::sort(paths.begin(), paths.end());
    return paths;
}

std::optional<int> pair_degree(const Partition& lambda, const Partition& mu) {
    auto t = dyck_tiling(lambda, mu);
    if (!t) return std::nullopt;
    return static_cast<int>(t->size());
}

bool is_dyck_pair(const Partition& lambda, const Partition& mu) {
    return dyck_tiling(lambda, mu).has_value();
}

long count_tilings(const Partition& lambda, const Partition& mu) {
    auto tiling = dyck_tiling(lambda, mu);
    if (!tiling) throw std::invalid_argument("not a Dyck pair");
    if (tiling->empty()) return 1;

    // Region rows per content.
    std::map<int, std::vector<int>> regionRows;
    for (int r = 1; r <= mu.rows(); ++r)
        for (int c = lambda.part(r) + 1; c <= mu.part(r); ++c) regionRows[r - c].push_back(r);
    for (auto& [c, v] : regionRows) std::sort(v.begin(), v.end());

    int cmin = regionRows.begin()->first;
    int cmax = regionRows.rbegin()->first;

    struct Slot { DyckPath path; int row = 0; int startHeight = 0; bool active = false; };
    std::vector<Slot> slots;
    for (auto& P : *tiling) slots.push_back({P, 0, 0, false});

    long total = 0;
    // Sweep contents left to right; at each content assign region rows to the
    // paths whose interval contains it, respecting path step/height rules.
    std::function<void(int, size_t, std::vector<int>&)> assign =
        [&](int c, size_t idx, std::vector<int>& freeRows) {
            if (idx == slots.size()) {
                if (c == cmax) { total++; return; }
                auto it = regionRows.find(c + 1);
                std::vector<int> nextRows = (it != regionRows.end()) ? it->second : std::vector<int>{};
                assign(c + 1, 0, nextRows);
                return;
            }
            Slot& s = slots[idx];
            if (!s.path.contains(c)) { assign(c, idx + 1, freeRows); return; }
            for (size_t i = 0; i < freeRows.size(); ++i) {
                int r = freeRows[i];
                int h = 2 * r - c - 1;
                if (s.path.first == c) {
                    s.startHeight = h;
                } else {
                    if (r != s.row && r != s.row + 1) continue;
                    if (h < s.startHeight) continue;
                }
                if (s.path.last == c && h != s.startHeight) continue;
                int savedRow = s.row;
                bool savedActive = s.active;
                s.row = r; s.active = true;
                std::vector<int> rest = freeRows;
                rest.erase(rest.begin() + i);
                assign(c, idx + 1, rest);
                s.row = savedRow; s.active = savedActive;
            }
        };
    std::vector<int> firstRows = regionRows[cmin];
    assign(cmin, 0, firstRows);
    return total;
}

bool commute(const Partition& mu, const DyckPath& P, const DyckPath& Q) {
    auto muP = try_remove_path(mu, P);
    auto muQ = try_remove_path(mu, Q);
    if (!muP || !muQ) throw std::invalid_argument("commute requires P, Q in DRem(mu)");
    return is_removable(*muP, Q) && is_removable(*muQ, P);
}

std::vector<std::pair<Tile, TileRole>> sf_representative(const Partition& mu, const DyckPath& P) {
    if (!is_removable(mu, P))
        throw std::invalid_argument("sf_representative requires P in DRem(mu)");
    auto rows = rows_with_content(mu, P.first);
    assert(!rows.empty());
    Tile t(rows.back(), rows.back() - P.first);
    std::vector<std::pair<Tile, TileRole>> out;
    // The cup alternates between the upper arc of a tile (spot) and the lower
    // arc of its north-east neighbour (fork) until it exits the diagram.
    while (true) {
        out.emplace_back(t, TileRole::Spot);
        if (!has_tile(mu, t.r + 1, t.c)) break;
        Tile u(t.r + 1, t.c);
        out.emplace_back(u, TileRole::Fork);
        if (u.c - 1 < 1 || !has_tile(mu, u.r, u.c - 1))
            throw std::logic_error("cup trace escaped through the floor");
        t = Tile(u.r, u.c - 1);
    }
    if (out.back().first.content() != P.last || static_cast<int>(out.size()) != P.size())
        throw std::logic_error("cup trace does not match the content interval");
    return out;
}

DyckPath generated_path(const Partition& mu, const Tile& t) {
    if (!mu.contains_tile(t)) throw std::invalid_argument("tile not in partition");
    int l = 0;
    while (has_tile(mu, t.r - (l + 1), t.c + (l + 1)) && has_tile(mu, t.r - l, t.c + (l + 1))) ++l;
    int k = 0;
    while (has_tile(mu, t.r + (k + 1), t.c - (k + 1)) && has_tile(mu, t.r + (k + 1), t.c - k)) ++k;
    return DyckPath(t.content() - 2 * l, t.content() + 2 * k);
}

std::optional<DyckPath> envelope(const Partition& mu, const DyckPath& P, const DyckPath& Q) {
    auto muP = try_remove_path(mu, P);
    if (!muP) throw std::invalid_argument("envelope requires P in DRem(mu)");
    if (!is_removable(*muP, Q)) throw std::invalid_argument("envelope requires Q in DRem(mu - P)");
    if (classify_pair(P, Q) != PairClass::Adjacent)
        throw std::invalid_argument("envelope requires adjacent paths");
    int lo = std::min(P.first, Q.first);
    int hi = std::max(P.last, Q.last);
    std::optional<DyckPath> best;
    for (const DyckPath& R : dyck_rem(mu)) {
        if (R.first <= lo && hi <= R.last)
            if (!best || R.size() < best->size()) best = R;
    }
    return best;
}

DyckPath envelope_complement(const DyckPath& env, const DyckPath& P, const DyckPath& Q) {
    int lo = std::min(P.first, Q.first);
    int hi = std::max(P.last, Q.last);
    if (env.first < lo && env.last > hi)
        throw std::logic_error("envelope extends on both sides");
    if (env.first < lo) return DyckPath(env.first, lo - 1);
    if (env.last > hi) return DyckPath(hi + 1, env.last);
    throw std::logic_error("envelope equals the union");
}

int sgn(const Partition& lambda, const Partition& mu) {
    auto t = dyck_tiling(lambda, mu);
    if (!t || t->size() != 1)
        throw std::invalid_argument("sgn requires a Dyck pair of degree 1");
    return ((*t)[0].first + (*t)[0].last) / 2;
}

LaurentPoly kl_polynomial(const Partition& lambda, const Partition& mu) {
    auto d = pair_degree(lambda, mu);
    if (!d) return LaurentPoly();
    return LaurentPoly::q_pow(*d);
}

// --- dilation ------------------------------------------------------------------

Partition dilate_partition(const Partition& p, int k, const Shape& s) {
    if (k < -s.m || k > s.n) throw std::invalid_argument("dilation content out of range");
    auto w = partition_to_weight(p, s);
    // Insert the new v^ pair at content k, i.e. after position k+m.
    w.insert(w.begin() + (k + s.m), {Arrow::Up, Arrow::Down});
    return weight_to_partition(w, s.dilated());
}

DyckPath dilate_path(const DyckPath& P, int k) {
    if (P.contains(k)) return DyckPath(P.first - 1, P.last + 1);
    if (k < P.first) return DyckPath(P.first + 1, P.last + 1);
    return DyckPath(P.first - 1, P.last - 1);
}

} // namespace arcdyck
