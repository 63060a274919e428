#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "arcdyck/laurent.hpp"

namespace arcdyck {

// The m x n frame. Partitions living in it have parts <= m and at most n
// rows; tile contents range over [-m+1, n-1]. Weights have m+n vertices,
// vertex p sitting at x = p - m - 1/2, with m down arrows in total.
struct Shape {
    int m = 1;
    int n = 1;
    Shape() = default;
    Shape(int m_, int n_) : m(m_), n(n_) {
        if (m < 1 || n < 1) throw std::invalid_argument("shape components must be >= 1");
    }
    int points() const { return m + n; }
    Shape dilated() const { return Shape(m + 1, n + 1); }
    auto operator<=>(const Shape&) const = default;
    std::string str() const { return std::to_string(m) + "," + std::to_string(n); }
};

// Young-diagram tile in row r, column c (both 1-based); content r - c,
// height r + c - 1.
struct Tile {
    int r = 1;
    int c = 1;
    Tile() = default;
    Tile(int r_, int c_) : r(r_), c(c_) {
        if (r < 1 || c < 1) throw std::invalid_argument("tile indices must be >= 1");
    }
    int content() const { return r - c; }
    int height() const { return r + c - 1; }
    auto operator<=>(const Tile&) const = default;
    std::string str() const { return "[" + std::to_string(r) + "," + std::to_string(c) + "]"; }
};

enum class Arrow : std::uint8_t { Up, Down }; // Up = v, Down = ^

class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    static Partition parse(const std::string& text); // "5,4,2,2"; "" is empty
    std::string str() const;

    const std::vector<int>& parts() const { return parts_; }
    int rows() const { return static_cast<int>(parts_.size()); }
    int part(int r) const { return (r >= 1 && r <= rows()) ? parts_[r - 1] : 0; } // 1-based
    long size() const;
    bool empty() const { return parts_.empty(); }

    bool fits(const Shape& s) const { return (parts_.empty() || parts_[0] <= s.m) && rows() <= s.n; }
    bool contains_tile(const Tile& t) const { return t.c <= part(t.r); }
    bool contains(const Partition& inner) const; // inclusion of Young diagrams

    std::vector<Tile> tiles() const;
    std::vector<int> transpose_parts() const; // column lengths

    // Ordered by (size, lexicographic on parts); used as the canonical
    // total order everywhere deterministic output is required.
    std::strong_ordering operator<=>(const Partition& o) const;
    bool operator==(const Partition& o) const { return parts_ == o.parts_; }

private:
    std::vector<int> parts_; // weakly decreasing, no trailing zeros
};

// Dyck path identified by its content interval [first..last]; tile
// representatives are recomputed relative to a partition on demand.
struct DyckPath {
    int first = 0;
    int last = 0;
    DyckPath() = default;
    DyckPath(int f, int l) : first(f), last(l) {
        if (f > l) throw std::invalid_argument("bad content interval");
        if ((l - f) % 2 != 0) throw std::invalid_argument("Dyck path needs an odd number of tiles");
    }
    int size() const { return last - first + 1; }
    int breadth() const { return (size() + 1) / 2; }
    bool contains(int content) const { return first <= content && content <= last; }
    auto operator<=>(const DyckPath&) const = default;
    std::string str() const { return "[" + std::to_string(first) + ".." + std::to_string(last) + "]"; }
    static DyckPath parse(const std::string& text);
};

struct CupDiagram {
    std::vector<std::pair<int, int>> cups; // (p, q) with p < q, sorted by p
    std::vector<int> rays;                 // sorted positions
};

enum class PairClass { Distant, Adjacent, PCoversQ, QCoversP, Other };

enum class TileRole { Spot, Fork };

using DyckTiling = std::vector<DyckPath>; // sorted by (first, last); paths are distinct

// --- partitions and weights -------------------------------------------------

std::vector<Partition> enum_partitions(const Shape& s); // sorted by (size, lex); C(m+n, m) total
std::vector<Arrow> partition_to_weight(const Partition& p, const Shape& s);
Partition weight_to_partition(const std::vector<Arrow>& w, const Shape& s);
std::string weight_str(const std::vector<Arrow>& w); // over {v, ^}
Partition full_rectangle(const Shape& s);

CupDiagram cup_diagram(const std::vector<Arrow>& w);
CupDiagram cup_diagram(const Partition& p, const Shape& s);

// --- removable/addable Dyck paths -------------------------------------------

// The representative of P whose removal from (addition to) mu stays a
// partition: topmost (first free) tile of each content in the interval.
std::optional<Partition> try_remove_path(const Partition& mu, const DyckPath& P);
std::optional<Partition> try_add_path(const Partition& mu, const DyckPath& P, const Shape& s);
Partition remove_path(const Partition& mu, const DyckPath& P); // throws if not removable
Partition add_path(const Partition& mu, const DyckPath& P, const Shape& s);

std::vector<DyckPath> dyck_rem(const Partition& mu);                 // shape independent
std::vector<DyckPath> dyck_add(const Partition& mu, const Shape& s); // bounded by the frame
bool is_removable(const Partition& mu, const DyckPath& P);

// --- Dyck pairs and tilings ---------------------------------------------------

// The unique tiling of mu \ lambda by removable Dyck paths, if (lambda, mu)
// is a Dyck pair; absence is a value.
std::optional<DyckTiling> dyck_tiling(const Partition& lambda, const Partition& mu);
std::optional<int> pair_degree(const Partition& lambda, const Partition& mu);
bool is_dyck_pair(const Partition& lambda, const Partition& mu);

// Number of set partitions of the tiles of mu \ lambda into anchored Dyck
// path representatives whose content intervals are pairwise nested or
// distant. Throws unless (lambda, mu) is a Dyck pair.
long count_tilings(const Partition& lambda, const Partition& mu);

PairClass classify_pair(const DyckPath& P, const DyckPath& Q);
bool commute(const Partition& mu, const DyckPath& P, const DyckPath& Q);

// Tiles met by the cup of mu attached to P, in content order, each carrying
// its spot/fork role; |result| = 2 b(P) - 1 with spots at both ends.
std::vector<std::pair<Tile, TileRole>> sf_representative(const Partition& mu, const DyckPath& P);

DyckPath generated_path(const Partition& mu, const Tile& t); // <r,c>_mu

// Smallest removable Dyck path of mu containing cont(P) u cont(Q), for
// Q in DRem(mu - P) adjacent to P. The leftover contents form the interval
// of a third path, available via envelope_complement.
std::optional<DyckPath> envelope(const Partition& mu, const DyckPath& P, const DyckPath& Q);
DyckPath envelope_complement(const DyckPath& env, const DyckPath& P, const DyckPath& Q);

// Average content of the removed path of a degree-1 Dyck pair.
int sgn(const Partition& lambda, const Partition& mu);

LaurentPoly kl_polynomial(const Partition& lambda, const Partition& mu);

// --- dilation ----------------------------------------------------------------

// phi_k: inserts a v^ pair at content k, landing in the (m+1, n+1) frame.
Partition dilate_partition(const Partition& p, int k, const Shape& s);
DyckPath dilate_path(const DyckPath& P, int k);

} // namespace arcdyck
