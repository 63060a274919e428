#pragma once

#include <map>
#include <memory>
#include <shared_mutex>
#include <string>
#include <vector>

#include "arcdyck/combinatorics.hpp"
#include "arcdyck/gaussint.hpp"

namespace arcdyck {

// Degree 0/1 generators: the idempotent 1_mu, the up letter D^{mu-P}_mu and
// its dual down letter D^mu_{mu-P}, for P in DRem(mu).
struct Generator {
    enum class Kind { Idem, Up, Down };
    Kind kind = Kind::Idem;
    Partition mu;
    DyckPath path{0, 0}; // unused for Idem

    static Generator idem(Partition la) { return {Kind::Idem, std::move(la), DyckPath(0, 0)}; }
    static Generator up(Partition mu, DyckPath P) { return {Kind::Up, std::move(mu), P}; }
    static Generator down(Partition mu, DyckPath P) { return {Kind::Down, std::move(mu), P}; }

    Partition row() const; // 1_row g 1_col = g
    Partition col() const;
    Generator dual() const;
    int degree() const { return kind == Kind::Idem ? 0 : 1; }
    std::string str() const;

    auto operator<=>(const Generator&) const = default;
};

// Cellular basis triple (mid; row, col): descending word row -> mid followed
// by ascending word mid -> col; requires (mid,row) and (mid,col) Dyck pairs.
struct HBasisTriple {
    Partition mid;
    Partition row;
    Partition col;
    auto operator<=>(const HBasisTriple& o) const {
        // canonical term order: (mid, row, col)
        if (auto c = mid <=> o.mid; c != 0) return c;
        if (auto c = row <=> o.row; c != 0) return c;
        return col <=> o.col;
    }
    bool operator==(const HBasisTriple&) const = default;
    HBasisTriple dual() const { return {mid, col, row}; }
    std::string str() const {
        return "(" + mid.str() + "; " + row.str() + ", " + col.str() + ")";
    }
};

bool h_triple_valid(const HBasisTriple& t);
int h_degree(const HBasisTriple& t);

class HElement {
public:
    using Terms = std::map<HBasisTriple, GaussInt>;

    HElement() = default;
    HElement(const HBasisTriple& t, GaussInt c = GaussInt(1)) { add(t, c); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(const HBasisTriple& t, const GaussInt& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(t);
        if (it == terms_.end()) terms_.emplace(t, c);
        else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    HElement& operator+=(const HElement& o) {
        for (auto& [t, c] : o.terms_) add(t, c);
        return *this;
    }
    HElement operator+(const HElement& o) const { HElement r = *this; r += o; return r; }
    HElement operator*(const GaussInt& c) const {
        HElement r;
        if (c.is_zero()) return r;
        for (auto& [t, x] : terms_) r.add(t, x * c);
        return r;
    }
    HElement operator-() const { return *this * GaussInt(-1); }
    bool operator==(const HElement& o) const { return terms_ == o.terms_; }

    HElement dual() const {
        HElement r;
        for (auto& [t, c] : terms_) r.add(t.dual(), c);
        return r;
    }

    std::string str() const;
    std::string to_json(const Shape& s) const;
    static HElement from_json(const std::string& text);

private:
    Terms terms_;
};

std::vector<HBasisTriple> h_basis(const Shape& s);

// Peel policy for canonical words and reduction frontiers: among the tiling
// paths not covered by another remaining path, take the smallest or largest
// first(P). Both must produce the same products (confluence).
enum class PeelPolicy { SmallestFirst, LargestFirst };

// The reduction engine; memoizes triple x generator products per instance.
class HeckeEngine {
public:
    explicit HeckeEngine(PeelPolicy policy = PeelPolicy::SmallestFirst) : policy_(policy) {}

    // Canonical peel order of the tiling of (lambda, mu).
    std::vector<DyckPath> peel_sequence(const Partition& lambda, const Partition& mu) const;
    std::vector<Generator> canonical_word(const HBasisTriple& t) const;

    // Rewrites of two-letter words of generators into basis elements.
    HElement gen_pair_product(const Generator& a, const Generator& b);

    HElement mult_triple_gen(const HBasisTriple& t, const Generator& g);
    HElement mult_gen_triple(const Generator& g, const HBasisTriple& t);
    HElement mult(const HBasisTriple& a, const HBasisTriple& b);
    HElement h_multiply(const HElement& a, const HElement& b);
    HElement word_product(const std::vector<Generator>& word);

private:
    HElement mult_elem_gen(const HElement& e, const Generator& g);
    HElement peak_rewrite(const Partition& mu, const DyckPath& up, const DyckPath& down);
    HElement asc_rewrite(const Partition& top, const DyckPath& first, const DyckPath& second);
    HElement desc_rewrite(const Partition& top, const DyckPath& first, const DyckPath& second);

    PeelPolicy policy_;
    std::map<std::pair<HBasisTriple, Generator>, HElement> memo_;
    std::shared_mutex memoMutex_;
};

struct RelationReport {
    long checked = 0;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

// Evaluates every instance of the defining relations (idempotent, self-dual,
// commuting, non-commuting, adjacent) and their duals over the frame.
RelationReport verify_relations(const Shape& s, PeelPolicy policy = PeelPolicy::SmallestFirst);

// phi_k on generators; the scalar is 1, -i or i according to whether k misses
// cont(P), labels a spot tile, or labels a fork tile of P_sf.
GaussInt dilate_h_scalar(const Generator& g, int k);
Generator dilate_h_generator(const Generator& g, int k, const Shape& s);

std::string quiver_dot(const Shape& s);

} // namespace arcdyck
