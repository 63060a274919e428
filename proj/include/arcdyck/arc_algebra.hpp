#pragma once

#include <map>
#include <string>
#include <vector>

#include "arcdyck/combinatorics.hpp"
#include "arcdyck/gaussint.hpp"

namespace arcdyck {

// Basis diagram cup(lambda) weight(mu) cap(nu): (mu, lambda) and (mu, nu)
// must be Dyck pairs (the weight is the smallest of the three).
struct ArcBasisDiagram {
    Partition cup;
    Partition wt;
    Partition cap;
    auto operator<=>(const ArcBasisDiagram& o) const {
        // canonical term order: (wt, cup, cap)
        if (auto c = wt <=> o.wt; c != 0) return c;
        if (auto c = cup <=> o.cup; c != 0) return c;
        return cap <=> o.cap;
    }
    bool operator==(const ArcBasisDiagram&) const = default;
    std::string str() const {
        return "(" + cup.str() + " | " + wt.str() + " | " + cap.str() + ")";
    }
};

bool arc_diagram_valid(const ArcBasisDiagram& d, const Shape& s);
int arc_degree(const ArcBasisDiagram& d);

// Finitely supported Gaussian-integer combination of basis diagrams.
class KElement {
public:
    using Terms = std::map<ArcBasisDiagram, GaussInt>;

    KElement() = default;
    explicit KElement(Shape s) : shape_(s) {}
    KElement(Shape s, const ArcBasisDiagram& d, GaussInt c = GaussInt(1)) : shape_(s) {
        add(d, c);
    }

    const Shape& shape() const { return shape_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(const ArcBasisDiagram& d, const GaussInt& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(d);
        if (it == terms_.end()) {
            terms_.emplace(d, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    KElement& operator+=(const KElement& o);
    KElement operator+(const KElement& o) const { KElement r = *this; r += o; return r; }
    KElement operator*(const GaussInt& c) const;
    bool operator==(const KElement& o) const { return shape_ == o.shape_ && terms_ == o.terms_; }

    std::string str() const;
    std::string to_json() const;
    static KElement from_json(const std::string& text);

private:
    Shape shape_;
    Terms terms_;
};

std::vector<ArcBasisDiagram> k_basis(const Shape& s);
ArcBasisDiagram k_idempotent(const Partition& la);

// Surgery product of two basis diagrams: zero unless cap(a) = cup(b);
// otherwise one surgery per cup of the shared middle shape, in the given
// order (empty = canonical left-to-right by leftmost endpoint). All
// coefficients are non-negative integers.
std::vector<std::pair<ArcBasisDiagram, long>>
k_multiply_basis(const ArcBasisDiagram& a, const ArcBasisDiagram& b, const Shape& s,
                 const std::vector<int>& surgery_order = {});

KElement k_multiply(const KElement& a, const KElement& b);
KElement k_flip(const KElement& a); // swaps cup and cap shapes; anti-involution

// phi_k on arc diagrams: plain relabelling of all three partitions.
KElement dilate_k(const KElement& a, int k);

// Counts the annihilating merge rules fired since the last reset (thread
// local); used to check that certain products never reach them.
void surgery_stats_reset();
long surgery_forbidden_count();
long surgery_kept_strand_merges();

} // namespace arcdyck
