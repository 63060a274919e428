#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "arcdyck/isomorphism.hpp"

using namespace arcdyck;

namespace {
Partition P(const std::string& s) { return Partition::parse(s); }
} // namespace

TEST_CASE("psi on generators") {
    Isomorphism iso(Shape(1, 1));
    auto e = iso.psi_generator(Generator::idem(P("")));
    REQUIRE(e.terms().size() == 1);
    CHECK(e.terms().begin()->first == k_idempotent(P("")));

    auto d = iso.psi_generator(Generator::down(P("1"), DyckPath(0, 0)));
    REQUIRE(d.terms().size() == 1);
    CHECK(d.terms().begin()->first == ArcBasisDiagram{P("1"), P(""), P("")});
    CHECK(d.terms().begin()->second == GaussInt(1)); // sgn 0

    // sgn -1 gives the scalar -i
    Isomorphism iso21(Shape(2, 1));
    auto d2 = iso21.psi_generator(Generator::down(P("2"), DyckPath(-1, -1)));
    REQUIRE(d2.terms().size() == 1);
    CHECK(d2.terms().begin()->second == GaussInt(0, -1));
}

TEST_CASE("psi on basis triples") {
    Isomorphism iso(Shape(1, 1));
    auto v = iso.psi_triple({P(""), P("1"), P("1")});
    REQUIRE(v.terms().size() == 1);
    CHECK(v.terms().begin()->first == ArcBasisDiagram{P("1"), P(""), P("1")});
    CHECK(v.terms().begin()->second == GaussInt(1));

    // degree preserved on every basis element of the 2x2 frame
    Isomorphism iso22(Shape(2, 2));
    for (auto& t : h_basis(Shape(2, 2))) {
        auto img = iso22.psi_triple(t);
        REQUIRE(!img.is_zero());
        for (auto& [diag, c] : img.terms()) CHECK(arc_degree(diag) == h_degree(t));
    }
}

TEST_CASE("psi intertwines the anti-involutions") {
    Isomorphism iso(Shape(2, 2));
    for (auto& t : h_basis(Shape(2, 2))) {
        auto lhs = iso.psi_triple(t.dual());
        auto rhs = k_flip(iso.psi_triple(t));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("verify_iso at (1,1) and (2,2)") {
    for (Shape s : {Shape(1, 1), Shape(2, 2)}) {
        auto rep = verify_iso(s);
        INFO(s.str());
        for (auto& f : rep.failures) { INFO(f); }
        CHECK(rep.ok());
        CHECK(rep.unitriangular);
        for (auto& d : rep.diagonal) CHECK(d.is_unit());
        CHECK(rep.relationChecks > 0);
        CHECK(rep.transportChecks > 0);
    }
}

TEST_CASE("psi inverse round trip") {
    Isomorphism iso(Shape(2, 2));
    for (auto& t : h_basis(Shape(2, 2))) {
        HElement e(t, GaussInt(mpz_class(2), mpz_class(-3)));
        auto back = iso.psi_inverse(iso.psi_element(e));
        CHECK(back == e);
    }
}

TEST_CASE("dilation is a homomorphism on the arc side") {
    Shape s(1, 1);
    auto basis = k_basis(s);
    REQUIRE(basis.size() == 5);
    for (int k = -1; k <= 1; ++k) {
        for (auto& a : basis)
            for (auto& b : basis) {
                KElement ea(s, a), eb(s, b);
                auto lhs = dilate_k(k_multiply(ea, eb), k);
                auto rhs = k_multiply(dilate_k(ea, k), dilate_k(eb, k));
                CHECK(lhs == rhs);
            }
    }
}

namespace {
// phi_k of a basis triple: the scaled product of the dilated canonical word.
HElement dilate_h_triple(HeckeEngine& big, HeckeEngine& small, const HBasisTriple& t, int k,
                         const Shape& s) {
    auto word = small.canonical_word(t);
    GaussInt scalar(1);
    std::vector<Generator> bigWord;
    for (auto& g : word) {
        scalar *= dilate_h_scalar(g, k);
        bigWord.push_back(dilate_h_generator(g, k, s));
    }
    return big.word_product(bigWord) * scalar;
}
} // namespace

TEST_CASE("dilation is a homomorphism on the Hecke side") {
    for (Shape s : {Shape(1, 1), Shape(2, 1)}) {
        HeckeEngine small, big;
        auto basis = h_basis(s);
        for (int k = -s.m; k <= s.n; ++k) {
            for (auto& a : basis)
                for (auto& b : basis) {
                    if (!(a.col == b.row)) continue;
                    auto ab = small.mult(a, b);
                    HElement lhs;
                    for (auto& [t, c] : ab.terms()) lhs += dilate_h_triple(big, small, t, k, s) * c;
                    auto rhs = big.h_multiply(dilate_h_triple(big, small, a, k, s),
                                              dilate_h_triple(big, small, b, k, s));
                    CHECK(lhs == rhs);
                }
        }
    }
}

TEST_CASE("transported dilation lands on single generators") {
    // Psi^-1 . dilate_k . Psi sends each generator to a unit multiple of its
    // relabelling; the unit is pinned by the sign change of the removed path,
    // i^(sgn - sgn after dilation). This differs from the spot/fork scalar of
    // dilate_h by design: the two dilations are different homomorphisms, and
    // dilate_h is validated separately through its homomorphism property.
    for (Shape s : {Shape(1, 1), Shape(2, 1)}) {
        for (int k = -s.m; k <= s.n; ++k) {
            auto rows = transported_dilation(s, k);
            CHECK(!rows.empty());
            for (auto& r : rows) {
                CHECK(r.scalar.is_unit());
                auto expect = dilate_h_generator(r.source, k, s);
                CHECK(r.image == expect);
                if (r.source.kind == Generator::Kind::Idem) {
                    CHECK(r.scalar == GaussInt(1));
                } else {
                    Partition la = remove_path(r.source.mu, r.source.path);
                    int sgnSmall = sgn(la, r.source.mu);
                    Partition laBig = remove_path(expect.mu, expect.path);
                    int sgnBig = sgn(laBig, expect.mu);
                    CHECK(r.scalar == GaussInt::i_pow(sgnSmall - sgnBig));
                    if (r.source.path.contains(k)) {
                        CHECK(r.scalar == GaussInt(1));
                        CHECK(!(r.predicted == GaussInt(1))); // spot/fork gives -i or i
                    } else {
                        CHECK(r.predicted == GaussInt(1));
                    }
                }
            }
        }
    }
}
