#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "arcdyck/arc_algebra.hpp"
#include "arcdyck/hecke_algebra.hpp"

namespace arcdyck {

// The degree-preserving map Psi: H -> K. On generators,
//   1_la            |-> (la | la | la)
//   D^{mu-P}_mu     |-> i^sgn (mu-P | mu-P | mu)
//   D^mu_{mu-P}     |-> i^sgn (mu | mu-P | mu-P)
// and on basis triples multiplicatively over the canonical word.
class Isomorphism {
public:
    explicit Isomorphism(Shape s, PeelPolicy policy = PeelPolicy::SmallestFirst)
        : shape_(s), engine_(policy) {}

    const Shape& shape() const { return shape_; }
    HeckeEngine& engine() { return engine_; }

    KElement psi_generator(const Generator& g) const;
    KElement psi_triple(const HBasisTriple& t);
    KElement psi_element(const HElement& e);

    // Inverse through the unitriangular transition matrix.
    HElement psi_inverse(const KElement& e);

private:
    Shape shape_;
    HeckeEngine engine_;
    std::map<HBasisTriple, KElement> cache_;
};

struct IsoReport {
    long relationChecks = 0;
    long transportChecks = 0;
    bool unitriangular = false;
    std::vector<GaussInt> diagonal;
    std::vector<std::string> failures;
    double seconds = 0.0;
    bool ok() const { return failures.empty() && unitriangular; }
    std::string str() const;
    std::string to_json() const;
};

// (1) every defining relation instance transports to a true identity in K,
// (2) the transition matrix is unitriangular with unit diagonal against the
//     middle-weight order, (3) Psi(a b) = Psi(a) Psi(b) for all basis pairs
// (or only generator pairs when genPairsOnly is set).
IsoReport verify_iso(const Shape& s, bool genPairsOnly = false, int threads = 1);

GaussInt transported_scalar_reference(const Generator& g, int k);

struct TransportedDilation {
    Generator source;
    Generator image;    // single generator the transported map lands on
    GaussInt scalar;    // coefficient in front of it
    GaussInt predicted; // dilate_h scalar from the spot/fork rule
};

// The oracle Psi^{-1} . dilate_k . Psi computed by solving against the
// transition matrix at the dilated shape; requires Psi valid at both shapes.
std::vector<TransportedDilation> transported_dilation(const Shape& s, int k);

} // namespace arcdyck
