#pragma once

#include <map>
#include <string>
#include <vector>

#include "arcdyck/hecke_algebra.hpp"
#include "arcdyck/laurent.hpp"

namespace arcdyck {

// Standard module data for a fixed lambda: basis u_mu indexed by
// DP(lambda) = { mu : (lambda, mu) is a Dyck pair }, graded by pair degree.
struct StandardModule {
    Partition lambda;
    std::vector<std::vector<Partition>> layers; // layers[k] = DP_k(lambda)
    long dimension() const {
        long d = 0;
        for (auto& l : layers) d += static_cast<long>(l.size());
        return d;
    }
};

struct LatticeGraph {
    Partition lambda;
    std::vector<std::pair<Partition, int>> vertices;    // (mu, grade)
    std::vector<std::pair<Partition, Partition>> edges; // mu -> nu, grade k -> k+1
};

StandardModule dp_set(const Partition& lambda, const Shape& s);

// The unique maximal-grade weight of DP(lambda), built by the two-step cup
// construction (match every down-up neighbour pair, then close the leftover
// block with concentric cups).
Partition socle_weight(const Partition& lambda, const Shape& s);

LatticeGraph alperin_edges(const Partition& lambda, const Shape& s);

// g . u_mu inside Delta(lambda): reduce in H and keep the cell layer.
std::map<Partition, GaussInt> module_action(const Partition& lambda, const Generator& g,
                                            const Partition& mu, const Shape& s,
                                            HeckeEngine& engine);

std::map<Partition, LaurentPoly> graded_decomposition(const Partition& lambda, const Shape& s);

std::string lattice_dot(const Partition& lambda, const Shape& s);
std::string dp_json(const Partition& lambda, const Shape& s);

} // namespace arcdyck
