#include "arcdyck/representations.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace arcdyck {

StandardModule dp_set(const Partition& lambda, const Shape& s) {
    StandardModule mod;
    mod.lambda = lambda;
    for (auto& mu : enum_partitions(s)) {
        auto d = pair_degree(lambda, mu);
        if (!d) continue;
        if (static_cast<int>(mod.layers.size()) <= *d) mod.layers.resize(*d + 1);
        mod.layers[*d].push_back(mu);
    }
    for (auto& l : mod.layers) std::sort(l.begin(), l.end());
    return mod;
}

Partition socle_weight(const Partition& lambda, const Shape& s) {
    auto w = partition_to_weight(lambda, s);
    // step 1: repeatedly join neighbouring down-up pairs and swap them
    std::vector<int> stack;
    std::vector<std::pair<int, int>> cups;
    for (int i = 0; i < static_cast<int>(w.size()); ++i) {
        if (w[i] == Arrow::Down) {
            stack.push_back(i);
        } else if (!stack.empty()) {
            cups.emplace_back(stack.back(), i);
            stack.pop_back();
        }
    }
    for (auto& [p, q] : cups) {
        w[p] = Arrow::Up;
        w[q] = Arrow::Down;
    }
    // step 2: the leftover block reads up...down and is already oriented by
    // the concentric anticlockwise cups, so the labels stay put
    Partition mu = weight_to_partition(w, s);

    // sanity: the result is the unique top-grade element of DP(lambda)
    auto mod = dp_set(lambda, s);
    if (mod.layers.empty() || mod.layers.back().size() != 1 || !(mod.layers.back()[0] == mu))
        throw std::logic_error("socle construction disagrees with the top grade");
    return mu;
}

LatticeGraph alperin_edges(const Partition& lambda, const Shape& s) {
    LatticeGraph g;
    g.lambda = lambda;
    auto mod = dp_set(lambda, s);
    for (int k = 0; k < static_cast<int>(mod.layers.size()); ++k)
        for (auto& mu : mod.layers[k]) g.vertices.emplace_back(mu, k);
    for (int k = 0; k + 1 < static_cast<int>(mod.layers.size()); ++k)
        for (auto& mu : mod.layers[k])
            for (auto& nu : mod.layers[k + 1]) {
                bool add = mu.contains(nu) ? pair_degree(nu, mu) == 1
                                           : (nu.contains(mu) && pair_degree(mu, nu) == 1);
                if (add) g.edges.emplace_back(mu, nu);
            }
    return g;
}

std::map<Partition, GaussInt> module_action(const Partition& lambda, const Generator& g,
                                            const Partition& mu, const Shape& s,
                                            HeckeEngine& engine) {
    (void)s;
    if (!is_dyck_pair(lambda, mu)) throw std::invalid_argument("mu is not in DP(lambda)");
    HBasisTriple u{lambda, mu, lambda};
    HElement moved = engine.mult_gen_triple(g, u);
    std::map<Partition, GaussInt> out;
    for (auto& [t, c] : moved.terms()) {
        if (!(t.mid == lambda)) continue; // cell quotient
        if (!(t.col == lambda)) throw std::logic_error("action left the cell column");
        out[t.row] = c;
    }
    return out;
}

std::map<Partition, LaurentPoly> graded_decomposition(const Partition& lambda, const Shape& s) {
    std::map<Partition, LaurentPoly> out;
    for (auto& mu : enum_partitions(s)) {
        auto p = kl_polynomial(lambda, mu);
        if (!p.is_zero()) out[mu] = p;
    }
    return out;
}

std::string lattice_dot(const Partition& lambda, const Shape& s) {
    auto g = alperin_edges(lambda, s);
    auto name = [](const Partition& p) {
        std::string t = p.empty() ? "empty" : p.str();
        for (auto& ch : t)
            if (ch == ',') ch = '_';
        return "v_" + t;
    };
    std::ostringstream os;
    os << "digraph lattice {\n  rankdir=TB;\n";
    int maxGrade = 0;
    for (auto& [mu, k] : g.vertices) maxGrade = std::max(maxGrade, k);
    for (int k = 0; k <= maxGrade; ++k) {
        os << "  { rank=same;";
        for (auto& [mu, grade] : g.vertices)
            if (grade == k) os << " " << name(mu) << ";";
        os << " }\n";
    }
    for (auto& [mu, k] : g.vertices)
        os << "  " << name(mu) << " [label=\"" << (mu.empty() ? "0" : mu.str()) << "\"];\n";
    for (auto& [mu, nu] : g.edges) os << "  " << name(mu) << " -> " << name(nu) << ";\n";
    os << "}\n";
    return os.str();
}

std::string dp_json(const Partition& lambda, const Shape& s) {
    auto mod = dp_set(lambda, s);
    nlohmann::json j;
    j["lambda"] = lambda.parts();
    j["shape"] = {s.m, s.n};
    j["layers"] = nlohmann::json::array();
    for (auto& layer : mod.layers) {
        nlohmann::json l = nlohmann::json::array();
        for (auto& mu : layer) l.push_back(mu.parts());
        j["layers"].push_back(l);
    }
    return j.dump();
}

} // namespace arcdyck
