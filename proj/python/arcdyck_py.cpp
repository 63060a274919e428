// Python bindings for the main operations.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "arcdyck/arc_algebra.hpp"
#include "arcdyck/combinatorics.hpp"
#include "arcdyck/hecke_algebra.hpp"
#include "arcdyck/isomorphism.hpp"
#include "arcdyck/representations.hpp"

namespace py = pybind11;
using namespace arcdyck;

namespace {

Shape to_shape(std::pair<int, int> s) { return Shape(s.first, s.second); }
Partition to_partition(const std::vector<int>& parts) { return Partition(parts); }
DyckPath to_path(std::pair<int, int> p) { return DyckPath(p.first, p.second); }

Generator make_generator(const std::string& kind, const std::vector<int>& mu,
                         std::pair<int, int> path) {
    if (kind == "idem") return Generator::idem(to_partition(mu));
    if (kind == "up") return Generator::up(to_partition(mu), to_path(path));
    if (kind == "down") return Generator::down(to_partition(mu), to_path(path));
    throw std::invalid_argument("kind must be idem, up or down");
}

} // namespace

PYBIND11_MODULE(_arcdyck, m) {
    m.doc() = "exact arc-algebra and Dyck-presentation computations";

    m.def("enum_partitions", [](std::pair<int, int> s) {
        std::vector<std::vector<int>> out;
        for (auto& p : enum_partitions(to_shape(s))) out.push_back(p.parts());
        return out;
    });
    m.def("partition_to_weight", [](const std::vector<int>& p, std::pair<int, int> s) {
        return weight_str(partition_to_weight(to_partition(p), to_shape(s)));
    });
    m.def("weight_to_partition", [](const std::string& w, std::pair<int, int> s) {
        std::vector<Arrow> arrows;
        for (char c : w) {
            if (c == 'v') arrows.push_back(Arrow::Up);
            else if (c == '^') arrows.push_back(Arrow::Down);
            else throw std::invalid_argument("weight letters are v and ^");
        }
        return weight_to_partition(arrows, to_shape(s)).parts();
    });
    m.def("cup_diagram", [](const std::vector<int>& p, std::pair<int, int> s) {
        auto d = cup_diagram(to_partition(p), to_shape(s));
        return py::make_tuple(d.cups, d.rays);
    });
    m.def("dyck_rem", [](const std::vector<int>& mu) {
        std::vector<std::pair<int, int>> out;
        for (auto& p : dyck_rem(to_partition(mu))) out.emplace_back(p.first, p.last);
        return out;
    });
    m.def("dyck_add", [](const std::vector<int>& mu, std::pair<int, int> s) {
        std::vector<std::pair<int, int>> out;
        for (auto& p : dyck_add(to_partition(mu), to_shape(s))) out.emplace_back(p.first, p.last);
        return out;
    });
    m.def("dyck_tiling",
          [](const std::vector<int>& la, const std::vector<int>& mu) -> py::object {
              auto t = dyck_tiling(to_partition(la), to_partition(mu));
              if (!t) return py::none();
              std::vector<std::pair<int, int>> out;
              for (auto& p : *t) out.emplace_back(p.first, p.last);
              return py::cast(out);
          });
    m.def("pair_degree", [](const std::vector<int>& la, const std::vector<int>& mu) -> py::object {
        auto d = pair_degree(to_partition(la), to_partition(mu));
        if (!d) return py::none();
        return py::cast(*d);
    });
    m.def("count_tilings", [](const std::vector<int>& la, const std::vector<int>& mu) {
        return count_tilings(to_partition(la), to_partition(mu));
    });
    m.def("kl_polynomial", [](const std::vector<int>& la, const std::vector<int>& mu) {
        return kl_polynomial(to_partition(la), to_partition(mu)).str();
    });
    m.def("sgn", [](const std::vector<int>& la, const std::vector<int>& mu) {
        return sgn(to_partition(la), to_partition(mu));
    });
    m.def("dilate_partition", [](const std::vector<int>& p, int k, std::pair<int, int> s) {
        return dilate_partition(to_partition(p), k, to_shape(s)).parts();
    });

    m.def("k_basis", [](std::pair<int, int> s) {
        std::vector<py::tuple> out;
        for (auto& d : k_basis(to_shape(s)))
            out.push_back(py::make_tuple(d.cup.parts(), d.wt.parts(), d.cap.parts()));
        return out;
    });
    m.def("k_multiply", [](const std::string& aJson, const std::string& bJson) {
        return k_multiply(KElement::from_json(aJson), KElement::from_json(bJson)).to_json();
    });
    m.def("k_diagram_json",
          [](std::pair<int, int> s, const std::vector<int>& cup, const std::vector<int>& wt,
             const std::vector<int>& cap) {
              KElement e(to_shape(s),
                         {to_partition(cup), to_partition(wt), to_partition(cap)});
              return e.to_json();
          });

    m.def("h_basis", [](std::pair<int, int> s) {
        std::vector<py::tuple> out;
        for (auto& t : h_basis(to_shape(s)))
            out.push_back(py::make_tuple(t.mid.parts(), t.row.parts(), t.col.parts()));
        return out;
    });
    m.def("h_multiply", [](std::pair<int, int> s, const std::string& aJson,
                           const std::string& bJson) {
        HeckeEngine eng;
        return eng.h_multiply(HElement::from_json(aJson), HElement::from_json(bJson))
            .to_json(to_shape(s));
    });
    m.def("h_triple_json", [](std::pair<int, int> s, const std::vector<int>& mid,
                              const std::vector<int>& row, const std::vector<int>& col) {
        HElement e(HBasisTriple{to_partition(mid), to_partition(row), to_partition(col)});
        return e.to_json(to_shape(s));
    });
    m.def("gen_pair_product", [](std::pair<int, int> s, const std::string& k1,
                                 const std::vector<int>& mu1, std::pair<int, int> p1,
                                 const std::string& k2, const std::vector<int>& mu2,
                                 std::pair<int, int> p2) {
        HeckeEngine eng;
        return eng.gen_pair_product(make_generator(k1, mu1, p1), make_generator(k2, mu2, p2))
            .to_json(to_shape(s));
    });

    m.def("verify_relations", [](std::pair<int, int> s) {
        auto rep = verify_relations(to_shape(s));
        return py::make_tuple(rep.ok(), rep.checked, rep.failures);
    });
    m.def("verify_iso", [](std::pair<int, int> s, bool genPairsOnly, int threads) {
        return verify_iso(to_shape(s), genPairsOnly, threads).to_json();
    }, py::arg("shape"), py::arg("gen_pairs_only") = false, py::arg("threads") = 1);

    m.def("socle_weight", [](const std::vector<int>& la, std::pair<int, int> s) {
        return socle_weight(to_partition(la), to_shape(s)).parts();
    });
    m.def("dp_layers", [](const std::vector<int>& la, std::pair<int, int> s) {
        std::vector<std::vector<std::vector<int>>> out;
        for (auto& layer : dp_set(to_partition(la), to_shape(s)).layers) {
            std::vector<std::vector<int>> l;
            for (auto& mu : layer) l.push_back(mu.parts());
            out.push_back(l);
        }
        return out;
    });
    m.def("alperin_edges", [](const std::vector<int>& la, std::pair<int, int> s) {
        std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
        for (auto& [a, b] : alperin_edges(to_partition(la), to_shape(s)).edges)
            out.emplace_back(a.parts(), b.parts());
        return out;
    });
    m.def("graded_decomposition", [](const std::vector<int>& la, std::pair<int, int> s) {
        std::map<std::string, std::string> out;
        for (auto& [mu, poly] : graded_decomposition(to_partition(la), to_shape(s)))
            out[mu.str()] = poly.str();
        return out;
    });
    m.def("lattice_dot", [](const std::vector<int>& la, std::pair<int, int> s) {
        return lattice_dot(to_partition(la), to_shape(s));
    });
    m.def("quiver_dot", [](std::pair<int, int> s) { return quiver_dot(to_shape(s)); });
}
