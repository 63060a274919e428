// Command line front end: every computation and the verification suites.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <random>
#include <string>

#include "arcdyck/arc_algebra.hpp"
#include "arcdyck/combinatorics.hpp"
#include "arcdyck/hecke_algebra.hpp"
#include "arcdyck/isomorphism.hpp"
#include "arcdyck/representations.hpp"

#include <json.hpp>

using namespace arcdyck;

namespace {

Shape parse_shape(const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos) throw CLI::ValidationError("--shape expects m,n");
    return Shape(std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1)));
}

// triple literals: "cup;wt;cap" or "mid;row;col", each a comma list
std::array<Partition, 3> parse_triple(const std::string& text) {
    auto a = text.find(';');
    auto b = text.find(';', a + 1);
    if (a == std::string::npos || b == std::string::npos)
        throw CLI::ValidationError("element literal expects three ;-separated part lists");
    return {Partition::parse(text.substr(0, a)), Partition::parse(text.substr(a + 1, b - a - 1)),
            Partition::parse(text.substr(b + 1))};
}

int env_threads() {
    const char* v = std::getenv("ARCDYCK_THREADS");
    if (!v) return 1;
    int n = std::atoi(v);
    return n > 0 ? n : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations in the arc algebra K_{m,n} and the Dyck-path "
                 "presentation of the Hecke algebra H_{m,n}"};
    app.require_subcommand(1);

    std::string shapeText, lambdaText, muText, aText, bText, pathText;
    int kValue = 0;
    bool jsonOut = false, dotOut = false, genPairs = false;
    unsigned seed = 0;
    int samples = 0;

    auto addShape = [&](CLI::App* cmd) {
        cmd->add_option("--shape", shapeText, "frame m,n")->required();
    };

    auto* cEnum = app.add_subcommand("enum", "list the partitions in the frame");
    addShape(cEnum);
    cEnum->add_flag("--json", jsonOut);

    auto* cCup = app.add_subcommand("cup", "cup diagram of a partition");
    addShape(cCup);
    cCup->add_option("--lambda", lambdaText, "partition")->required();
    cCup->add_flag("--json", jsonOut);

    auto* cKl = app.add_subcommand("klpoly", "Kazhdan-Lusztig polynomial of a pair");
    addShape(cKl);
    cKl->add_option("--lambda", lambdaText)->required();
    cKl->add_option("--mu", muText)->required();

    auto* cTil = app.add_subcommand("tilings", "number of Dyck tilings of mu \\ lambda");
    addShape(cTil);
    cTil->add_option("--lambda", lambdaText)->required();
    cTil->add_option("--mu", muText)->required();

    auto* cMk = app.add_subcommand("mult-k", "multiply two arc basis diagrams");
    addShape(cMk);
    cMk->add_option("--a", aText, "first diagram cup;wt;cap")->required();
    cMk->add_option("--b", bText, "second diagram cup;wt;cap")->required();
    cMk->add_flag("--json", jsonOut);

    auto* cMh = app.add_subcommand("mult-h", "multiply two cellular basis elements");
    addShape(cMh);
    cMh->add_option("--a", aText, "first triple mid;row;col")->required();
    cMh->add_option("--b", bText, "second triple mid;row;col")->required();
    cMh->add_flag("--json", jsonOut);

    auto* cVr = app.add_subcommand("verify-relations", "check every defining relation instance");
    addShape(cVr);
    cVr->add_flag("--json", jsonOut);
    cVr->add_option("--seed", seed, "seed for the extra randomized word checks");
    cVr->add_option("--samples", samples, "number of randomized word checks")->default_val(0);

    auto* cVi = app.add_subcommand("verify-iso", "verify the isomorphism with the arc algebra");
    addShape(cVi);
    cVi->add_flag("--json", jsonOut);
    cVi->add_flag("--gen-pairs", genPairs, "transport generator pairs only");
    cVi->add_option("--seed", seed, "seed for the extra randomized surgery-order checks");
    cVi->add_option("--samples", samples)->default_val(0);

    auto* cDil = app.add_subcommand("dilate", "dilate a partition (and optionally a path)");
    addShape(cDil);
    cDil->add_option("--lambda", lambdaText)->required();
    cDil->add_option("--k", kValue, "insertion content")->required();
    cDil->add_option("--path", pathText, "Dyck path [a..b]");

    auto* cLat = app.add_subcommand("lattice", "submodule lattice of a standard module");
    addShape(cLat);
    cLat->add_option("--lambda", lambdaText)->required();
    cLat->add_flag("--dot", dotOut, "emit DOT");
    cLat->add_flag("--json", jsonOut);

    auto* cDec = app.add_subcommand("decomp", "graded decomposition of a standard module");
    addShape(cDec);
    cDec->add_option("--lambda", lambdaText)->required();
    cDec->add_flag("--json", jsonOut);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        Shape s = parse_shape(shapeText);

        if (cEnum->parsed()) {
            auto ps = enum_partitions(s);
            if (jsonOut) {
                nlohmann::json j = nlohmann::json::array();
                for (auto& p : ps) j.push_back(p.parts());
                std::cout << j.dump() << "\n";
            } else {
                for (auto& p : ps) std::cout << p.str() << "\n";
            }
        } else if (cCup->parsed()) {
            auto d = cup_diagram(Partition::parse(lambdaText), s);
            if (jsonOut) {
                nlohmann::json j;
                j["cups"] = d.cups;
                j["rays"] = d.rays;
                std::cout << j.dump() << "\n";
            } else {
                std::cout << "cups:";
                for (auto& [p, q] : d.cups) std::cout << " (" << p << "," << q << ")";
                std::cout << "\nrays:";
                for (int p : d.rays) std::cout << " " << p;
                std::cout << "\n";
            }
        } else if (cKl->parsed()) {
            auto la = Partition::parse(lambdaText);
            auto mu = Partition::parse(muText);
            if (!la.fits(s) || !mu.fits(s)) throw std::invalid_argument("partition out of frame");
            std::cout << kl_polynomial(la, mu).str() << "\n";
        } else if (cTil->parsed()) {
            std::cout << count_tilings(Partition::parse(lambdaText), Partition::parse(muText))
                      << "\n";
        } else if (cMk->parsed()) {
            auto ta = parse_triple(aText);
            auto tb = parse_triple(bText);
            KElement a(s, {ta[0], ta[1], ta[2]});
            KElement b(s, {tb[0], tb[1], tb[2]});
            auto r = k_multiply(a, b);
            std::cout << (jsonOut ? r.to_json() : r.str()) << "\n";
        } else if (cMh->parsed()) {
            auto ta = parse_triple(aText);
            auto tb = parse_triple(bText);
            HBasisTriple a{ta[0], ta[1], ta[2]};
            HBasisTriple b{tb[0], tb[1], tb[2]};
            if (!h_triple_valid(a) || !h_triple_valid(b))
                throw std::invalid_argument("not a basis triple");
            HeckeEngine eng;
            auto r = eng.mult(a, b);
            std::cout << (jsonOut ? r.to_json(s) : r.str()) << "\n";
        } else if (cVr->parsed()) {
            auto rep = verify_relations(s);
            long extra = 0;
            if (samples > 0) {
                // randomized word confluence checks on top of the exhaustive suite
                std::mt19937 rng(seed);
                HeckeEngine small(PeelPolicy::SmallestFirst), large(PeelPolicy::LargestFirst);
                std::vector<Generator> gens;
                for (auto& mu : enum_partitions(s))
                    for (auto& P : dyck_rem(mu)) {
                        gens.push_back(Generator::up(mu, P));
                        gens.push_back(Generator::down(mu, P));
                    }
                std::uniform_int_distribution<size_t> pick(0, gens.size() - 1);
                for (int i = 0; i < samples; ++i) {
                    std::vector<Generator> word{gens[pick(rng)]};
                    for (int len = 1; len < 5; ++len) {
                        std::vector<Generator> opt;
                        for (auto& g : gens)
                            if (g.row() == word.back().col()) opt.push_back(g);
                        if (opt.empty()) break;
                        std::uniform_int_distribution<size_t> p2(0, opt.size() - 1);
                        word.push_back(opt[p2(rng)]);
                    }
                    if (!(small.word_product(word) == large.word_product(word)))
                        rep.failures.push_back("confluence sample " + std::to_string(i));
                    extra++;
                }
            }
            if (jsonOut) {
                nlohmann::json j;
                j["checked"] = rep.checked;
                j["samples"] = extra;
                j["ok"] = rep.ok();
                j["failures"] = rep.failures;
                std::cout << j.dump() << "\n";
            } else {
                std::cout << "relation instances checked: " << rep.checked << "\n";
                if (extra) std::cout << "randomized word checks: " << extra << "\n";
                for (auto& f : rep.failures) std::cout << "FAIL " << f << "\n";
                std::cout << (rep.ok() ? "all relations hold" : "FAILURES FOUND") << "\n";
            }
            return rep.ok() ? 0 : 1;
        } else if (cVi->parsed()) {
            auto rep = verify_iso(s, genPairs, env_threads());
            if (samples > 0) {
                std::mt19937 rng(seed);
                auto basis = k_basis(s);
                std::uniform_int_distribution<size_t> pick(0, basis.size() - 1);
                int done = 0;
                while (done < samples) {
                    auto& a = basis[pick(rng)];
                    auto& b = basis[pick(rng)];
                    if (!(a.cap == b.cup)) continue;
                    auto mid = cup_diagram(a.cap, s);
                    std::vector<int> o1(mid.cups.size()), o2(mid.cups.size());
                    std::iota(o1.begin(), o1.end(), 0);
                    std::iota(o2.begin(), o2.end(), 0);
                    std::shuffle(o1.begin(), o1.end(), rng);
                    std::shuffle(o2.begin(), o2.end(), rng);
                    if (!(k_multiply_basis(a, b, s, o1) == k_multiply_basis(a, b, s, o2)))
                        rep.failures.push_back("surgery order sample " + std::to_string(done));
                    done++;
                }
            }
            std::cout << (jsonOut ? rep.to_json() : rep.str());
            return rep.ok() ? 0 : 1;
        } else if (cDil->parsed()) {
            auto la = Partition::parse(lambdaText);
            std::cout << dilate_partition(la, kValue, s).str() << "\n";
            if (!pathText.empty())
                std::cout << dilate_path(DyckPath::parse(pathText), kValue).str() << "\n";
        } else if (cLat->parsed()) {
            auto la = Partition::parse(lambdaText);
            if (dotOut) {
                std::cout << lattice_dot(la, s);
            } else if (jsonOut) {
                std::cout << dp_json(la, s) << "\n";
            } else {
                auto mod = dp_set(la, s);
                for (size_t k = 0; k < mod.layers.size(); ++k) {
                    std::cout << "grade " << k << ":";
                    for (auto& mu : mod.layers[k]) std::cout << " [" << mu.str() << "]";
                    std::cout << "\n";
                }
            }
        } else if (cDec->parsed()) {
            auto la = Partition::parse(lambdaText);
            auto dec = graded_decomposition(la, s);
            if (jsonOut) {
                nlohmann::json j = nlohmann::json::array();
                for (auto& [mu, poly] : dec)
                    j.push_back({{"mu", mu.parts()}, {"poly", poly.str()}});
                std::cout << j.dump() << "\n";
            } else {
                for (auto& [mu, poly] : dec)
                    std::cout << "[" << mu.str() << "]: " << poly.str() << "\n";
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
