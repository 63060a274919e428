#include "arcdyck/isomorphism.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

namespace arcdyck {

namespace {

GaussInt unit_inverse(const GaussInt& u) {
    if (!u.is_unit()) throw std::logic_error("expected a unit, got " + u.str());
    return u.conj(); // units of Z[i] have norm 1
}

KElement k_word(const Isomorphism& iso, const std::vector<Generator>& word) {
    KElement acc = iso.psi_generator(word.at(0));
    for (size_t i = 1; i < word.size(); ++i)
        acc = k_multiply(acc, iso.psi_generator(word[i]));
    return acc;
}

} // namespace

KElement Isomorphism::psi_generator(const Generator& g) const {
    switch (g.kind) {
        case Generator::Kind::Idem:
            return KElement(shape_, k_idempotent(g.mu));
        case Generator::Kind::Up: {
            Partition la = remove_path(g.mu, g.path);
            return KElement(shape_, {la, la, g.mu}, GaussInt::i_pow(sgn(la, g.mu)));
        }
        case Generator::Kind::Down: {
            Partition la = remove_path(g.mu, g.path);
            return KElement(shape_, {g.mu, la, la}, GaussInt::i_pow(sgn(la, g.mu)));
        }
    }
    throw std::logic_error("bad generator");
}

KElement Isomorphism::psi_triple(const HBasisTriple& t) {
    auto it = cache_.find(t);
    if (it != cache_.end()) return it->second;
    KElement v = k_word(*this, engine_.canonical_word(t));
    cache_.emplace(t, v);
    return v;
}

KElement Isomorphism::psi_element(const HElement& e) {
    KElement out(shape_);
    for (auto& [t, c] : e.terms()) out += psi_triple(t) * c;
    return out;
}

HElement Isomorphism::psi_inverse(const KElement& e) {
    HElement out;
    KElement rest = e;
    int guard = 0;
    while (!rest.is_zero()) {
        if (++guard > 100000) throw std::logic_error("psi_inverse failed to terminate");
        // strip the maximal term in the middle-weight order
        auto top = rest.terms().begin();
        for (auto it = rest.terms().begin(); it != rest.terms().end(); ++it)
            if (top->first < it->first) top = it;
        ArcBasisDiagram d = top->first;
        GaussInt c = top->second;
        HBasisTriple t{d.wt, d.cup, d.cap};
        if (!h_triple_valid(t)) throw std::logic_error("inverse hit an invalid triple");
        KElement img = psi_triple(t);
        auto diag = img.terms().find(d);
        if (diag == img.terms().end()) throw std::logic_error("missing diagonal entry");
        GaussInt coeff = c * unit_inverse(diag->second);
        out.add(t, coeff);
        rest += img * (-coeff);
    }
    return out;
}

std::string IsoReport::str() const {
    std::ostringstream os;
    os << "relation checks: " << relationChecks << "\n";
    os << "transport checks: " << transportChecks << "\n";
    os << "unitriangular: " << (unitriangular ? "yes" : "no") << "\n";
    os << "diagonal: ";
    for (auto& d : diagonal) os << d.str() << " ";
    os << "\n";
    if (failures.empty()) os << "all identities hold\n";
    for (auto& f : failures) os << "FAIL " << f << "\n";
    os << "elapsed: " << seconds << "s\n";
    return os.str();
}

std::string IsoReport::to_json() const {
    nlohmann::json j;
    j["relation_checks"] = relationChecks;
    j["transport_checks"] = transportChecks;
    j["unitriangular"] = unitriangular;
    j["ok"] = ok();
    j["seconds"] = seconds;
    j["failures"] = failures;
    std::vector<std::string> diag;
    for (auto& d : diagonal) diag.push_back(d.str());
    j["diagonal"] = diag;
    return j.dump();
}

IsoReport verify_iso(const Shape& s, bool genPairsOnly, int threads) {
    auto start = std::chrono::steady_clock::now();
    IsoReport rep;
    Isomorphism iso(s);
    auto ps = enum_partitions(s);

    auto checkK = [&](const KElement& lhs, const KElement& rhs, const std::string& what) {
        rep.relationChecks++;
        if (!(lhs == rhs))
            rep.failures.push_back(what + ": " + lhs.str() + " != " + rhs.str());
    };

    // (1) the defining relations transport to identities between arc diagrams
    for (auto& mu : ps) {
        auto rem = dyck_rem(mu);
        for (auto& P : rem) {
            Partition la = remove_path(mu, P);
            // idempotent absorption
            checkK(k_word(iso, {Generator::idem(la), Generator::up(mu, P), Generator::idem(mu)}),
                   iso.psi_generator(Generator::up(mu, P)), "idem at " + mu.str());
            // self-dual
            KElement lhs = k_word(iso, {Generator::up(mu, P), Generator::down(mu, P)});
            KElement rhs(s);
            int base = (P.breadth() - 1) % 2 == 0 ? 1 : -1;
            for (auto& R : dyck_rem(la)) {
                PairClass pc = classify_pair(R, P);
                int c = 0;
                if (pc == PairClass::PCoversQ) c = 2 * base * (R.breadth() % 2 == 0 ? 1 : -1);
                else if (pc == PairClass::Adjacent) c = base * (R.breadth() % 2 == 0 ? 1 : -1);
                if (c == 0) continue;
                rhs += k_word(iso, {Generator::down(la, R), Generator::up(la, R)}) * GaussInt(c);
            }
            checkK(lhs, rhs, "selfdual at " + mu.str() + " " + P.str());
        }
        for (auto& P : rem)
            for (auto& Q : rem) {
                if (P == Q) continue;
                if (commute(mu, P, Q)) {
                    Partition muP = remove_path(mu, P);
                    Partition muQ = remove_path(mu, Q);
                    checkK(k_word(iso, {Generator::up(muP, Q), Generator::up(mu, P)}),
                           k_word(iso, {Generator::up(muQ, P), Generator::up(mu, Q)}),
                           "commuting asc at " + mu.str());
                    checkK(k_word(iso, {Generator::up(mu, P), Generator::down(mu, Q)}),
                           k_word(iso, {Generator::down(muP, Q), Generator::up(muQ, P)}),
                           "commuting peak at " + mu.str());
                } else if (classify_pair(Q, P) == PairClass::PCoversQ) {
                    Partition muP = remove_path(mu, P);
                    DyckPath Q1(Q.first, P.first - 1);
                    DyckPath Q2(P.last + 1, Q.last);
                    Partition mid1 = remove_path(muP, Q1);
                    Partition mid2 = remove_path(muP, Q2);
                    KElement lhs = k_word(iso, {Generator::up(mu, Q), Generator::down(mu, P)});
                    checkK(lhs, k_word(iso, {Generator::up(mid1, Q2), Generator::up(muP, Q1)}),
                           "noncommuting left at " + mu.str());
                    checkK(lhs, k_word(iso, {Generator::up(mid2, Q1), Generator::up(muP, Q2)}),
                           "noncommuting right at " + mu.str());
                }
            }
        for (auto& P : rem) {
            Partition muP = remove_path(mu, P);
            for (auto& Q : dyck_rem(muP)) {
                if (classify_pair(P, Q) != PairClass::Adjacent) continue;
                KElement lhs = k_word(iso, {Generator::up(muP, Q), Generator::up(mu, P)});
                KElement rhs(s);
                auto env = envelope(mu, P, Q);
                if (env) {
                    DyckPath comp = envelope_complement(*env, P, Q);
                    Partition bottom = remove_path(muP, Q);
                    int c = (env->breadth() - Q.breadth()) % 2 == 0 ? 1 : -1;
                    rhs = k_word(iso, {Generator::down(bottom, comp), Generator::up(mu, *env)}) *
                          GaussInt(c);
                }
                checkK(lhs, rhs, "adjacent at " + mu.str());
            }
        }
    }

    // (2) unitriangularity of the transition matrix
    auto basis = h_basis(s);
    rep.unitriangular = true;
    for (auto& t : basis) {
        KElement img = iso.psi_triple(t);
        ArcBasisDiagram diag{t.row, t.mid, t.col};
        auto it = img.terms().find(diag);
        if (it == img.terms().end() || !it->second.is_unit()) {
            rep.unitriangular = false;
            rep.failures.push_back("diagonal entry missing or non-unit at " + t.str());
            continue;
        }
        rep.diagonal.push_back(it->second);
        for (auto& [d, c] : img.terms()) {
            if (d == diag) continue;
            bool lower = t.mid.contains(d.wt) && !(d.wt == t.mid) && d.cup == t.row &&
                         d.cap == t.col;
            if (!lower) {
                rep.unitriangular = false;
                rep.failures.push_back("non-triangular term " + d.str() + " in psi " + t.str());
            }
        }
    }

    // (3) structure-constant transport
    struct Job { HBasisTriple a, b; };
    std::vector<Job> jobs;
    if (genPairsOnly) {
        std::vector<Generator> gens;
        for (auto& mu : ps) {
            gens.push_back(Generator::idem(mu));
            for (auto& P : dyck_rem(mu)) {
                gens.push_back(Generator::up(mu, P));
                gens.push_back(Generator::down(mu, P));
            }
        }
        for (auto& a : gens)
            for (auto& b : gens) {
                if (!(a.col() == b.row())) continue;
                Partition la = a.kind == Generator::Kind::Idem ? a.mu : remove_path(a.mu, a.path);
                Partition lb = b.kind == Generator::Kind::Idem ? b.mu : remove_path(b.mu, b.path);
                HBasisTriple ta = a.kind == Generator::Kind::Idem ? HBasisTriple{a.mu, a.mu, a.mu}
                                  : a.kind == Generator::Kind::Up
                                      ? HBasisTriple{la, la, a.mu}
                                      : HBasisTriple{la, a.mu, la};
                HBasisTriple tb = b.kind == Generator::Kind::Idem ? HBasisTriple{b.mu, b.mu, b.mu}
                                  : b.kind == Generator::Kind::Up
                                      ? HBasisTriple{lb, lb, b.mu}
                                      : HBasisTriple{lb, b.mu, lb};
                jobs.push_back({ta, tb});
            }
    } else {
        for (auto& a : basis)
            for (auto& b : basis)
                if (a.col == b.row) jobs.push_back({a, b});
    }

    // pre-fill the psi cache so worker threads only read it
    for (auto& t : basis) iso.psi_triple(t);

    std::mutex repMutex;
    auto worker = [&](size_t lo, size_t hi) {
        for (size_t i = lo; i < hi; ++i) {
            auto& [a, b] = jobs[i];
            HElement ab = iso.engine().mult(a, b);
            KElement viaH(s);
            for (auto& [t, c] : ab.terms()) viaH += iso.psi_triple(t) * c;
            KElement viaK = k_multiply(iso.psi_triple(a), iso.psi_triple(b));
            std::lock_guard<std::mutex> g(repMutex);
            rep.transportChecks++;
            if (!(viaH == viaK))
                rep.failures.push_back("transport at " + a.str() + " * " + b.str());
        }
    };
    int nthreads = std::max(1, threads);
    if (nthreads == 1) {
        worker(0, jobs.size());
    } else {
        // warm the H memo sequentially on a slice to avoid lock contention storms
        std::vector<std::thread> pool;
        size_t chunk = (jobs.size() + nthreads - 1) / nthreads;
        for (int t = 0; t < nthreads; ++t) {
            size_t lo = t * chunk, hi = std::min(jobs.size(), lo + chunk);
            if (lo >= hi) break;
            pool.emplace_back(worker, lo, hi);
        }
        for (auto& th : pool) th.join();
    }

    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

GaussInt transported_scalar_reference(const Generator& g, int k) {
    return dilate_h_scalar(g, k);
}

std::vector<TransportedDilation> transported_dilation(const Shape& s, int k) {
    Shape big = s.dilated();
    Isomorphism isoSmall(s);
    Isomorphism isoBig(big);
    std::vector<TransportedDilation> out;

    auto handle = [&](const Generator& g) {
        KElement img = isoSmall.psi_generator(g);
        KElement moved = dilate_k(img, k);
        HElement h = isoBig.psi_inverse(moved);
        if (h.terms().size() != 1)
            throw std::logic_error("transported generator is not a single term");
        auto& [t, c] = *h.terms().begin();
        Generator image = Generator::idem(t.mid);
        if (t.row == t.mid && !(t.col == t.mid)) {
            auto tiling = dyck_tiling(t.mid, t.col);
            if (!tiling || tiling->size() != 1)
                throw std::logic_error("transported image is not a generator");
            image = Generator::up(t.col, (*tiling)[0]);
        } else if (t.col == t.mid && !(t.row == t.mid)) {
            auto tiling = dyck_tiling(t.mid, t.row);
            if (!tiling || tiling->size() != 1)
                throw std::logic_error("transported image is not a generator");
            image = Generator::down(t.row, (*tiling)[0]);
        } else if (!(t.row == t.mid)) {
            throw std::logic_error("transported image is not a generator");
        }
        if (!c.is_unit()) throw std::logic_error("transported scalar is not a unit");
        out.push_back({g, image, c, dilate_h_scalar(g, k)});
    };

    for (auto& mu : enum_partitions(s)) {
        handle(Generator::idem(mu));
        for (auto& P : dyck_rem(mu)) {
            handle(Generator::up(mu, P));
            handle(Generator::down(mu, P));
        }
    }
    return out;
}

} // namespace arcdyck
