#include "arcdyck/hecke_algebra.hpp"

#include <algorithm>
#include <cassert>
#include <mutex>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace arcdyck {

Partition Generator::row() const {
    switch (kind) {
        case Kind::Idem: return mu;
        case Kind::Up:   return remove_path(mu, path);
        case Kind::Down: return mu;
    }
    throw std::logic_error("bad generator");
}

Partition Generator::col() const {
    switch (kind) {
        case Kind::Idem: return mu;
        case Kind::Up:   return mu;
        case Kind::Down: return remove_path(mu, path);
    }
    throw std::logic_error("bad generator");
}

Generator Generator::dual() const {
    switch (kind) {
        case Kind::Idem: return *this;
        case Kind::Up:   return down(mu, path);
        case Kind::Down: return up(mu, path);
    }
    throw std::logic_error("bad generator");
}

std::string Generator::str() const {
    switch (kind) {
        case Kind::Idem: return "1_(" + mu.str() + ")";
        case Kind::Up:   return "U(" + mu.str() + "; " + path.str() + ")";
        case Kind::Down: return "D(" + mu.str() + "; " + path.str() + ")";
    }
    return "?";
}

bool h_triple_valid(const HBasisTriple& t) {
    return is_dyck_pair(t.mid, t.row) && is_dyck_pair(t.mid, t.col);
}

int h_degree(const HBasisTriple& t) {
    auto a = pair_degree(t.mid, t.row);
    auto b = pair_degree(t.mid, t.col);
    if (!a || !b) throw std::invalid_argument("invalid basis triple " + t.str());
    return *a + *b;
}

std::string HElement::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto& [t, c] : terms_) {
        if (!s.empty()) s += " + ";
        s += c.str() + "*" + t.str();
    }
    return s;
}

std::string HElement::to_json(const Shape& s) const {
    nlohmann::json j;
    j["shape"] = {s.m, s.n};
    j["terms"] = nlohmann::json::array();
    for (auto& [t, c] : terms_) {
        nlohmann::json e;
        e["re"] = c.re().get_str();
        e["im"] = c.im().get_str();
        e["mid"] = t.mid.parts();
        e["row"] = t.row.parts();
        e["col"] = t.col.parts();
        j["terms"].push_back(e);
    }
    return j.dump();
}

HElement HElement::from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    HElement e;
    for (auto& t : j["terms"]) {
        HBasisTriple b{Partition(t["mid"].get<std::vector<int>>()),
                       Partition(t["row"].get<std::vector<int>>()),
                       Partition(t["col"].get<std::vector<int>>())};
        if (!h_triple_valid(b)) throw std::invalid_argument("invalid triple in JSON");
        GaussInt c(mpz_class(t["re"].get<std::string>()), mpz_class(t["im"].get<std::string>()));
        e.add(b, c);
    }
    return e;
}

std::vector<HBasisTriple> h_basis(const Shape& s) {
    std::vector<HBasisTriple> out;
    auto ps = enum_partitions(s);
    for (auto& mid : ps) {
        std::vector<Partition> up;
        for (auto& al : ps)
            if (is_dyck_pair(mid, al)) up.push_back(al);
        for (auto& row : up)
            for (auto& col : up) out.push_back({mid, row, col});
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

HBasisTriple gen_triple(const Generator& g) {
    switch (g.kind) {
        case Generator::Kind::Idem: return {g.mu, g.mu, g.mu};
        case Generator::Kind::Up: {
            Partition la = remove_path(g.mu, g.path);
            return {la, la, g.mu};
        }
        case Generator::Kind::Down: {
            Partition la = remove_path(g.mu, g.path);
            return {la, g.mu, la};
        }
    }
    throw std::logic_error("bad generator");
}

int sign_pow(int k) { return (k % 2 == 0) ? 1 : -1; }

Shape hull(const Partition& p) {
    return Shape(std::max(1, p.part(1)), std::max(1, p.rows()));
}

} // namespace

std::vector<DyckPath> HeckeEngine::peel_sequence(const Partition& lambda,
                                                 const Partition& mu) const {
    auto tiling = dyck_tiling(lambda, mu);
    if (!tiling)
        throw std::invalid_argument("not a Dyck pair: (" + lambda.str() + ", " + mu.str() + ")");
    std::vector<DyckPath> pool = *tiling;
    std::vector<DyckPath> order;
    while (!pool.empty()) {
        size_t pick = pool.size();
        for (size_t i = 0; i < pool.size(); ++i) {
            bool covered = false;
            for (size_t j = 0; j < pool.size(); ++j)
                if (i != j && classify_pair(pool[j], pool[i]) == PairClass::PCoversQ)
                    covered = true;
            if (covered) continue;
            if (pick == pool.size()) { pick = i; continue; }
            bool better = (policy_ == PeelPolicy::SmallestFirst)
                              ? pool[i].first < pool[pick].first
                              : pool[i].first > pool[pick].first;
            if (better) pick = i;
        }
        order.push_back(pool[pick]);
        pool.erase(pool.begin() + pick);
    }
    return order;
}

std::vector<Generator> HeckeEngine::canonical_word(const HBasisTriple& t) const {
    std::vector<Generator> word;
    Partition cur = t.row;
    for (auto& P : peel_sequence(t.mid, t.row)) {
        word.push_back(Generator::down(cur, P));
        cur = remove_path(cur, P);
    }
    std::vector<Generator> asc;
    cur = t.col;
    for (auto& P : peel_sequence(t.mid, t.col)) {
        asc.push_back(Generator::up(cur, P));
        cur = remove_path(cur, P);
    }
    std::reverse(asc.begin(), asc.end());
    word.insert(word.end(), asc.begin(), asc.end());
    if (word.empty()) word.push_back(Generator::idem(t.mid));
    return word;
}

HElement HeckeEngine::peak_rewrite(const Partition& mu, const DyckPath& up,
                                   const DyckPath& down) {
    HElement out;
    Partition laUp = remove_path(mu, up);
    Partition laDown = remove_path(mu, down);
    if (up == down) {
        // self-dual relation
        int base = sign_pow(up.breadth() - 1);
        for (auto& R : dyck_rem(laUp)) {
            PairClass pc = classify_pair(R, up);
            int coeff = 0;
            if (pc == PairClass::PCoversQ) coeff = 2 * base * sign_pow(R.breadth());
            else if (pc == PairClass::Adjacent) coeff = base * sign_pow(R.breadth());
            if (coeff == 0) continue;
            out.add({remove_path(laUp, R), laUp, laUp}, GaussInt(coeff));
        }
        return out;
    }
    if (commute(mu, up, down)) {
        Partition mid = remove_path(laUp, down);
        out.add({mid, laUp, laDown}, GaussInt(1));
        return out;
    }
    PairClass pc = classify_pair(up, down);
    if (pc == PairClass::PCoversQ) {
        // the ascending path covers the descending one
        HBasisTriple t{laUp, laUp, laDown};
        if (!h_triple_valid(t)) throw std::logic_error("bad non-commuting rewrite");
        out.add(t, GaussInt(1));
        return out;
    }
    if (pc == PairClass::QCoversP) return peak_rewrite(mu, down, up).dual();
    throw std::logic_error("impossible peak configuration at " + mu.str());
}

HElement HeckeEngine::asc_rewrite(const Partition& top, const DyckPath& first,
                                  const DyckPath& second) {
    // the word Up(top-first, second) . Up(top, first)
    HElement out;
    Partition mid1 = remove_path(top, first);
    Partition bottom = remove_path(mid1, second);
    if (classify_pair(first, second) == PairClass::Adjacent) {
        auto env = envelope(top, first, second);
        if (!env) return out; // zero
        DyckPath comp = envelope_complement(*env, first, second);
        Partition small = remove_path(top, *env);
        int coeff = sign_pow(env->breadth() - second.breadth());
        HBasisTriple t{small, bottom, top};
        if (!h_triple_valid(t) || !(add_path(small, comp, hull(top)) == bottom))
            throw std::logic_error("bad adjacent rewrite");
        out.add(t, GaussInt(coeff));
        return out;
    }
    HBasisTriple t{bottom, bottom, top};
    if (!h_triple_valid(t)) throw std::logic_error("bad ascending rewrite");
    out.add(t, GaussInt(1));
    return out;
}

HElement HeckeEngine::desc_rewrite(const Partition& top, const DyckPath& first,
                                   const DyckPath& second) {
    return asc_rewrite(top, first, second).dual();
}

namespace {

// True when adding P to the tiling of (mid, side) gives exactly the tiling
// of (mid, target): the extended run is then an admissible peel order of the
// target pair and already denotes a basis element.
bool extends_tiling(const Partition& mid, const Partition& side, const DyckPath& P,
                    const Partition& target) {
    auto grown = dyck_tiling(mid, target);
    if (!grown) return false;
    auto base = dyck_tiling(mid, side);
    if (!base) return false;
    base->push_back(P);
    std::sort(base->begin(), base->end());
    return *base == *grown;
}

// Guards against reduction cycles; a repeat visit means the rewriting logic
// failed to make progress.
struct CycleGuard {
    using Key = std::pair<HBasisTriple, Generator>;
    static thread_local std::set<Key> active;
    Key key;
    explicit CycleGuard(Key k) : key(std::move(k)) {
        if (!active.insert(key).second)
            throw std::logic_error("reduction cycle at " + key.first.str() + " * " +
                                   key.second.str());
    }
    ~CycleGuard() { active.erase(key); }
};
thread_local std::set<CycleGuard::Key> CycleGuard::active;

} // namespace

HElement HeckeEngine::mult_triple_gen(const HBasisTriple& t, const Generator& g) {
    if (!(t.col == g.row())) return HElement();
    if (g.kind == Generator::Kind::Idem) return HElement(t);

    auto key = std::make_pair(t, g);
    {
        std::shared_lock lock(memoMutex_);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
    }
    CycleGuard guard(key);

    HElement result;
    if (g.kind == Generator::Kind::Up) {
        const DyckPath R = g.path;
        const Partition tau = g.mu; // t.col + R
        if (extends_tiling(t.mid, t.col, R, tau)) {
            // the longer ascending run is still an admissible word
            result = HElement(HBasisTriple{t.mid, t.row, tau});
        } else {
            // the new path clashes with the run: expose a peel it interacts
            // with (an adjacent one if available, else swap past a commuting
            // one and retry deeper)
            auto tiling = *dyck_tiling(t.mid, t.col);
            std::vector<DyckPath> candidates = peel_sequence(t.mid, t.col);
            // only currently uncovered paths may be peeled last
            std::vector<DyckPath> uncovered;
            for (auto& W : tiling) {
                bool covered = false;
                for (auto& V : tiling)
                    if (!(V == W) && classify_pair(V, W) == PairClass::PCoversQ) covered = true;
                if (!covered) uncovered.push_back(W);
            }
            if (policy_ == PeelPolicy::LargestFirst)
                std::reverse(uncovered.begin(), uncovered.end());

            std::optional<DyckPath> adjacentQ, swapQ;
            for (auto& Q : uncovered) {
                if (classify_pair(Q, R) == PairClass::Adjacent) {
                    if (!adjacentQ) adjacentQ = Q;
                } else if (!swapQ && is_removable(tau, Q) &&
                           is_removable(remove_path(tau, Q), R)) {
                    swapQ = Q;
                }
            }
            if (adjacentQ) {
                HBasisTriple tp{t.mid, t.row, remove_path(t.col, *adjacentQ)};
                HElement x = asc_rewrite(tau, R, *adjacentQ);
                for (auto& [sTriple, c] : x.terms()) result += mult(tp, sTriple) * c;
            } else if (swapQ) {
                HBasisTriple tp{t.mid, t.row, remove_path(t.col, *swapQ)};
                HElement inner =
                    mult_triple_gen(tp, Generator::up(remove_path(tau, *swapQ), R));
                result = mult_elem_gen(inner, Generator::up(tau, *swapQ));
            } else {
                throw std::logic_error("no admissible ascending rewrite at " + t.str() +
                                       " * " + g.str());
            }
        }
    } else if (t.mid == t.col) {
        const DyckPath R = g.path;
        Partition target = remove_path(t.mid, R);
        bool extendsDown = [&] {
            auto grown = dyck_tiling(target, t.row);
            if (!grown) return false;
            auto base = dyck_tiling(t.mid, t.row);
            base->push_back(R);
            std::sort(base->begin(), base->end());
            return *base == *grown;
        }();
        if (extendsDown) {
            result = HElement(HBasisTriple{target, t.row, target});
        } else if (t.row == t.mid) {
            result = HElement(gen_triple(g));
        } else {
            // mirror of the ascending clash: work on the last descending letter
            auto tiling = *dyck_tiling(t.mid, t.row);
            std::vector<DyckPath> lastCandidates;
            for (auto& W : tiling) {
                bool coversSomething = false;
                for (auto& V : tiling)
                    if (!(V == W) && classify_pair(W, V) == PairClass::PCoversQ)
                        coversSomething = true;
                if (!coversSomething) lastCandidates.push_back(W);
            }
            if (policy_ == PeelPolicy::LargestFirst)
                std::reverse(lastCandidates.begin(), lastCandidates.end());

            std::optional<DyckPath> adjacentW, swapW;
            for (auto& W : lastCandidates) {
                Partition midUp = add_path(t.mid, W, hull(t.row));
                if (classify_pair(W, R) == PairClass::Adjacent) {
                    if (!adjacentW) adjacentW = W;
                } else if (!swapW && is_removable(midUp, R) &&
                           is_removable(remove_path(midUp, R), W)) {
                    swapW = W;
                }
            }
            if (adjacentW) {
                Partition midUp = add_path(t.mid, *adjacentW, hull(t.row));
                HBasisTriple tp{midUp, t.row, midUp};
                HElement x = desc_rewrite(midUp, *adjacentW, R);
                for (auto& [sTriple, c] : x.terms()) result += mult(tp, sTriple) * c;
            } else if (swapW) {
                Partition midUp = add_path(t.mid, *swapW, hull(t.row));
                HBasisTriple tp{midUp, t.row, midUp};
                HElement inner = mult_triple_gen(tp, Generator::down(midUp, R));
                result = mult_elem_gen(inner, Generator::down(remove_path(midUp, R), *swapW));
            } else {
                throw std::logic_error("no admissible descending rewrite at " + t.str() +
                                       " * " + g.str());
            }
        }
    } else {
        // peak frontier: last ascending letter against the down letter
        auto peels = peel_sequence(t.mid, t.col);
        DyckPath Q = peels.front();
        HBasisTriple tp{t.mid, t.row, remove_path(t.col, Q)};
        HElement x = peak_rewrite(t.col, Q, g.path);
        for (auto& [sTriple, c] : x.terms()) result += mult(tp, sTriple) * c;
    }

    std::unique_lock lock(memoMutex_);
    memo_.emplace(key, result);
    return result;
}

HElement HeckeEngine::mult_gen_triple(const Generator& g, const HBasisTriple& t) {
    return mult_triple_gen(t.dual(), g.dual()).dual();
}

HElement HeckeEngine::mult_elem_gen(const HElement& e, const Generator& g) {
    HElement out;
    for (auto& [t, c] : e.terms()) out += mult_triple_gen(t, g) * c;
    return out;
}

HElement HeckeEngine::mult(const HBasisTriple& a, const HBasisTriple& b) {
    if (!(a.col == b.row)) return HElement();
    HElement acc(a);
    for (auto& g : canonical_word(b)) acc = mult_elem_gen(acc, g);
    return acc;
}

HElement HeckeEngine::h_multiply(const HElement& a, const HElement& b) {
    HElement out;
    for (auto& [ta, ca] : a.terms())
        for (auto& [tb, cb] : b.terms()) out += mult(ta, tb) * (ca * cb);
    return out;
}

HElement HeckeEngine::word_product(const std::vector<Generator>& word) {
    if (word.empty()) return HElement();
    HElement acc(gen_triple(word[0]));
    for (size_t i = 1; i < word.size(); ++i) acc = mult_elem_gen(acc, word[i]);
    return acc;
}

HElement HeckeEngine::gen_pair_product(const Generator& a, const Generator& b) {
    if (!(a.col() == b.row())) return HElement();
    if (a.kind == Generator::Kind::Idem) return HElement(gen_triple(b));
    if (b.kind == Generator::Kind::Idem) return HElement(gen_triple(a));
    if (a.kind == Generator::Kind::Down && b.kind == Generator::Kind::Up)
        return HElement(HBasisTriple{a.col(), a.mu, b.mu});
    if (a.kind == Generator::Kind::Up && b.kind == Generator::Kind::Down)
        return peak_rewrite(a.mu, a.path, b.path);
    if (a.kind == Generator::Kind::Up && b.kind == Generator::Kind::Up)
        return asc_rewrite(b.mu, b.path, a.path);
    return desc_rewrite(a.mu, a.path, b.path);
}

// --- relation verification ------------------------------------------------------

RelationReport verify_relations(const Shape& s, PeelPolicy policy) {
    HeckeEngine eng(policy);
    RelationReport rep;
    auto ps = enum_partitions(s);

    auto checkEqual = [&](const HElement& lhs, const HElement& rhs, const std::string& what) {
        rep.checked++;
        if (!(lhs == rhs))
            rep.failures.push_back(what + ": " + lhs.str() + " != " + rhs.str());
    };

    // idempotent relations
    for (auto& mu : ps)
        for (auto& P : dyck_rem(mu)) {
            Generator u = Generator::up(mu, P);
            auto word = eng.word_product({Generator::idem(u.row()), u, Generator::idem(u.col())});
            checkEqual(word, HElement(gen_triple(u)), "idem absorb " + u.str());
        }

    for (auto& mu : ps) {
        auto rem = dyck_rem(mu);
        // self-dual relation and its dual
        for (auto& P : rem) {
            Partition la = remove_path(mu, P);
            HElement lhs = eng.word_product({Generator::up(mu, P), Generator::down(mu, P)});
            HElement rhs;
            int base = sign_pow(P.breadth() - 1);
            for (auto& R : dyck_rem(la)) {
                PairClass pc = classify_pair(R, P);
                int c = 0;
                if (pc == PairClass::PCoversQ) c = 2 * base * sign_pow(R.breadth());
                else if (pc == PairClass::Adjacent) c = base * sign_pow(R.breadth());
                if (c != 0) rhs.add({remove_path(la, R), la, la}, GaussInt(c));
            }
            checkEqual(lhs, rhs, "selfdual at " + mu.str() + " " + P.str());
            checkEqual(lhs.dual(), rhs.dual(), "selfdual dual at " + mu.str());
        }
        // commuting relations
        for (auto& P : rem)
            for (auto& Q : rem) {
                if (P == Q || !commute(mu, P, Q)) continue;
                Partition muP = remove_path(mu, P);
                Partition muQ = remove_path(mu, Q);
                HElement a1 = eng.word_product({Generator::up(muP, Q), Generator::up(mu, P)});
                HElement a2 = eng.word_product({Generator::up(muQ, P), Generator::up(mu, Q)});
                checkEqual(a1, a2, "commuting asc at " + mu.str());
                HElement b1 = eng.word_product({Generator::up(mu, P), Generator::down(mu, Q)});
                HElement b2 = eng.word_product({Generator::down(muP, Q), Generator::up(muQ, P)});
                checkEqual(b1, b2, "commuting peak at " + mu.str());
                checkEqual(b1.dual(), b2.dual(), "commuting peak dual at " + mu.str());
            }
        // non-commuting relation: both middle choices agree with the peak
        for (auto& P : rem)
            for (auto& Q : rem) {
                if (P == Q || commute(mu, P, Q)) continue;
                if (classify_pair(Q, P) != PairClass::PCoversQ) continue; // Q covers P
                Partition muP = remove_path(mu, P);
                DyckPath Q1(Q.first, P.first - 1);
                DyckPath Q2(P.last + 1, Q.last);
                Partition mid1 = remove_path(muP, Q1);
                Partition mid2 = remove_path(muP, Q2);
                HElement lhs = eng.word_product({Generator::up(mu, Q), Generator::down(mu, P)});
                HElement r1 = eng.word_product({Generator::up(mid1, Q2), Generator::up(muP, Q1)});
                HElement r2 = eng.word_product({Generator::up(mid2, Q1), Generator::up(muP, Q2)});
                checkEqual(lhs, r1, "noncommuting (left) at " + mu.str());
                checkEqual(lhs, r2, "noncommuting (right) at " + mu.str());
                checkEqual(lhs.dual(), r1.dual(), "noncommuting dual at " + mu.str());
            }
        // adjacent relation
        for (auto& P : rem) {
            Partition muP = remove_path(mu, P);
            for (auto& Q : dyck_rem(muP)) {
                if (classify_pair(P, Q) != PairClass::Adjacent) continue;
                HElement lhs = eng.word_product({Generator::up(muP, Q), Generator::up(mu, P)});
                auto env = envelope(mu, P, Q);
                HElement rhs;
                if (env) {
                    DyckPath comp = envelope_complement(*env, P, Q);
                    Partition bottom = remove_path(muP, Q);
                    Partition small = remove_path(mu, *env);
                    (void)small;
                    int c = sign_pow(env->breadth() - Q.breadth());
                    rhs = eng.word_product(
                              {Generator::down(bottom, comp), Generator::up(mu, *env)}) *
                          GaussInt(c);
                }
                checkEqual(lhs, rhs, "adjacent at " + mu.str() + " " + P.str() + "," + Q.str());
                checkEqual(lhs.dual(), rhs.dual(), "adjacent dual at " + mu.str());
            }
        }
    }
    return rep;
}

GaussInt dilate_h_scalar(const Generator& g, int k) {
    if (g.kind == Generator::Kind::Idem || !g.path.contains(k)) return GaussInt(1);
    for (auto& [tile, role] : sf_representative(g.mu, g.path))
        if (tile.content() == k)
            return role == TileRole::Spot ? GaussInt(0, -1) : GaussInt(0, 1);
    throw std::logic_error("content not found on the path");
}

Generator dilate_h_generator(const Generator& g, int k, const Shape& s) {
    switch (g.kind) {
        case Generator::Kind::Idem:
            return Generator::idem(dilate_partition(g.mu, k, s));
        case Generator::Kind::Up:
            return Generator::up(dilate_partition(g.mu, k, s), dilate_path(g.path, k));
        case Generator::Kind::Down:
            return Generator::down(dilate_partition(g.mu, k, s), dilate_path(g.path, k));
    }
    throw std::logic_error("bad generator");
}

std::string quiver_dot(const Shape& s) {
    std::ostringstream os;
    os << "digraph dyck_quiver {\n";
    auto ps = enum_partitions(s);
    auto name = [&](const Partition& p) {
        std::string t = p.empty() ? "empty" : p.str();
        for (auto& ch : t)
            if (ch == ',') ch = '_';
        return "v_" + t;
    };
    for (auto& p : ps)
        os << "  " << name(p) << " [label=\"" << (p.empty() ? "0" : p.str()) << "\"];\n";
    for (auto& mu : ps)
        for (auto& P : dyck_rem(mu)) {
            Partition la = remove_path(mu, P);
            os << "  " << name(la) << " -> " << name(mu) << ";\n";
            os << "  " << name(mu) << " -> " << name(la) << ";\n";
        }
    os << "}\n";
    return os.str();
}

} // namespace arcdyck
