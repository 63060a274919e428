#include "arcdyck/arc_algebra.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace arcdyck {

bool arc_diagram_valid(const ArcBasisDiagram& d, const Shape& s) {
    return d.cup.fits(s) && d.wt.fits(s) && d.cap.fits(s) &&
           is_dyck_pair(d.wt, d.cup) && is_dyck_pair(d.wt, d.cap);
}

int arc_degree(const ArcBasisDiagram& d) {
    auto a = pair_degree(d.wt, d.cup);
    auto b = pair_degree(d.wt, d.cap);
    if (!a || !b) throw std::invalid_argument("invalid arc diagram " + d.str());
    return *a + *b;
}

KElement& KElement::operator+=(const KElement& o) {
    if (o.terms_.empty()) return *this;
    if (!terms_.empty() && !(shape_ == o.shape_))
        throw std::invalid_argument("shape mismatch");
    shape_ = o.shape_;
    for (auto& [d, c] : o.terms_) add(d, c);
    return *this;
}

KElement KElement::operator*(const GaussInt& c) const {
    KElement r(shape_);
    if (c.is_zero()) return r;
    for (auto& [d, x] : terms_) r.add(d, x * c);
    return r;
}

std::string KElement::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto& [d, c] : terms_) {
        if (!s.empty()) s += " + ";
        s += c.str() + "*" + d.str();
    }
    return s;
}

std::string KElement::to_json() const {
    nlohmann::json j;
    j["shape"] = {shape_.m, shape_.n};
    j["terms"] = nlohmann::json::array();
    for (auto& [d, c] : terms_) {
        nlohmann::json t;
        t["re"] = c.re().get_str();
        t["im"] = c.im().get_str();
        t["cup"] = d.cup.parts();
        t["wt"] = d.wt.parts();
        t["cap"] = d.cap.parts();
        j["terms"].push_back(t);
    }
    return j.dump();
}

KElement KElement::from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    Shape s(j["shape"][0].get<int>(), j["shape"][1].get<int>());
    KElement e(s);
    for (auto& t : j["terms"]) {
        ArcBasisDiagram d{Partition(t["cup"].get<std::vector<int>>()),
                          Partition(t["wt"].get<std::vector<int>>()),
                          Partition(t["cap"].get<std::vector<int>>())};
        GaussInt c(mpz_class(t["re"].get<std::string>()), mpz_class(t["im"].get<std::string>()));
        if (!arc_diagram_valid(d, s)) throw std::invalid_argument("invalid diagram in JSON");
        e.add(d, c);
    }
    return e;
}

ArcBasisDiagram k_idempotent(const Partition& la) { return ArcBasisDiagram{la, la, la}; }

std::vector<ArcBasisDiagram> k_basis(const Shape& s) {
    std::vector<ArcBasisDiagram> out;
    auto ps = enum_partitions(s);
    for (auto& wt : ps) {
        std::vector<Partition> up;
        for (auto& al : ps)
            if (is_dyck_pair(wt, al)) up.push_back(al);
        for (auto& cup : up)
            for (auto& cap : up) out.push_back({cup, wt, cap});
    }
    std::sort(out.begin(), out.end());
    return out;
}

// --- the surgery state machine -------------------------------------------------
//
// A stacked product diagram has two weight lines; every vertex carries one
// arc below and one above. Components alternate between the two sides, so a
// walk from any vertex recovers its circle or strand. Each surgery replaces
// the middle cap/cup pair over one cup of the shared shape by two vertical
// strands and rewrites the orientations of the touched components.

namespace {

thread_local long forbiddenMerges = 0;
thread_local long keptStrandMerges = 0;

enum class ArcKind { BottomCup, BottomRay, MidCap, MidCup, Vert, TopCap, TopRay };

struct Arc {
    ArcKind kind;
    int p = 0, q = 0; // q unused for rays and verticals
};

struct Point {
    int line; // 0 = lower weight line, 1 = upper
    int pos;  // 1-based
    auto operator<=>(const Point&) const = default;
};

struct State {
    std::vector<Arc> arcs;
    std::vector<std::vector<Arrow>> labels;     // [line][pos-1]
    std::vector<std::vector<int>> below, above; // arc ids per point

    int add_arc(Arc a) {
        arcs.push_back(a);
        return static_cast<int>(arcs.size()) - 1;
    }
    Arrow& label_at(Point x) { return labels[x.line][x.pos - 1]; }

    bool is_ray(int a) const {
        return arcs[a].kind == ArcKind::BottomRay || arcs[a].kind == ArcKind::TopRay;
    }
    std::pair<Point, Point> ends(int a) const {
        const Arc& arc = arcs[a];
        switch (arc.kind) {
            case ArcKind::BottomCup: return {{0, arc.p}, {0, arc.q}};
            case ArcKind::MidCap:    return {{0, arc.p}, {0, arc.q}};
            case ArcKind::MidCup:    return {{1, arc.p}, {1, arc.q}};
            case ArcKind::Vert:      return {{0, arc.p}, {1, arc.p}};
            case ArcKind::TopCap:    return {{1, arc.p}, {1, arc.q}};
            default: throw std::logic_error("ray has one end");
        }
    }
    bool arc_is_above(int a, Point x) const {
        switch (arcs[a].kind) {
            case ArcKind::BottomCup:
            case ArcKind::BottomRay: return false;
            case ArcKind::MidCap:    return true;
            case ArcKind::MidCup:    return false;
            case ArcKind::Vert:      return x.line == 0;
            case ArcKind::TopCap:
            case ArcKind::TopRay:    return true;
        }
        return false;
    }
};

struct Component {
    bool closed = false;
    std::vector<Point> pts; // traversal order
    std::vector<int> leave; // arc leaving pts[i]; for open comps leave.back() is the end ray
    int startRay = -1, endRay = -1;

    bool contains(Point x) const {
        return std::find(pts.begin(), pts.end(), x) != pts.end();
    }
};

Component trace_component(const State& st, Point x0) {
    Component comp;
    Point x = x0;
    int a = st.above[x.line][x.pos - 1];
    std::vector<Point> fwd;
    std::vector<int> fwdArc;
    while (true) {
        fwd.push_back(x);
        fwdArc.push_back(a);
        if (st.is_ray(a)) break;
        auto [u, v] = st.ends(a);
        Point y = (u == x) ? v : u;
        if (y == x0) { comp.closed = true; break; }
        x = y;
        bool cameAbove = st.arc_is_above(a, y);
        a = cameAbove ? st.below[y.line][y.pos - 1] : st.above[y.line][y.pos - 1];
    }
    if (comp.closed) {
        comp.pts = fwd;
        comp.leave = fwdArc;
        return comp;
    }
    // open component: walk the other way to the start ray
    std::vector<Point> bwd;
    std::vector<int> bwdArc;
    Point y = x0;
    int b = st.below[y.line][y.pos - 1];
    while (!st.is_ray(b)) {
        auto [u, v] = st.ends(b);
        Point z = (u == y) ? v : u;
        bwd.push_back(z);
        bwdArc.push_back(b);
        y = z;
        bool cameAbove = st.arc_is_above(b, z);
        b = cameAbove ? st.below[z.line][z.pos - 1] : st.above[z.line][z.pos - 1];
    }
    comp.startRay = b;
    comp.endRay = fwdArc.back();
    for (auto it = bwd.rbegin(); it != bwd.rend(); ++it) comp.pts.push_back(*it);
    for (auto it = bwdArc.rbegin(); it != bwdArc.rend(); ++it) comp.leave.push_back(*it);
    for (size_t i = 0; i < fwd.size(); ++i) {
        comp.pts.push_back(fwd[i]);
        comp.leave.push_back(fwdArc[i]);
    }
    return comp;
}

// Labels induced by the forward traversal: an up arrow wherever the
// component leaves through the upper side of the vertex.
std::vector<Arrow> fwd_labels(const State& st, const Component& c) {
    std::vector<Arrow> out(c.pts.size());
    for (size_t i = 0; i < c.pts.size(); ++i)
        out[i] = st.arc_is_above(c.leave[i], c.pts[i]) ? Arrow::Up : Arrow::Down;
    return out;
}

// +1 if the current labels match the forward traversal, -1 for the reverse.
int direction_of(const State& st, const Component& c) {
    auto f = fwd_labels(st, c);
    bool isFwd = true, isBwd = true;
    for (size_t i = 0; i < c.pts.size(); ++i) {
        Arrow cur = st.labels[c.pts[i].line][c.pts[i].pos - 1];
        if (cur != f[i]) isFwd = false;
        if (cur == f[i]) isBwd = false;
    }
    if (isFwd) return 1;
    if (isBwd) return -1;
    throw std::logic_error("component with inconsistent orientation");
}

size_t leftmost_index(const Component& c) {
    size_t best = 0;
    for (size_t i = 1; i < c.pts.size(); ++i)
        if (c.pts[i].pos < c.pts[best].pos ||
            (c.pts[i].pos == c.pts[best].pos && c.pts[i].line < c.pts[best].line))
            best = i;
    return best;
}

enum class CompType { CircleAnti, CircleClock, Strand };

CompType type_of(const State& st, const Component& c) {
    if (!c.closed) return CompType::Strand;
    direction_of(st, c); // consistency check
    Point lm = c.pts[leftmost_index(c)];
    return st.labels[lm.line][lm.pos - 1] == Arrow::Up ? CompType::CircleAnti
                                                       : CompType::CircleClock;
}

void relabel(State& st, const Component& c, int dir) {
    auto f = fwd_labels(st, c);
    for (size_t i = 0; i < c.pts.size(); ++i) {
        Arrow a = f[i];
        if (dir < 0) a = (a == Arrow::Up) ? Arrow::Down : Arrow::Up;
        st.label_at(c.pts[i]) = a;
    }
}

void relabel_circle(State& st, const Component& c, bool clockwise) {
    auto f = fwd_labels(st, c);
    size_t lm = leftmost_index(c);
    bool fwdUpAtLeftmost = f[lm] == Arrow::Up;
    // anticlockwise circles carry the up arrow at their leftmost vertex
    int dir = (fwdUpAtLeftmost == !clockwise) ? 1 : -1;
    relabel(st, c, dir);
}

void relabel_strand_from(State& st, const Component& c, int sourceRay) {
    if (c.startRay == sourceRay) relabel(st, c, 1);
    else if (c.endRay == sourceRay) relabel(st, c, -1);
    else throw std::logic_error("source ray does not bound the strand");
}

bool is_propagating(const State& st, const Component& c) {
    if (c.closed) return false;
    return st.arcs[c.startRay].kind != st.arcs[c.endRay].kind;
}

bool strand_points_up(const State& st, const Component& c) {
    int dir = direction_of(st, c);
    int source = (dir > 0) ? c.startRay : c.endRay;
    return st.arcs[source].kind == ArcKind::BottomRay;
}

struct Branch {
    State st;
    long coeff;
};

State initial_state(const ArcBasisDiagram& a, const ArcBasisDiagram& b, const Shape& s) {
    State st;
    int W = s.points();
    st.labels = {partition_to_weight(a.wt, s), partition_to_weight(b.wt, s)};
    st.below.assign(2, std::vector<int>(W, -1));
    st.above.assign(2, std::vector<int>(W, -1));

    auto cupA = cup_diagram(a.cup, s);
    for (auto& [p, q] : cupA.cups) {
        int id = st.add_arc({ArcKind::BottomCup, p, q});
        st.below[0][p - 1] = id;
        st.below[0][q - 1] = id;
    }
    for (int p : cupA.rays) st.below[0][p - 1] = st.add_arc({ArcKind::BottomRay, p});

    auto mid = cup_diagram(a.cap, s); // equals the cup diagram of b.cup
    for (auto& [p, q] : mid.cups) {
        int idCap = st.add_arc({ArcKind::MidCap, p, q});
        st.above[0][p - 1] = idCap;
        st.above[0][q - 1] = idCap;
        int idCup = st.add_arc({ArcKind::MidCup, p, q});
        st.below[1][p - 1] = idCup;
        st.below[1][q - 1] = idCup;
    }
    for (int p : mid.rays) {
        int id = st.add_arc({ArcKind::Vert, p});
        st.above[0][p - 1] = id;
        st.below[1][p - 1] = id;
    }

    auto capB = cup_diagram(b.cap, s);
    for (auto& [p, q] : capB.cups) {
        int id = st.add_arc({ArcKind::TopCap, p, q});
        st.above[1][p - 1] = id;
        st.above[1][q - 1] = id;
    }
    for (int p : capB.rays) st.above[1][p - 1] = st.add_arc({ArcKind::TopRay, p});
    return st;
}

void surgery_step(const State& in, int p, int q, std::vector<Branch>& out, long coeff) {
    State st = in;
    int capId = st.above[0][p - 1];
    int cupId = st.below[1][p - 1];
    assert(st.arcs[capId].kind == ArcKind::MidCap && st.arcs[capId].q == q);
    assert(st.arcs[cupId].kind == ArcKind::MidCup);
    (void)capId; (void)cupId; (void)q;

    Component A = trace_component(st, Point{0, p});
    bool same = A.contains(Point{1, p});
    Component B = same ? A : trace_component(st, Point{1, p});

    CompType tA = type_of(st, A);
    CompType tB = same ? tA : type_of(st, B);

    int srcA = -1, srcB = -1;
    bool propA = false, propB = false, upA = false, upB = false;
    if (tA == CompType::Strand) {
        srcA = (direction_of(st, A) > 0) ? A.startRay : A.endRay;
        propA = is_propagating(st, A);
        if (propA) upA = strand_points_up(st, A);
    }
    if (!same && tB == CompType::Strand) {
        srcB = (direction_of(st, B) > 0) ? B.startRay : B.endRay;
        propB = is_propagating(st, B);
        if (propB) upB = strand_points_up(st, B);
    }

    // restitch the site into two vertical strands
    int v1 = st.add_arc({ArcKind::Vert, p});
    int v2 = st.add_arc({ArcKind::Vert, q});
    st.above[0][p - 1] = v1;
    st.below[1][p - 1] = v1;
    st.above[0][q - 1] = v2;
    st.below[1][q - 1] = v2;

    std::vector<Component> fresh;
    for (Point x : {Point{0, p}, Point{0, q}, Point{1, p}, Point{1, q}}) {
        bool seen = false;
        for (auto& c : fresh)
            if (c.contains(x)) { seen = true; break; }
        if (!seen) fresh.push_back(trace_component(st, x));
    }

    if (!same) { // merge
        if ((tA == CompType::CircleClock && tB == CompType::CircleClock) ||
            (tA == CompType::CircleClock && tB == CompType::Strand) ||
            (tA == CompType::Strand && tB == CompType::CircleClock)) {
            forbiddenMerges++;
            return;
        }
        if (tA == CompType::Strand && tB == CompType::Strand) {
            // survives only for propagating strands of opposite orientation,
            // in which case every label is already consistent
            if (!(propA && propB && upA != upB)) {
                forbiddenMerges++;
                return;
            }
            keptStrandMerges++;
            assert(fresh.size() == 2);
            for (auto& c : fresh) direction_of(st, c);
            out.push_back({std::move(st), coeff});
            return;
        }
        if (tA == CompType::Strand || tB == CompType::Strand) {
            // anticlockwise circle absorbed into the strand
            assert(fresh.size() == 1 && !fresh[0].closed);
            relabel_strand_from(st, fresh[0], tA == CompType::Strand ? srcA : srcB);
            out.push_back({std::move(st), coeff});
            return;
        }
        assert(fresh.size() == 1 && fresh[0].closed);
        bool anyClock = (tA == CompType::CircleClock) || (tB == CompType::CircleClock);
        relabel_circle(st, fresh[0], anyClock);
        out.push_back({std::move(st), coeff});
        return;
    }

    // split
    assert(fresh.size() == 2);
    if (tA == CompType::Strand) {
        Component* circ = fresh[0].closed ? &fresh[0] : &fresh[1];
        Component* str = fresh[0].closed ? &fresh[1] : &fresh[0];
        assert(circ->closed && !str->closed);
        relabel_circle(st, *circ, true);
        relabel_strand_from(st, *str, srcA);
        out.push_back({std::move(st), coeff});
        return;
    }
    assert(fresh[0].closed && fresh[1].closed);
    if (tA == CompType::CircleClock) {
        relabel_circle(st, fresh[0], true);
        relabel_circle(st, fresh[1], true);
        out.push_back({std::move(st), coeff});
        return;
    }
    // anticlockwise circle splits into the two mixed orientations
    State st2 = st;
    Component f0b = trace_component(st2, fresh[0].pts[0]);
    Component f1b = trace_component(st2, fresh[1].pts[0]);
    relabel_circle(st, fresh[0], false);
    relabel_circle(st, fresh[1], true);
    out.push_back({std::move(st), coeff});
    relabel_circle(st2, f0b, true);
    relabel_circle(st2, f1b, false);
    out.push_back({std::move(st2), coeff});
}

} // namespace

std::vector<std::pair<ArcBasisDiagram, long>>
k_multiply_basis(const ArcBasisDiagram& a, const ArcBasisDiagram& b, const Shape& s,
                 const std::vector<int>& surgery_order) {
    if (!(a.cap == b.cup)) return {};
    if (!arc_diagram_valid(a, s) || !arc_diagram_valid(b, s))
        throw std::invalid_argument("invalid arc diagram operand");

    auto mid = cup_diagram(a.cap, s);
    std::vector<int> order(mid.cups.size());
    std::iota(order.begin(), order.end(), 0);
    if (!surgery_order.empty()) {
        if (surgery_order.size() != mid.cups.size())
            throw std::invalid_argument("surgery order has wrong length");
        order = surgery_order;
    }

    std::vector<Branch> branches{{initial_state(a, b, s), 1}};
    for (int idx : order) {
        auto [p, q] = mid.cups[idx];
        std::vector<Branch> next;
        for (auto& br : branches) surgery_step(br.st, p, q, next, br.coeff);
        branches = std::move(next);
    }

    std::map<ArcBasisDiagram, long> acc;
    for (auto& br : branches) {
        if (br.st.labels[0] != br.st.labels[1])
            throw std::logic_error("weight lines disagree after surgery");
        Partition w = weight_to_partition(br.st.labels[0], s);
        ArcBasisDiagram d{a.cup, w, b.cap};
        if (!arc_diagram_valid(d, s))
            throw std::logic_error("surgery produced an invalid diagram");
        acc[d] += br.coeff;
    }
    return {acc.begin(), acc.end()};
}

KElement k_multiply(const KElement& a, const KElement& b) {
    if (!a.is_zero() && !b.is_zero() && !(a.shape() == b.shape()))
        throw std::invalid_argument("shape mismatch");
    KElement r(a.shape());
    for (auto& [da, ca] : a.terms())
        for (auto& [db, cb] : b.terms())
            for (auto& [d, k] : k_multiply_basis(da, db, a.shape()))
                r.add(d, ca * cb * GaussInt(k));
    return r;
}

KElement k_flip(const KElement& a) {
    KElement r(a.shape());
    for (auto& [d, c] : a.terms()) r.add({d.cap, d.wt, d.cup}, c);
    return r;
}

void surgery_stats_reset() {
    forbiddenMerges = 0;
    keptStrandMerges = 0;
}
long surgery_forbidden_count() { return forbiddenMerges; }
long surgery_kept_strand_merges() { return keptStrandMerges; }

KElement dilate_k(const KElement& a, int k) {
    Shape s = a.shape();
    KElement r(s.dilated());
    for (auto& [d, c] : a.terms())
        r.add({dilate_partition(d.cup, k, s), dilate_partition(d.wt, k, s),
               dilate_partition(d.cap, k, s)},
              c);
    return r;
}

} // namespace arcdyck
