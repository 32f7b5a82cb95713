#include "strtop/cobar.hpp"

#include <deque>
#include <map>
#include <random>
#include <sstream>

namespace strtop {

Word identity_word(int v) { return Word{v, v, {}}; }

Word make_word(const Coalgebra& C, std::vector<int> letters) {
    if (letters.empty()) throw std::invalid_argument("make_word: use identity_word for empty words");
    for (std::size_t i = 0; i < letters.size(); ++i) {
        if (C.degree(letters[i]) < 1) throw std::invalid_argument("cobar letters must have degree >= 1");
        if (i && C.target(letters[i - 1]) != C.source(letters[i]))
            throw EndpointMismatch("letters " + C.describe(letters[i - 1]) + " and " + C.describe(letters[i]) + " do not compose");
    }
    Word w{C.source(letters.front()), C.target(letters.back()), std::move(letters)};
    return w;
}

int letters_degree(const Coalgebra& C, const std::vector<int>& l, std::size_t from, std::size_t to) {
    int d = 0;
    for (std::size_t i = from; i < to; ++i) d += C.degree(l[i]) - 1;
    return d;
}

int word_degree(const Coalgebra& C, const Word& w) { return letters_degree(C, w.letters, 0, w.letters.size()); }

CobarElem cobar_d(const Coalgebra& C, const Word& w) {
    CobarElem out;
    const auto& L = w.letters;
    int prefix = 0;  // degree of letters before i
    for (std::size_t i = 0; i < L.size(); ++i) {
        const int c = L[i];
        const int kappa = sgn(prefix);
        auto splice = [&](std::initializer_list<int> repl, long long coef) {
            Word v{w.src, w.tgt, {}};
            v.letters.reserve(L.size() + 1);
            v.letters.insert(v.letters.end(), L.begin(), L.begin() + i);
            v.letters.insert(v.letters.end(), repl);
            v.letters.insert(v.letters.end(), L.begin() + i + 1, L.end());
            out.add(std::move(v), Scalar(coef));
        };
        for (const auto& t : C.differential(c)) splice({t.g}, kappa * t.c);
        for (const auto& t : C.coproduct(c))
            if (C.degree(t.a) >= 1 && C.degree(t.b) >= 1) splice({t.a, t.b}, -kappa * sgn(C.degree(t.a)) * t.c);
        if (C.eta(c)) splice({}, kappa * C.eta(c));
        prefix += C.degree(c) - 1;
    }
    return out;
}

CobarElem cobar_d(const Coalgebra& C, const CobarElem& x) {
    CobarElem out;
    for (const auto& [w, c] : x) out.add(cobar_d(C, w), c);
    return out;
}

Word compose(const Word& a, const Word& b) {
    if (a.tgt != b.src) throw EndpointMismatch("compose: target of first word differs from source of second");
    Word w{a.src, b.tgt, a.letters};
    w.letters.insert(w.letters.end(), b.letters.begin(), b.letters.end());
    return w;
}

CobarElem compose(const CobarElem& a, const CobarElem& b) {
    CobarElem out;
    for (const auto& [u, cu] : a)
        for (const auto& [v, cv] : b) out.add(compose(u, v), cu * cv);
    return out;
}

void add_support(const Coalgebra& C, int g, std::set<int>& out) {
    for (int v : C.complex().vertices(C.base_simplex(g))) out.insert(v);
}

std::set<int> support_vertices(const Coalgebra& C, const Word& w) {
    std::set<int> s{w.src, w.tgt};
    for (int g : w.letters) add_support(C, g, s);
    return s;
}

bool gen_in(const Coalgebra& C, int g, const Subcomplex& Z) { return Z.contains(C.base_simplex(g)); }

bool word_in(const Coalgebra& C, const Word& w, const Subcomplex& Z) {
    if (!Z.contains(w.src) || !Z.contains(w.tgt)) return false;
    for (int g : w.letters)
        if (!gen_in(C, g, Z)) return false;
    return true;
}

Word path_representative(const Coalgebra& C, int v, int w, const Subcomplex& Z, unsigned seed) {
    const SimplicialComplex& K = C.complex();
    if (!Z.contains(v) || !Z.contains(w)) throw DisconnectedSupport("path endpoints not in the subcomplex");
    if (v == w) return identity_word(v);
    std::map<int, int> parent_edge{{v, -1}};
    std::deque<int> q{v};
    while (!q.empty() && !parent_edge.count(w)) {
        int x = q.front();
        q.pop_front();
        std::vector<int> nb = K.neighbors(x);
        if (seed) {
            std::mt19937 rng(seed * 1000003u + static_cast<unsigned>(x));
            std::shuffle(nb.begin(), nb.end(), rng);
        }
        for (int y : nb) {
            int e = K.edge(x, y);
            if (!Z.contains(e) || parent_edge.count(y)) continue;
            parent_edge[y] = e;
            q.push_back(y);
        }
    }
    if (!parent_edge.count(w)) throw DisconnectedSupport("no path from " + K.vertex_name(v) + " to " + K.vertex_name(w));
    std::vector<int> letters;
    for (int y = w; y != v;) {
        int e = parent_edge[y];
        const auto& ev = K.vertices(e);
        // forward along the edge iff we arrived at its larger vertex
        letters.push_back(ev[1] == y ? C.simplex_gen(e) : C.check(e));
        y = ev[0] == y ? ev[1] : ev[0];
    }
    std::reverse(letters.begin(), letters.end());
    return make_word(C, std::move(letters));
}

std::vector<Word> enumerate_words(const Coalgebra& C, int src, int tgt, int degree, int max_len, const Subcomplex* Z) {
    std::vector<Word> out;
    if (degree < 0) return out;
    if (Z && !Z->contains(src)) return out;
    Word cur{src, src, {}};
    std::function<void(int, int)> rec = [&](int at, int deg_left) {
        if (deg_left == 0 && (tgt < 0 || at == tgt)) {
            cur.tgt = at;
            out.push_back(cur);
        }
        if (static_cast<int>(cur.letters.size()) >= max_len) return;
        for (int d = 1; d <= deg_left + 1 && d <= C.max_degree(); ++d)
            for (int g : C.letters_from(at, d)) {
                if (Z && !gen_in(C, g, *Z)) continue;
                cur.letters.push_back(g);
                rec(C.target(g), deg_left - (d - 1));
                cur.letters.pop_back();
            }
    };
    rec(src, degree);
    std::sort(out.begin(), out.end());
    return out;
}

CoalgebraReport verify_cobar_dsquare(const Coalgebra& C, int degree_bound, int word_bound) {
    CoalgebraReport r;
    const int nv = C.complex().num_vertices();
    for (int v = 0; v < nv; ++v)
        for (int d = 0; d <= degree_bound; ++d)
            for (const Word& w : enumerate_words(C, v, -1, d, word_bound)) {
                ++r.checked;
                CobarElem dd = cobar_d(C, cobar_d(C, w));
                if (!dd.empty()) r.failures.push_back("d² ≠ 0 on " + describe(C, w) + ": " + describe(C, dd));
            }
    return r;
}

CoalgebraReport verify_cobar_leibniz(const Coalgebra& C, int degree_bound, int word_bound) {
    // every word of length >= 2 splits as a composite at each cut point
    CoalgebraReport r;
    const int nv = C.complex().num_vertices();
    for (int v = 0; v < nv; ++v)
        for (int d = 0; d <= degree_bound; ++d)
            for (const Word& w : enumerate_words(C, v, -1, d, word_bound))
                for (std::size_t cut = 1; cut < w.letters.size(); ++cut) {
                    ++r.checked;
                    Word a{w.src, C.target(w.letters[cut - 1]), {w.letters.begin(), w.letters.begin() + cut}};
                    Word b{a.tgt, w.tgt, {w.letters.begin() + cut, w.letters.end()}};
                    CobarElem lhs = cobar_d(C, compose(a, b));
                    CobarElem rhs = compose(cobar_d(C, a), CobarElem(b)) +
                                    compose(CobarElem(a), cobar_d(C, b)) * Scalar(sign_of(word_degree(C, a)));
                    if (lhs != rhs) r.failures.push_back("Leibniz fails on " + describe(C, w));
                }
    return r;
}

void cobar_self_check(const Coalgebra& C) {
    const SimplicialComplex& K = C.complex();
    for (int e : K.of_dim(1)) {
        int s = K.vertices(e)[0], t = K.vertices(e)[1];
        int sig = C.simplex_gen(e), chk = C.check(e);
        CobarElem want_x(make_word(C, {sig, chk}));
        want_x.add(identity_word(s), Scalar(-1));
        CobarElem want_y(make_word(C, {chk, sig}), Scalar(-1));
        want_y.add(identity_word(t), Scalar(1));
        if (cobar_d(C, make_word(C, {C.inverted_gen(e, 'x', 2)})) != want_x ||
            cobar_d(C, make_word(C, {C.inverted_gen(e, 'y', 2)})) != want_y)
            throw std::logic_error("cobar self-check failed on edge " + K.describe_simplex(e));
    }
    auto cur = verify_curvature(C, 3);
    if (!cur.ok()) throw std::logic_error("curvature self-check failed: " + cur.failures.front());
}

std::string describe(const Coalgebra& C, const Word& w) {
    if (w.letters.empty()) return "id_" + C.complex().vertex_name(w.src);
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < w.letters.size(); ++i) os << (i ? "|" : "") << C.describe(w.letters[i]);
    os << "}";
    return os.str();
}

std::string describe(const Coalgebra& C, const CobarElem& x) {
    if (x.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : x) {
        os << (first ? "" : " + ") << c.str() << "*" << describe(C, w);
        first = false;
    }
    return os.str();
}

}  // namespace strtop
