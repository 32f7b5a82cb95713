#include "io.hpp"

#include <fstream>
#include <sstream>

namespace strtop::io {

namespace {

int as_int(const json& j, const char* what) {
    if (!j.is_number_integer()) throw ParseError(std::string("expected an integer for ") + what);
    return j.get<int>();
}

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
    return j.at(key);
}

std::vector<int> int_list(const json& j, const char* what) {
    if (!j.is_array()) throw ParseError(std::string("expected an array for ") + what);
    std::vector<int> out;
    for (const auto& x : j) out.push_back(as_int(x, what));
    return out;
}

json vertex_list(const SimplicialComplex& K, int s) { return K.vertices(s); }

int simplex_of(const SimplicialComplex& K, std::vector<int> vs) {
    std::sort(vs.begin(), vs.end());
    const int s = K.find(vs);
    if (s < 0) throw ParseError("no such simplex: " + json(vs).dump());
    return s;
}

}  // namespace

json scalar_json(const Scalar& c) {
    if (!c.is_integral()) return c.str();
    try {
        return c.to_int();
    } catch (const std::range_error&) {
        return c.str();
    }
}

Scalar scalar_from(const Ring& R, const json& j) {
    if (j.is_number_integer()) return Scalar(R, j.get<long long>());
    if (j.is_string()) {
        try {
            return Scalar::parse(R, j.get<std::string>());
        } catch (const std::exception& e) {
            throw ParseError(e.what());
        }
    }
    throw ParseError("coefficient must be an integer or a string");
}

json complex_json(const SimplicialComplex& K) {
    json simplices = json::array();
    for (int s : K.maximal_simplices()) simplices.push_back(vertex_list(K, s));
    return {{"vertices", K.vertex_names()}, {"simplices", simplices}};
}

SimplicialComplex complex_from(const json& j) {
    const json& vs = field(j, "vertices");
    if (!vs.is_array() || vs.empty()) throw ParseError("'vertices' must be a nonempty array");
    std::vector<std::string> names;
    for (const auto& v : vs) names.push_back(v.is_string() ? v.get<std::string>() : v.dump());
    std::vector<std::vector<int>> simplices;
    for (const auto& s : field(j, "simplices")) {
        auto list = int_list(s, "a simplex");
        if (list.empty()) throw ParseError("empty simplex");
        for (int v : list)
            if (v < 0 || v >= static_cast<int>(names.size())) throw ParseError("vertex index out of range");
        std::sort(list.begin(), list.end());
        if (std::adjacent_find(list.begin(), list.end()) != list.end()) throw ParseError("repeated vertex in a simplex");
        simplices.push_back(list);
    }
    // isolated vertices still count
    for (int v = 0; v < static_cast<int>(names.size()); ++v) simplices.push_back({v});
    return SimplicialComplex::from_simplices(std::move(names), simplices);
}

json gen_json(const Coalgebra& C, int g) {
    const GenInfo& gi = C.info(g);
    const SimplicialComplex& K = C.complex();
    if (gi.kind == GenKind::Simplex) return {{"simplex", vertex_list(K, gi.base)}};
    return {{"inv", {{"edge", vertex_list(K, gi.base)}, {"flavor", gi.kind == GenKind::InvX ? "x" : "y"}, {"k", gi.level}}}};
}

int gen_from(const Coalgebra& C, const json& j) {
    const SimplicialComplex& K = C.complex();
    if (j.is_object() && j.contains("simplex")) return C.simplex_gen(simplex_of(K, int_list(j.at("simplex"), "simplex")));
    const json& inv = field(j, "inv");
    const int e = simplex_of(K, int_list(field(inv, "edge"), "edge"));
    if (K.dim(e) != 1) throw ParseError("'edge' must be a 1-simplex");
    const json& fl = field(inv, "flavor");
    if (!fl.is_string() || (fl != "x" && fl != "y")) throw ParseError("flavor must be \"x\" or \"y\"");
    const int k = as_int(field(inv, "k"), "k");
    if (k < 1 || k > std::max(1, C.max_level())) throw ParseError("level k out of range");
    if (!C.inverted()) throw ParseError("inverted generator in a coalgebra without inversion");
    return C.inverted_gen(e, fl.get<std::string>()[0], k);
}

json word_json(const Coalgebra& C, const Word& w) {
    json letters = json::array();
    for (int g : w.letters) letters.push_back(gen_json(C, g));
    return {{"src", w.src}, {"tgt", w.tgt}, {"letters", letters}};
}

Word word_from(const Coalgebra& C, const json& j) {
    std::vector<int> letters;
    for (const auto& g : field(j, "letters")) letters.push_back(gen_from(C, g));
    if (letters.empty()) {
        const int v = as_int(field(j, "src"), "src");
        if (v < 0 || v >= C.complex().num_vertices() || as_int(field(j, "tgt"), "tgt") != v) throw ParseError("bad identity word");
        return identity_word(v);
    }
    try {
        return make_word(C, letters);
    } catch (const EndpointMismatch& e) {
        throw ParseError(e.what());
    }
}

json necklace_json(const Coalgebra& C, const Necklace& x) {
    json word = json::array();
    for (int g : x.letters) word.push_back(gen_json(C, g));
    return {{"marked", gen_json(C, x.marked)}, {"word", word}};
}

Necklace necklace_from(const Coalgebra& C, const json& j) {
    const int m = gen_from(C, field(j, "marked"));
    std::vector<int> letters;
    const json& w = field(j, "word");
    if (!w.is_array()) throw ParseError("'word' must be an array");
    for (const auto& g : w) letters.push_back(gen_from(C, g));
    for (int g : letters)
        if (C.degree(g) < 1) throw ParseError("word letters must have degree >= 1");
    try {
        return make_necklace(C, m, std::move(letters));
    } catch (const std::exception& e) {
        throw ParseError(e.what());
    }
}

json cohoch_json(const Coalgebra& C, const CoHochElem& x) {
    json terms = json::array();
    for (const auto& [n, c] : x) terms.push_back({{"necklace", necklace_json(C, n)}, {"c", scalar_json(c)}});
    return terms;
}

json cohoch_pair_json(const Coalgebra& C, const CoHochPair& x) {
    json terms = json::array();
    for (const auto& [p, c] : x)
        terms.push_back({{"left", necklace_json(C, p.a)}, {"right", necklace_json(C, p.b)}, {"c", scalar_json(c)}});
    return terms;
}

json pairing_json(const SimplicialComplex& K, const LocalPairing& th) {
    json entries = json::array();
    for (const auto& [p, c] : th.table)
        if (!c.is_zero()) entries.push_back({{"a", vertex_list(K, p.first)}, {"b", vertex_list(K, p.second)}, {"c", scalar_json(c)}});
    return {{"n", th.n}, {"ring", th.ring.name()}, {"entries", entries}};
}

LocalPairing pairing_from(const SimplicialComplex& K, const json& j) {
    LocalPairing th;
    th.n = as_int(field(j, "n"), "n");
    if (j.contains("ring")) {
        try {
            th.ring = Ring::parse(j.at("ring").get<std::string>());
        } catch (const std::exception& e) {
            throw ParseError(e.what());
        }
    }
    for (const auto& e : field(j, "entries")) {
        const int a = simplex_of(K, int_list(field(e, "a"), "a"));
        const int b = simplex_of(K, int_list(field(e, "b"), "b"));
        if (K.dim(a) + K.dim(b) != th.n) throw ParseError("pairing entry of the wrong total degree");
        th.table[{a, b}] = scalar_from(th.ring, field(e, "c"));
    }
    return th;
}

json hom_json(const HomElement& phi) {
    const Coalgebra& C = phi.coalgebra();
    json entries = json::array();
    for (const auto& [k, v] : phi.table()) {
        json value = json::array();
        for (const auto& [p, c] : v) value.push_back({{"a", word_json(C, p.a)}, {"b", word_json(C, p.b)}, {"c", scalar_json(c)}});
        entries.push_back({{"x", gen_json(C, k.first)}, {"y", gen_json(C, k.second)}, {"value", value}});
    }
    return {{"degree", phi.degree()}, {"max_input_degree", phi.max_input_degree()}, {"entries", entries}};
}

json alpha_json(const HomotopyPairing& A) {
    const Coalgebra& C = A.alpha.coalgebra();
    json solves = json::array();
    for (const auto& s : A.solves)
        solves.push_back({{"x", gen_json(C, s.x)}, {"y", gen_json(C, s.y)}, {"word_bound", s.word_bound}, {"unknowns", s.unknowns}, {"rank", s.rank}});
    json out = hom_json(A.alpha);
    out["n"] = A.n();
    out["provenance"] = {
        {"theta", pairing_json(C.complex(), A.theta)},
        {"complex", complex_json(C.complex())},
        {"bounds",
         {{"degree", A.bounds.max_degree},
          {"words", A.bounds.solver.max_len},
          {"start_len", A.bounds.solver.start_len},
          {"step", A.bounds.solver.step},
          {"coeff", A.bounds.solver.ring.name()}}},
        {"seed", A.bounds.seed},
        {"solves", solves},
    };
    return out;
}

HomotopyPairing alpha_from(CoalgebraPtr C, const json& j) {
    HomotopyPairing A;
    const json& prov = field(j, "provenance");
    A.theta = pairing_from(C->complex(), field(prov, "theta"));
    const json& b = field(prov, "bounds");
    A.bounds.max_degree = as_int(field(b, "degree"), "degree");
    A.bounds.solver.max_len = as_int(field(b, "words"), "words");
    A.bounds.solver.start_len = as_int(field(b, "start_len"), "start_len");
    A.bounds.solver.step = as_int(field(b, "step"), "step");
    try {
        A.bounds.solver.ring = Ring::parse(field(b, "coeff").get<std::string>());
    } catch (const std::exception& e) {
        throw ParseError(e.what());
    }
    A.bounds.seed = static_cast<unsigned>(as_int(field(prov, "seed"), "seed"));
    if (as_int(field(j, "n"), "n") != A.theta.n || as_int(field(j, "degree"), "degree") != A.theta.n)
        throw ParseError("α degree does not match its pairing");
    A.alpha = HomElement(C, A.theta.n, as_int(field(j, "max_input_degree"), "max_input_degree"));
    const Ring& R = A.bounds.solver.ring;
    for (const auto& e : field(j, "entries")) {
        const int x = gen_from(*C, field(e, "x")), y = gen_from(*C, field(e, "y"));
        TensorElem v;
        for (const auto& t : field(e, "value"))
            v.add(WordPair{word_from(*C, field(t, "a")), word_from(*C, field(t, "b"))}, scalar_from(R, field(t, "c")));
        A.alpha.set(x, y, std::move(v));
    }
    return A;
}

json check_json(const CheckResult& r) {
    json bounds = json::object();
    for (const auto& [k, v] : r.bounds) bounds[k] = v;
    json j{{"name", r.name}, {"checked", r.checked}, {"failed", r.failed}, {"ok", r.ok()}, {"bounds", bounds}, {"examples", r.examples}};
    if (!r.skipped.empty()) j["skipped"] = r.skipped;
    return j;
}

json ranks_json(const std::vector<RankStep>& ranks) {
    json out = json::array();
    for (const auto& s : ranks)
        out.push_back({{"word_bound", s.word_bound}, {"unknowns", s.unknowns}, {"equations", s.equations}, {"rank", s.rank}, {"consistent", s.consistent}});
    return out;
}

json read_json(const std::string& src) {
    std::string text;
    if (!src.empty() && src.front() == '{') {
        text = src;
    } else {
        std::ifstream in(src);
        if (!in) throw ParseError("cannot read " + src);
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
}

}  // namespace strtop::io
