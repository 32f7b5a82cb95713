#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "io.hpp"

using namespace strtop;
using io::json;

namespace {

enum ExitCode { kOk = 0, kVerification = 1, kUsage = 2, kExhausted = 3 };

struct Config {
    std::string input;
    std::string coeff = "rat";
    int subdivide = 0;
    int fineness = 1;
    int degree = 5;
    int words = 5;
    unsigned seed = 0;
    std::string out;
    std::string alpha_file, pairing_file, x, y;
    std::optional<unsigned> beta_seed;
};

struct Outcome {
    int code = kOk;
    json body;
};

ComplexPtr load_complex(const Config& cfg) {
    const auto names = bundled::names();
    ComplexPtr K;
    if (std::find(names.begin(), names.end(), cfg.input) != names.end())
        K = std::make_shared<const SimplicialComplex>(bundled::by_name(cfg.input));
    else
        K = std::make_shared<const SimplicialComplex>(io::complex_from(io::read_json(cfg.input)));
    if (cfg.subdivide > 0) K = std::make_shared<const SimplicialComplex>(barycentric_subdivide(K, cfg.subdivide));
    return K;
}

json counts_json(const SimplicialComplex& K) {
    return {{"simplices_by_dim", K.counts_by_dim()}, {"euler", K.euler_characteristic()}, {"dim", K.dim()}};
}

// everything downstream of the complex, computed on first use
class Pipeline {
public:
    explicit Pipeline(const Config& cfg) : cfg_(cfg), ring_(Ring::parse(cfg.coeff)), K_(load_complex(cfg)) {}

    const Config& cfg() const { return cfg_; }
    const Ring& ring() const { return ring_; }
    ComplexPtr K() const { return K_; }

    // one level above the degree bound, for β
    CoalgebraPtr C() {
        if (!C_) C_ = invert_edges(K_, cfg_.degree + 1);
        return C_;
    }

    SolverConfig solver() const {
        SolverConfig s;
        s.ring = ring_;
        s.max_len = cfg_.words;
        return s;
    }

    AlphaBounds bounds(unsigned seed) const {
        AlphaBounds b;
        b.max_degree = cfg_.degree;
        b.solver = solver();
        b.seed = seed;
        return b;
    }

    const Chain<int>& fundamental_chain() {
        if (!o_) o_ = default_fundamental_chain(*K_, ring_);
        return *o_;
    }

    const LocalPairing& theta() {
        if (!theta_) {
            if (!cfg_.pairing_file.empty())
                theta_ = io::pairing_from(*K_, io::read_json(cfg_.pairing_file));
            else if (!cfg_.alpha_file.empty())
                theta_ = alpha().theta;
            else
                theta_ = find_local_pairing(K_, fundamental_chain(), K_->dim(), ring_);
        }
        return *theta_;
    }

    const HomotopyPairing& alpha() {
        if (!alpha_) {
            if (!cfg_.alpha_file.empty()) {
                alpha_ = io::alpha_from(C(), io::read_json(cfg_.alpha_file));
            } else {
                alpha_ = construct_alpha(LiftedPairing(C(), theta()), bounds(cfg_.seed));
                built_here_ = true;
            }
        }
        return *alpha_;
    }
    bool alpha_built_here() const { return built_here_; }

    const ConstantLoops& iota() {
        if (!iota_) iota_.emplace(C());
        return *iota_;
    }

private:
    const Config& cfg_;
    Ring ring_;
    ComplexPtr K_;
    CoalgebraPtr C_;
    std::optional<Chain<int>> o_;
    std::optional<LocalPairing> theta_;
    std::optional<HomotopyPairing> alpha_;
    std::optional<ConstantLoops> iota_;
    bool built_here_ = false;
};

Outcome from_checks(json head, const std::vector<CheckResult>& checks) {
    json list = json::array();
    bool ok = true;
    for (const auto& c : checks) {
        list.push_back(io::check_json(c));
        ok = ok && c.ok();
    }
    head["checks"] = list;
    head["ok"] = ok;
    return {ok ? kOk : kVerification, head};
}

// ---- fineness ----

json fineness_json(const FinenessCertificate& F, const SimplicialComplex& K, bool& ok) {
    json j{{"m", F.m()}, {"simplices", K.num_simplices()}};
    if (K.num_simplices() <= 10000) {
        const auto r = F.verify_exhaustive();
        ok = r.ok;
        json witness = json::array();
        for (int s : r.witness) witness.push_back(K.vertices(s));
        j.update({{"mode", r.exhaustive ? "exhaustive" : "partial"},
                  {"ok", r.ok},
                  {"subcomplexes", r.subcomplexes},
                  {"distinct_stars", r.distinct_stars},
                  {"monotone_pairs", r.monotone_pairs},
                  {"failure", r.failure},
                  {"witness", witness}});
    } else {
        // too large to enumerate: every closed simplex (diameter <= 1)
        long checked = 0;
        ok = true;
        std::string failure;
        for (int s = 0; s < K.num_simplices() && ok; ++s) {
            ++checked;
            try {
                const auto A = Subcomplex::closure_of(K, {s});
                if (!F.Z(A).Z.contains(A)) ok = false, failure = "Z_A misses A at " + K.describe_simplex(s);
            } catch (const NotFine& e) {
                ok = false;
                failure = e.what();
            }
        }
        j.update({{"mode", "closed simplices only"}, {"ok", ok}, {"subcomplexes", checked}, {"failure", failure}});
    }
    return j;
}

Outcome run_fineness(Pipeline& P) {
    FinenessCertificate F(P.K(), P.cfg().fineness);
    bool ok = false;
    json j = fineness_json(F, *P.K(), ok);
    return {ok ? kOk : kVerification, j};
}

// ---- structure checks ----

Outcome run_coalgebra_check(Pipeline& P) {
    const Coalgebra& C = *P.C();
    const int D = P.cfg().degree;
    json gens = json::array();
    for (int d = 0; d <= D; ++d) gens.push_back(C.gens_of_degree(d).size());
    return from_checks({{"generators_by_degree", gens}},
                       {check_curvature(C, D), check_coassociativity(C, D), check_counit(C, D), check_eta_d(C, D)});
}

Outcome run_cobar_check(Pipeline& P) {
    const Coalgebra& C = *P.C();
    const int D = P.cfg().degree, L = P.cfg().words;
    return from_checks(json::object(), {check_cobar_identities(C), check_cobar_dsquare(C, D, L), check_cobar_leibniz(C, D, L)});
}

CheckResult check_retraction(Pipeline& P, int deg, int len) {
    CheckResult r{"local_retraction", 0, 0, {}, {{"degree", deg}, {"words", len}}};
    const Coalgebra& C = *P.C();
    FinenessCertificate cert(P.K(), 1);
    LocalRetraction g(P.iota(), cert, P.ring().is_field() ? P.ring() : Ring::rationals());
    try {
        for (int d = 0; d <= deg; ++d) {
            const auto xs = local_basis(C, d, len, 1);
            r.checked += static_cast<long>(xs.size());
            for (const Necklace& x : g.verify(xs)) r.fail("g∂ ≠ ∂g or support escapes Z on " + describe(C, x));
        }
    } catch (const NotFine& e) {
        r.checked = 0;
        r.failed = 0;
        r.examples.clear();
        r.skipped = std::string("no 1-fineness certificate: ") + e.what();
    }
    return r;
}

std::vector<CheckResult> cohoch_checks(Pipeline& P) {
    const Coalgebra& C = *P.C();
    const int D = P.cfg().degree, L = P.cfg().words;
    return {check_cohoch_dsquare(C, D, L), check_support_monotone(C, D, L), check_constant_loops(P.iota()),
            check_retraction(P, std::min(D, 3), std::min(L, 3))};
}

Outcome run_cohoch_check(Pipeline& P) { return from_checks(json::object(), cohoch_checks(P)); }

// ---- pairing ----

json pairing_checks(Pipeline& P, bool& ok) {
    const SimplicialComplex& K = *P.K();
    const LocalPairing& th = P.theta();
    const auto nd = verify_nondegenerate(K, th, P.fundamental_chain());
    const bool local = pairing_is_local(K, th), cocycle = pairing_cocycle_defects(K, th).empty();
    ok = local && cocycle && nd.nondegenerate;
    return {{"local", local}, {"cocycle", cocycle}, {"nondegenerate", nd.nondegenerate}};
}

json duality_json(Pipeline& P, bool& ok) {
    const Ring R = P.ring().is_field() ? P.ring() : Ring::rationals();
    const auto d = verify_controlled_duality(P.K(), P.fundamental_chain(), R, false);
    CapMaps M(P.K(), P.fundamental_chain());
    const auto h = M.find_local_homotopy(R);
    const bool homotopy = M.verify_homotopy(h).ok;
    ok = d.chain_map && d.local && d.quasi_isomorphism && homotopy;
    return {{"flexner_chain_map", d.chain_map},
            {"flexner_local", d.local},
            {"quasi_isomorphism", d.quasi_isomorphism},
            {"cone_homology", d.cone_homology},
            {"local_homotopy", homotopy},
            {"homotopy_ranks", io::ranks_json(h.ranks)}};
}

Outcome run_find_pairing(Pipeline& P) {
    bool ok1 = false, ok2 = false;
    json j = io::pairing_json(*P.K(), P.theta());
    j["checks"] = pairing_checks(P, ok1);
    j["duality"] = duality_json(P, ok2);
    return {ok1 && ok2 ? kOk : kVerification, j};
}

// ---- α ----

Outcome run_lift_alpha(Pipeline& P) { return {kOk, io::alpha_json(P.alpha())}; }

CheckResult alpha_check(Pipeline& P) {
    const HomotopyPairing& A = P.alpha();
    const AlphaReport r = verify_alpha(A, LiftedPairing(P.C(), A.theta));
    CheckResult c{"alpha", r.pairs_checked, 0, {}, {{"degree", A.bounds.max_degree}, {"words", A.bounds.solver.max_len}}};
    for (const auto& f : r.failures) c.fail(f);
    if (!r.ok() && c.failed == 0) c.fail("α conditions fail");
    return c;
}

Outcome run_verify_alpha(Pipeline& P) {
    const HomotopyPairing& A = P.alpha();
    const AlphaReport r = verify_alpha(A, LiftedPairing(P.C(), A.theta));
    json j{{"closed", r.closed},
           {"local", r.local},
           {"supported", r.supported},
           {"lifts", r.lifts},
           {"pairs_checked", r.pairs_checked},
           {"failures", json(std::vector<std::string>(r.failures.begin(), r.failures.begin() + std::min<std::size_t>(5, r.failures.size())))}};
    // construct_alpha throws unless the right-hand side is closed at every pair
    if (P.alpha_built_here()) j["rhs_closed_pairs"] = A.solves.size();
    bool ok = r.ok();
    if (P.cfg().beta_seed) {
        const HomotopyPairing A2 = construct_alpha(LiftedPairing(P.C(), A.theta), P.bounds(*P.cfg().beta_seed));
        const HomElement beta = homotopy_between(A, A2, P.solver());
        const auto bad = verify_homotopy_between(beta, A, A2);
        long differ = 0;
        for (const auto& [k, v] : A.alpha.table())
            if (A2.alpha(k.first, k.second) != v) ++differ;
        j["homotopy"] = {{"seed", *P.cfg().beta_seed}, {"entries_differing", differ}, {"beta_entries", beta.table().size()}, {"failures", bad.size()}};
        ok = ok && bad.empty();
    }
    j["ok"] = ok;
    return {ok ? kOk : kVerification, j};
}

// ---- operations ----

int product_degree_sum(Pipeline& P) { return std::min(P.alpha().n() + 3, P.cfg().degree); }
int coproduct_degree(Pipeline& P) { return P.cfg().degree - 1; }

Outcome run_loop_product(Pipeline& P) {
    StringOps ops(P.alpha().alpha);
    const Coalgebra& C = ops.coalgebra();
    if (P.cfg().x.empty() != P.cfg().y.empty()) throw CLI::ValidationError("--x and --y go together");
    if (!P.cfg().x.empty()) {
        const Necklace x = io::necklace_from(C, io::read_json(P.cfg().x)), y = io::necklace_from(C, io::read_json(P.cfg().y));
        const CoHochElem mu = ops.product(x, y);
        const bool leibniz = leibniz_defect(ops, x, y).empty();
        std::set<int> allowed = support_vertices(C, x);
        for (int v : support_vertices(C, y)) allowed.insert(v);
        const auto s = support_vertices(C, mu);
        const bool support = std::includes(allowed.begin(), allowed.end(), s.begin(), s.end());
        json j{{"x", io::necklace_json(C, x)},
               {"y", io::necklace_json(C, y)},
               {"degree", necklace_degree(C, x) + necklace_degree(C, y) - ops.n()},
               {"product", io::cohoch_json(C, mu)},
               {"leibniz_ok", leibniz},
               {"support_ok", support}};
        return {leibniz && support ? kOk : kVerification, j};
    }
    const int ds = product_degree_sum(P), L = P.cfg().words;
    return from_checks({{"n", ops.n()}}, {check_leibniz(ops, ds, L), check_product_support(ops, ds, L)});
}

Outcome run_loop_coproduct(Pipeline& P) {
    StringOps ops(P.alpha().alpha);
    const Coalgebra& C = ops.coalgebra();
    if (!P.cfg().x.empty()) {
        const Necklace x = io::necklace_from(C, io::read_json(P.cfg().x));
        const CoHochPair lam = ops.coproduct(x), defect = ops.coproduct_defect(x);
        const bool identity = defect == ops.coproduct_failure(x);
        const bool local = in_local_ideal(C, defect, 1);
        json j{{"x", io::necklace_json(C, x)},
               {"degree", necklace_degree(C, x) + 1 - ops.n()},
               {"coproduct", io::cohoch_pair_json(C, lam)},
               {"defect", io::cohoch_pair_json(C, defect)},
               {"failure_identity_ok", identity},
               {"defect_1_local", local}};
        return {identity && local ? kOk : kVerification, j};
    }
    const int d = coproduct_degree(P), L = P.cfg().words;
    return from_checks({{"n", ops.n()}}, {check_coproduct_failure(ops, d, L), check_coproduct_locality(ops, d, L)});
}

std::vector<CheckResult> identity_checks(Pipeline& P) {
    const Coalgebra& C = *P.C();
    const int D = P.cfg().degree, L = P.cfg().words;
    std::vector<CheckResult> all{check_curvature(C, D),        check_coassociativity(C, D), check_counit(C, D),
                                 check_eta_d(C, D),            check_cobar_identities(C),   check_cobar_dsquare(C, D, L),
                                 check_cobar_leibniz(C, D, L), check_scan_failure(C, D, L)};
    for (auto& c : cohoch_checks(P)) all.push_back(std::move(c));
    {
        bool ok = false;
        const json pc = pairing_checks(P, ok);
        CheckResult c{"pairing", 3, 0, {}, {}};
        for (const auto& [k, v] : pc.items())
            if (!v.get<bool>()) c.fail(k + " fails");
        all.push_back(c);
    }
    all.push_back(alpha_check(P));
    StringOps ops(P.alpha().alpha);
    const int ds = product_degree_sum(P);
    all.push_back(check_leibniz(ops, ds, L));
    all.push_back(check_product_support(ops, ds, L));
    all.push_back(check_coproduct_failure(ops, coproduct_degree(P), L));
    all.push_back(check_coproduct_locality(ops, coproduct_degree(P), L));
    return all;
}

Outcome run_verify_identities(Pipeline& P) {
    return from_checks({{"complex", counts_json(*P.K())}, {"n", P.theta().n}}, identity_checks(P));
}

Outcome run_report(Pipeline& P) {
    const SimplicialComplex& K = *P.K();
    json j{{"complex", counts_json(K)}, {"coeff", P.ring().name()}};
    const Ring R = P.ring().is_field() ? P.ring() : Ring::rationals();
    j["complex"]["betti"] = betti_numbers(K, R);
    bool fine = false;
    j["fineness"] = fineness_json(FinenessCertificate(P.K(), P.cfg().fineness), K, fine);
    bool ok1 = false, ok2 = false;
    j["pairing"] = {{"n", P.theta().n}, {"entries", P.theta().table.size()}, {"checks", pairing_checks(P, ok1)}, {"duality", duality_json(P, ok2)}};
    const HomotopyPairing& A = P.alpha();
    int maxw = 0;
    for (const auto& s : A.solves) maxw = std::max(maxw, s.word_bound);
    j["alpha"] = {{"entries", A.alpha.table().size()}, {"solves", A.solves.size()}, {"max_word_bound", maxw}, {"seed", A.bounds.seed}, {"degree", A.bounds.max_degree}};
    Outcome o = from_checks(j, identity_checks(P));
    const bool ok = o.body["ok"].get<bool>() && fine && ok1 && ok2;
    o.body["ok"] = ok;
    o.code = ok ? kOk : kVerification;
    return o;
}

void emit(const Config& cfg, const json& j) {
    const std::string text = j.dump(2) + "\n";
    if (cfg.out.empty() || cfg.out == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(cfg.out);
    if (!f) throw io::ParseError("cannot write " + cfg.out);
    f << text;
}

json error_json(const std::string& kind, const std::string& message) { return {{"error", kind}, {"message", message}}; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact string topology on simplicial complexes"};
    app.require_subcommand(1);
    Config cfg;

    using Runner = Outcome (*)(Pipeline&);
    const std::vector<std::tuple<std::string, std::string, Runner>> commands{
        {"build", "load a complex (bundled name or JSON file) and print it", [](Pipeline& P) { return Outcome{kOk, io::complex_json(*P.K())}; }},
        {"subdivide", "iterated barycentric subdivision (default k = 1)", [](Pipeline& P) { return Outcome{kOk, io::complex_json(*P.K())}; }},
        {"fineness", "m-fineness certificate, exhaustive up to 10^4 simplices", run_fineness},
        {"coalgebra-check", "curvature, coassociativity, counit and η∘d on C(X̃)", run_coalgebra_check},
        {"cobar-check", "cobar d² = 0, Leibniz, and the x²/y² identities", run_cobar_check},
        {"cohoch-check", "coHochschild ∂² = 0, support, constant loops, local retraction", run_cohoch_check},
        {"find-pairing", "nondegenerate local pairing for the default fundamental chain", run_find_pairing},
        {"lift-alpha", "construct a homotopy pairing α", run_lift_alpha},
        {"verify-alpha", "check dα = 0 and the support conditions; --beta-seed adds a homotopy", run_verify_alpha},
        {"loop-product", "μ_α on --x --y, or the Leibniz and support sweep", run_loop_product},
        {"loop-coproduct", "λ_α on --x, or the failure identity and locality sweep", run_loop_coproduct},
        {"verify-identities", "the full identity suite", run_verify_identities},
        {"report", "pipeline summary plus the identity suite", run_report},
    };

    Runner chosen = nullptr;
    CLI::App* chosen_app = nullptr;
    for (const auto& [name, help, run] : commands) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("complex", cfg.input, "bundled name (" + [] {
            std::string s;
            for (const auto& n : bundled::names()) s += (s.empty() ? "" : ", ") + n;
            return s;
        }() + ") or complex JSON file")->required();
        sub->add_option("--coeff", cfg.coeff, "int, rat or modP")->capture_default_str();
        sub->add_option("--subdivide", cfg.subdivide, "barycentric subdivisions")->check(CLI::NonNegativeNumber);
        sub->add_option("--fineness", cfg.fineness, "m")->check(CLI::PositiveNumber)->capture_default_str();
        sub->add_option("--degree", cfg.degree, "degree bound D")->check(CLI::PositiveNumber)->capture_default_str();
        sub->add_option("--words", cfg.words, "word bound L")->check(CLI::PositiveNumber)->capture_default_str();
        sub->add_option("--seed", cfg.seed, "tie-breaking seed, 0 canonical")->capture_default_str();
        sub->add_option("--out", cfg.out, "output file, default stdout");
        sub->add_option("--pairing", cfg.pairing_file, "pairing JSON to use instead of searching");
        sub->add_option("--alpha", cfg.alpha_file, "α JSON to use instead of constructing");
        if (name == "loop-product" || name == "loop-coproduct") sub->add_option("--x", cfg.x, "necklace JSON or file");
        if (name == "loop-product") sub->add_option("--y", cfg.y, "necklace JSON or file");
        if (name == "verify-alpha") sub->add_option("--beta-seed", cfg.beta_seed, "second seed for the homotopy β");
        sub->callback([&chosen, &chosen_app, sub, run = run] {
            chosen = run;
            chosen_app = sub;
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        std::cout << error_json("UsageError", e.what()).dump(2) << "\n";
        return kUsage;
    }
    if (chosen_app->get_name() == "subdivide" && chosen_app->count("--subdivide") == 0) cfg.subdivide = 1;

    auto fail = [&](int code, const std::string& kind, const std::string& msg, json extra = json::object()) {
        json j = error_json(kind, msg);
        j.update(extra);
        try {
            emit(cfg, j);
        } catch (...) {
            std::cout << j.dump(2) << "\n";
        }
        return code;
    };

    try {
        Pipeline P(cfg);
        Outcome o = chosen(P);
        emit(cfg, o.body);
        return o.code;
    } catch (const io::ParseError& e) {
        return fail(kUsage, "ParseError", e.what());
    } catch (const CLI::Error& e) {
        return fail(kUsage, "UsageError", e.what());
    } catch (const NonFieldCoefficients& e) {
        return fail(kUsage, "NonFieldCoefficients", e.what());
    } catch (const std::invalid_argument& e) {
        return fail(kUsage, "UsageError", e.what());
    } catch (const Infeasible& e) {
        return fail(kVerification, "Infeasible", e.what());
    } catch (const NotFine& e) {
        return fail(kVerification, "NotFine", e.what());
    } catch (const NotCocycle& e) {
        return fail(kVerification, "NotCocycle", e.what());
    } catch (const NotClosed& e) {
        return fail(kVerification, "NotClosed", e.what());
    } catch (const RHSNotClosed& e) {
        return fail(kVerification, "RHSNotClosed", e.what());
    } catch (const SolverExhausted& e) {
        return fail(kExhausted, "SolverExhausted", e.what(), {{"word_bound", e.word_bound}, {"ranks", io::ranks_json(e.ranks)}});
    } catch (const AlphaBoundsExceeded& e) {
        return fail(kExhausted, "AlphaBoundsExceeded", e.what());
    } catch (const OutOfBounds& e) {
        return fail(kExhausted, "OutOfBounds", e.what());
    } catch (const DisconnectedSupport& e) {
        return fail(kVerification, "DisconnectedSupport", e.what());
    }
}
