#pragma once

#include "json.hpp"
#include "strtop/suite.hpp"

namespace strtop::io {

using nlohmann::json;

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json scalar_json(const Scalar& c);
Scalar scalar_from(const Ring& R, const json& j);

// {"vertices": [names], "simplices": [[i, j, ...], ...]}, maximal simplices
json complex_json(const SimplicialComplex& K);
SimplicialComplex complex_from(const json& j);

// {"simplex": [...]} or {"inv": {"edge": [i, j], "flavor": "x", "k": 3}}
json gen_json(const Coalgebra& C, int g);
int gen_from(const Coalgebra& C, const json& j);

json word_json(const Coalgebra& C, const Word& w);
Word word_from(const Coalgebra& C, const json& j);
// {"marked": gen, "word": [gen, ...]}
json necklace_json(const Coalgebra& C, const Necklace& x);
Necklace necklace_from(const Coalgebra& C, const json& j);
json cohoch_json(const Coalgebra& C, const CoHochElem& x);
json cohoch_pair_json(const Coalgebra& C, const CoHochPair& x);

// {"n": n, "ring": "rat", "entries": [{"a": [...], "b": [...], "c": coeff}]}
json pairing_json(const SimplicialComplex& K, const LocalPairing& th);
LocalPairing pairing_from(const SimplicialComplex& K, const json& j);

json alpha_json(const HomotopyPairing& A);
HomotopyPairing alpha_from(CoalgebraPtr C, const json& j);
json hom_json(const HomElement& phi);

json check_json(const CheckResult& r);
json ranks_json(const std::vector<RankStep>& ranks);

// a file path, or the text itself when it starts with '{'
json read_json(const std::string& path_or_text);

}  // namespace strtop::io
