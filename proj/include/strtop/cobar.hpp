#pragma once

#include <compare>
#include <functional>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "strtop/chain.hpp"
#include "strtop/coalgebra.hpp"

namespace strtop {

struct EndpointMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Open necklace [c1|...|cN] from src to tgt; the empty word is id_src.
struct Word {
    int src = 0;
    int tgt = 0;
    std::vector<int> letters;

    auto operator<=>(const Word&) const = default;
    bool operator==(const Word&) const = default;
    bool is_identity() const { return letters.empty(); }
};

using CobarElem = Chain<Word>;

Word identity_word(int v);
Word make_word(const Coalgebra& C, std::vector<int> letters);  // checks composability
int word_degree(const Coalgebra& C, const Word& w);
int letters_degree(const Coalgebra& C, const std::vector<int>& letters, std::size_t from, std::size_t to);

CobarElem cobar_d(const Coalgebra& C, const Word& w);
CobarElem cobar_d(const Coalgebra& C, const CobarElem& x);

Word compose(const Word& a, const Word& b);
CobarElem compose(const CobarElem& a, const CobarElem& b);

// vertex set of the union of closed base simplices
std::set<int> support_vertices(const Coalgebra& C, const Word& w);
void add_support(const Coalgebra& C, int g, std::set<int>& out);
bool gen_in(const Coalgebra& C, int g, const Subcomplex& Z);
bool word_in(const Coalgebra& C, const Word& w, const Subcomplex& Z);

// BFS path in the 1-skeleton of Z, smallest neighbour first (seed 0) or in a
// seeded shuffled order; backwards edges use σ̌. Coefficient +1.
Word path_representative(const Coalgebra& C, int v, int w, const Subcomplex& Z, unsigned seed = 0);

// Words from src (to tgt, or anywhere when tgt < 0) of the given degree with
// at most max_len letters, all letters supported in Z (when given).
std::vector<Word> enumerate_words(const Coalgebra& C, int src, int tgt, int degree, int max_len,
                                  const Subcomplex* Z = nullptr);

CoalgebraReport verify_cobar_dsquare(const Coalgebra& C, int degree_bound, int word_bound);
CoalgebraReport verify_cobar_leibniz(const Coalgebra& C, int degree_bound, int word_bound);
// d{x²} = {σ|σ̌} − id_s and d{y²} = −{σ̌|σ} + id_t on every edge; throws on failure
void cobar_self_check(const Coalgebra& C);

std::string describe(const Coalgebra& C, const Word& w);
std::string describe(const Coalgebra& C, const CobarElem& x);

}  // namespace strtop
