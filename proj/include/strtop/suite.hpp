#pragma once

#include <functional>

#include "strtop/string_ops.hpp"

namespace strtop {

// One evaluated identity: how many generators (or pairs) were checked, how
// many failed, the first few failures, and the bounds used.
struct CheckResult {
    std::string name;
    long checked = 0;
    long failed = 0;
    std::vector<std::string> examples;
    std::vector<std::pair<std::string, int>> bounds;
    std::string skipped;  // why the check could not run; not a failure
    bool ok() const { return failed == 0; }
    void fail(std::string what);
};

CheckResult from_report(std::string name, const CoalgebraReport& r, std::vector<std::pair<std::string, int>> bounds);

// every necklace of degree <= max_deg with at most max_len letters
std::vector<Necklace> necklaces_upto(const Coalgebra& C, int max_deg, int max_len);

CheckResult check_curvature(const Coalgebra& C, int deg);
CheckResult check_coassociativity(const Coalgebra& C, int deg);
CheckResult check_counit(const Coalgebra& C, int deg);
CheckResult check_eta_d(const Coalgebra& C, int deg);
CheckResult check_cobar_identities(const Coalgebra& C);  // d{x²}, d{y²} verbatim
CheckResult check_cobar_dsquare(const Coalgebra& C, int deg, int len);
CheckResult check_cobar_leibniz(const Coalgebra& C, int deg, int len);
CheckResult check_cohoch_dsquare(const Coalgebra& C, int deg, int len);
CheckResult check_support_monotone(const Coalgebra& C, int deg, int len);
// ∂ι = ιδ, Supp ι(σ) ⊆ σ̄, and the closed forms in dimensions 0 and 1
CheckResult check_constant_loops(const ConstantLoops& iota);

CheckResult check_scan_failure(const Coalgebra& C, int deg, int len);
// pairs with |x| + |y| <= deg_sum and at most len letters between them
CheckResult check_leibniz(const StringOps& ops, int deg_sum, int len);
CheckResult check_product_support(const StringOps& ops, int deg_sum, int len);
// the exact failure identity on necklaces within bounds
CheckResult check_coproduct_failure(const StringOps& ops, int deg, int len);
// each defect, and both parts of its right-hand side, lie in the 1-local ideal
CheckResult check_coproduct_locality(const StringOps& ops, int deg, int len);

}  // namespace strtop
