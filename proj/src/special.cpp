#include "padic/special.hpp"

namespace padic {

CaseResult ahlgren_ono_check(const PrimeContext& ctx, int strength) {
    if (strength != 2 && strength != 3) raise(Err::BadArgument, "strength must be 2 or 3");
    return check_case(strength == 3 ? "eq-1.3-kilbourn" : "eq-1.3-ahlgren-ono", ctx, {});
}

CaseResult cm_congruence_check(const std::string& id, const PrimeContext& ctx) {
    const TheoremStatement& t = find_theorem(id);
    if (t.arity != 0) raise(Err::BadArgument, id + " is not a fixed special-value congruence");
    return check_case(id, ctx, {});
}

CaseResult dflst_check(const PrimeContext& ctx) { return check_case("thm-13.1-dflst", ctx, {}); }

} // namespace padic
