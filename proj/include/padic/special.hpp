#pragma once

#include <string>

#include "padic/context.hpp"
#include "padic/registry.hpp"

namespace padic {

// Eq. (1.3) and Kilbourn's mod-p^3 strengthening; a(p) always comes from the
// eta expansion, never a hardcoded table.
CaseResult ahlgren_ono_check(const PrimeContext& ctx, int strength);

// One of the explicit CM congruences of the eq-12.* / eq-2.26 family.
CaseResult cm_congruence_check(const std::string& id, const PrimeContext& ctx);

// Theorem 13.1.
CaseResult dflst_check(const PrimeContext& ctx);

} // namespace padic
