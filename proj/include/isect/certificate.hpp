#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "isect/poly.hpp"

namespace isect {

enum class CertKind {
    WitnessTable,
    HenselProof,
    QuadResidueProof,
    BezoutReduction,
    CounterexampleModulus,
    BoundedOnly,
};

std::string cert_kind_name(CertKind k);
CertKind cert_kind_from_name(const std::string& name);

/// Machine-checkable evidence for an intersectivity verdict. The payload
/// holds kind-specific exact data with integers as decimal strings; the
/// checker below re-derives every claim from polynomial evaluation and
/// modular arithmetic only, never from the search that produced it.
struct Certificate {
    CertKind kind;
    std::string claim;
    std::vector<std::string> vars;
    std::vector<std::string> polys;  // canonical renderings
    nlohmann::json payload;
};

nlohmann::json certificate_to_json(const Certificate& c);
Certificate certificate_from_json(const nlohmann::json& j);

struct VerifyOutcome {
    bool ok;
    std::string detail;
};

/// Standalone checker. `work_budget` caps the residue enumeration used to
/// re-check CounterexampleModulus payloads.
VerifyOutcome verify_certificate(const Certificate& c, long long work_budget = 100000000);

/// Shared Hensel-entry check on scale*p (which must have integer
/// coefficients): q prime, v_q(p(a)) >= 2t+1, v_q(p'(a)) <= t.  Those two
/// bounds certify a root of scale*p in the q-adic integers, which is also
/// a root of p.
VerifyOutcome check_hensel_entry(const IntPoly& p, const Int& q, const Int& a, int t,
                                 const Int& scale = Int(1));

}  // namespace isect
