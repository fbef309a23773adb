#include "isect/certificate.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "isect/ntutil.hpp"

using nlohmann::json;

namespace isect {

namespace {

const std::map<CertKind, std::string> kKindNames = {
    {CertKind::WitnessTable, "WitnessTable"},
    {CertKind::HenselProof, "HenselProof"},
    {CertKind::QuadResidueProof, "QuadResidueProof"},
    {CertKind::BezoutReduction, "BezoutReduction"},
    {CertKind::CounterexampleModulus, "CounterexampleModulus"},
    {CertKind::BoundedOnly, "BoundedOnly"},
};

VerifyOutcome fail(const std::string& why) { return {false, why}; }
VerifyOutcome pass() { return {true, "ok"}; }

Int get_int(const json& j, const char* key) {
    return Int(j.at(key).get<std::string>());
}

ZVec get_vec(const json& j) {
    ZVec v;
    for (const auto& e : j) v.emplace_back(e.get<std::string>());
    return v;
}

std::vector<IntPoly> parse_family(const Certificate& c) {
    std::vector<IntPoly> out;
    out.reserve(c.polys.size());
    for (const auto& t : c.polys) out.push_back(parse_poly(t, c.vars));
    return out;
}

bool divides_value(const IntPoly& p, const ZVec& n, const Int& k) {
    Rat v = p.eval(n);
    if (v.get_den() != 1) return false;
    return mod_pos(Int(v.get_num()), k) == 0;
}

}  // namespace

std::string cert_kind_name(CertKind k) { return kKindNames.at(k); }

CertKind cert_kind_from_name(const std::string& name) {
    for (const auto& [k, n] : kKindNames)
        if (n == name) return k;
    throw std::invalid_argument("unknown certificate kind: " + name);
}

json certificate_to_json(const Certificate& c) {
    json j;
    j["schema"] = "isect-certificate-v1";
    j["kind"] = cert_kind_name(c.kind);
    j["claim"] = c.claim;
    j["vars"] = c.vars;
    j["polys"] = c.polys;
    j["payload"] = c.payload;
    return j;
}

Certificate certificate_from_json(const json& j) {
    if (j.at("schema").get<std::string>() != "isect-certificate-v1")
        throw std::invalid_argument("unsupported certificate schema");
    Certificate c;
    c.kind = cert_kind_from_name(j.at("kind").get<std::string>());
    c.claim = j.at("claim").get<std::string>();
    c.vars = j.at("vars").get<std::vector<std::string>>();
    c.polys = j.at("polys").get<std::vector<std::string>>();
    c.payload = j.at("payload");
    return c;
}

VerifyOutcome check_hensel_entry(const IntPoly& p, const Int& q, const Int& a, int t,
                                 const Int& scale) {
    if (!is_prime(q)) return fail("hensel: modulus " + q.get_str() + " is not prime");
    if (t < 0) return fail("hensel: negative derivative valuation bound");
    if (scale < 1) return fail("hensel: scale must be positive");
    IntPoly ps = p.scale(Rat(scale));
    if (!ps.has_integer_coeffs())
        return fail("hensel: scaled polynomial has non-integer coefficients");
    Rat pv = ps.eval({a});
    Int value(pv.get_num());
    Int need = 1;
    for (int i = 0; i < 2 * t + 1; ++i) need *= q;
    if (value != 0 && mod_pos(value, need) != 0)
        return fail("hensel: p(a) not divisible by q^(2t+1)");
    Rat dv = derivative_1var(ps).eval({a});
    Int deriv(dv.get_num());
    if (deriv == 0) return fail("hensel: derivative vanishes at witness");
    if (valuation(deriv, q) > t) return fail("hensel: derivative valuation exceeds t");
    return pass();
}

namespace {

VerifyOutcome verify_witness_table(const Certificate& c, const std::vector<IntPoly>& family) {
    if (c.payload.contains("root")) {
        ZVec root = get_vec(c.payload.at("root"));
        for (size_t i = 0; i < family.size(); ++i)
            if (family[i].eval(root) != 0)
                return fail("witness: polynomial " + std::to_string(i) + " does not vanish at root");
        return pass();
    }
    if (c.payload.contains("modulus")) {
        Int k = get_int(c.payload, "modulus");
        if (k < 1) return fail("witness: modulus must be positive");
        ZVec w = get_vec(c.payload.at("witness"));
        for (size_t i = 0; i < family.size(); ++i)
            if (!divides_value(family[i], w, k))
                return fail("witness: polynomial " + std::to_string(i) + " not divisible at witness");
        return pass();
    }
    return fail("witness: payload lacks both root and modulus");
}

VerifyOutcome verify_hensel_entries(const IntPoly& p, const json& entries,
                                    std::vector<Int>* seen) {
    for (const auto& e : entries) {
        Int q = get_int(e, "q");
        Int a = get_int(e, "a");
        int t = e.at("t").get<int>();
        Int scale = e.contains("scale") ? get_int(e, "scale") : Int(1);
        auto r = check_hensel_entry(p, q, a, t, scale);
        if (!r.ok) return r;
        if (seen) seen->push_back(q);
    }
    return pass();
}

VerifyOutcome verify_quad_residue(const Certificate& c, const std::vector<IntPoly>& family) {
    if (family.size() != 1) return fail("quadres: expects a single polynomial");
    const IntPoly& p = family[0];
    if (p.num_vars() != 1) return fail("quadres: univariate only");
    Int a1 = get_int(c.payload, "a1");
    Int a2 = get_int(c.payload, "a2");
    Int w = get_int(c.payload, "sqrt_witness");
    if (!is_prime(a1) || !is_prime(a2)) return fail("quadres: a1, a2 must be prime");
    if (a1 == a2) return fail("quadres: a1, a2 must be distinct");
    if (mod_pos(a1, 4) != 1 || mod_pos(a2, 4) != 1)
        return fail("quadres: a1, a2 must be 1 mod 4");
    if (mod_pos(w * w - a1, a2) != 0)
        return fail("quadres: witness is not a square root of a1 mod a2");
    // pattern check: p == (n^2-a1)(n^2-a2)(n^2-a1*a2)
    IntPoly n2 = IntPoly::variable(1, 0).pow(2);
    IntPoly pattern = (n2 - IntPoly::constant(1, Rat(a1))) *
                      (n2 - IntPoly::constant(1, Rat(a2))) *
                      (n2 - IntPoly::constant(1, Rat(a1 * a2)));
    if (!(p == pattern)) return fail("quadres: polynomial does not match the pattern");
    // explicit q-adic roots for q = 2, a1, a2; every other prime is covered
    // because (a1|q)(a2|q)(a1*a2|q) = ((a1|q)(a2|q))^2 = 1, so one of the
    // three quadratic factors has a unit square root mod q that lifts.
    std::vector<Int> seen;
    auto r = verify_hensel_entries(p, c.payload.at("hensel"), &seen);
    if (!r.ok) return r;
    for (const Int& q : {Int(2), a1, a2})
        if (std::find(seen.begin(), seen.end(), q) == seen.end())
            return fail("quadres: missing Hensel entry for q = " + q.get_str());
    return pass();
}

VerifyOutcome verify_hensel_proof(const Certificate& c, const std::vector<IntPoly>& family) {
    if (family.size() != 1) return fail("hensel proof: expects a single polynomial");
    const IntPoly& p = family[0];
    Int bound = get_int(c.payload, "prime_bound");
    std::vector<Int> seen;
    auto r = verify_hensel_entries(p, c.payload.at("entries"), &seen);
    if (!r.ok) return r;
    for (long q : primes_upto(bound.get_si()))
        if (std::find(seen.begin(), seen.end(), Int(q)) == seen.end())
            return fail("hensel proof: no entry for prime " + std::to_string(q));
    if (c.payload.contains("factor")) {
        IntPoly f = parse_poly(c.payload.at("factor").get<std::string>(), c.vars);
        IntPoly quot = parse_poly(c.payload.at("quotient").get<std::string>(), c.vars);
        if (!(f * quot == p)) return fail("hensel proof: factor identity fails");
        Certificate sub = certificate_from_json(c.payload.at("factor_certificate"));
        if (sub.kind != CertKind::WitnessTable && sub.kind != CertKind::QuadResidueProof)
            return fail("hensel proof: factor certificate does not cover all primes");
        if (sub.kind == CertKind::WitnessTable && !sub.payload.contains("root"))
            return fail("hensel proof: factor witness must be a global root");
        auto sr = verify_certificate(sub);
        if (!sr.ok) return fail("hensel proof: factor certificate invalid: " + sr.detail);
        if (sub.polys.size() != 1 ||
            !(parse_poly(sub.polys[0], sub.vars) == f))
            return fail("hensel proof: factor certificate is for a different polynomial");
    }
    return pass();
}

VerifyOutcome verify_bezout(const Certificate& c, const std::vector<IntPoly>& family) {
    IntPoly g = parse_poly(c.payload.at("gcd").get<std::string>(), c.vars);
    Int d = get_int(c.payload, "scale");
    if (d < 1) return fail("bezout: scale must be a positive integer");
    const json& cof = c.payload.at("cofactors");
    const json& quo = c.payload.at("quotients");
    if (cof.size() != family.size() || quo.size() != family.size())
        return fail("bezout: cofactor/quotient arity mismatch");
    IntPoly acc = g.scale(Rat(-d));
    for (size_t i = 0; i < family.size(); ++i) {
        IntPoly h = parse_poly(cof[i].get<std::string>(), c.vars);
        if (!h.has_integer_coeffs()) return fail("bezout: cofactor has non-integer coefficients");
        acc += h * family[i];
        IntPoly q = parse_poly(quo[i].get<std::string>(), c.vars);
        if (!(g * q == family[i]))
            return fail("bezout: gcd does not divide polynomial " + std::to_string(i));
    }
    if (!acc.is_zero()) return fail("bezout: identity sum h_i p_i = d*g fails");
    return pass();
}

VerifyOutcome verify_counterexample(const Certificate& c, const std::vector<IntPoly>& family,
                                    long long work_budget) {
    Int k = get_int(c.payload, "modulus");
    if (k < 1) return fail("counterexample: modulus must be positive");
    if (family.empty()) return fail("counterexample: empty family");
    const int m = family[0].num_vars();
    Int d = denominator_scale(family);
    Int period = d * k;
    // values of an integral polynomial mod k are periodic with period d*k,
    // so this finite enumeration is a complete re-verification
    Int cells = 1;
    for (int i = 0; i < m; ++i) cells *= period;
    if (cells > Int(static_cast<long>(work_budget)))
        return fail("counterexample: verification budget exceeded");
    ZVec n(m, Int(0));
    for (;;) {
        bool all = true;
        for (const IntPoly& p : family)
            if (!divides_value(p, n, k)) { all = false; break; }
        if (all) return fail("counterexample: witness exists at a residue");
        int j = 0;
        while (j < m) {
            n[j] += 1;
            if (n[j] < period) break;
            n[j] = 0;
            ++j;
        }
        if (j == m) break;
    }
    return pass();
}

VerifyOutcome verify_bounded(const Certificate& c, const std::vector<IntPoly>& family) {
    Int bound = get_int(c.payload, "modulus_bound");
    std::vector<Int> covered;
    for (const auto& e : c.payload.at("witnesses")) {
        Int q = get_int(e, "modulus");
        ZVec w = get_vec(e.at("witness"));
        for (size_t i = 0; i < family.size(); ++i)
            if (!divides_value(family[i], w, q))
                return fail("bounded: witness for modulus " + q.get_str() + " fails");
        covered.push_back(q);
    }
    for (const Int& q : prime_powers_upto(bound))
        if (std::find(covered.begin(), covered.end(), q) == covered.end())
            return fail("bounded: no witness for prime power " + q.get_str());
    if (c.payload.contains("hensel_entries")) {
        if (family.size() != 1) return fail("bounded: hensel entries expect one polynomial");
        auto r = verify_hensel_entries(family[0], c.payload.at("hensel_entries"), nullptr);
        if (!r.ok) return r;
    }
    return pass();
}

}  // namespace

VerifyOutcome verify_certificate(const Certificate& c, long long work_budget) {
    try {
        std::vector<IntPoly> family = parse_family(c);
        if (family.empty()) return fail("certificate carries no polynomials");
        switch (c.kind) {
            case CertKind::WitnessTable: return verify_witness_table(c, family);
            case CertKind::HenselProof: return verify_hensel_proof(c, family);
            case CertKind::QuadResidueProof: return verify_quad_residue(c, family);
            case CertKind::BezoutReduction: return verify_bezout(c, family);
            case CertKind::CounterexampleModulus:
                return verify_counterexample(c, family, work_budget);
            case CertKind::BoundedOnly: return verify_bounded(c, family);
        }
        return fail("unknown certificate kind");
    } catch (const std::exception& e) {
        return fail(std::string("malformed certificate: ") + e.what());
    }
}

}  // namespace isect
