#include "isect/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace isect {

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const {
    unsigned da = 0, db = 0;
    for (unsigned e : a) da += e;
    for (unsigned e : b) db += e;
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

IntPoly::IntPoly(int num_vars) : num_vars_(num_vars) {
    if (num_vars < 1) throw std::invalid_argument("poly: need at least one variable");
}

IntPoly IntPoly::constant(int num_vars, const Rat& c) {
    IntPoly p(num_vars);
    p.set_coeff(Monomial(num_vars, 0), c);
    return p;
}

IntPoly IntPoly::variable(int num_vars, int index) {
    if (index < 0 || index >= num_vars)
        throw std::invalid_argument("poly: variable index out of range");
    IntPoly p(num_vars);
    Monomial m(num_vars, 0);
    m[index] = 1;
    p.terms_[m] = 1;
    return p;
}

int IntPoly::degree() const {
    if (terms_.empty()) return -1;
    unsigned d = 0;
    for (unsigned e : terms_.rbegin()->first) d += e;
    return static_cast<int>(d);
}

int IntPoly::degree_in(int var) const {
    if (terms_.empty()) return -1;
    unsigned d = 0;
    for (const auto& [mono, c] : terms_) d = std::max(d, mono[var]);
    return static_cast<int>(d);
}

Rat IntPoly::coeff(const Monomial& mono) const {
    auto it = terms_.find(mono);
    return it == terms_.end() ? Rat(0) : it->second;
}

Rat IntPoly::constant_term() const { return coeff(Monomial(num_vars_, 0)); }

void IntPoly::set_coeff(const Monomial& mono, const Rat& c) {
    if (static_cast<int>(mono.size()) != num_vars_)
        throw std::invalid_argument("poly: monomial arity mismatch");
    Rat r = c;
    r.canonicalize();
    if (r == 0)
        terms_.erase(mono);
    else
        terms_[mono] = r;
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    IntPoly r = *this;
    r += o;
    return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
    if (o.num_vars_ != num_vars_) throw std::invalid_argument("poly: arity mismatch");
    for (const auto& [mono, c] : o.terms_) {
        Rat s = coeff(mono) + c;
        set_coeff(mono, s);
    }
    return *this;
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
    IntPoly r = *this;
    r -= o;
    return r;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
    if (o.num_vars_ != num_vars_) throw std::invalid_argument("poly: arity mismatch");
    for (const auto& [mono, c] : o.terms_) {
        Rat s = coeff(mono) - c;
        set_coeff(mono, s);
    }
    return *this;
}

IntPoly IntPoly::operator-() const {
    IntPoly r(num_vars_);
    for (const auto& [mono, c] : terms_) r.terms_[mono] = -c;
    return r;
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (o.num_vars_ != num_vars_) throw std::invalid_argument("poly: arity mismatch");
    IntPoly r(num_vars_);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            Monomial m(num_vars_);
            for (int i = 0; i < num_vars_; ++i) m[i] = ma[i] + mb[i];
            Rat s = r.coeff(m) + ca * cb;
            r.set_coeff(m, s);
        }
    }
    return r;
}

IntPoly IntPoly::scale(const Rat& c) const {
    IntPoly r(num_vars_);
    if (c == 0) return r;
    for (const auto& [mono, v] : terms_) r.terms_[mono] = v * c;
    return r;
}

IntPoly IntPoly::pow(unsigned e) const {
    IntPoly r = IntPoly::constant(num_vars_, 1);
    IntPoly base = *this;
    while (e) {
        if (e & 1u) r = r * base;
        base = base * base;
        e >>= 1u;
    }
    return r;
}

bool IntPoly::operator==(const IntPoly& o) const {
    return num_vars_ == o.num_vars_ && terms_ == o.terms_;
}

Rat IntPoly::eval(const ZVec& point) const {
    if (static_cast<int>(point.size()) != num_vars_)
        throw std::invalid_argument("poly: evaluation point dimension mismatch");
    // per-variable power tables
    std::vector<std::vector<Int>> pw(num_vars_);
    for (int j = 0; j < num_vars_; ++j) {
        int d = std::max(degree_in(j), 0);
        pw[j].resize(d + 1);
        pw[j][0] = 1;
        for (int e = 1; e <= d; ++e) pw[j][e] = pw[j][e - 1] * point[j];
    }
    Rat acc(0);
    for (const auto& [mono, c] : terms_) {
        Int m(1);
        for (int j = 0; j < num_vars_; ++j)
            if (mono[j]) m *= pw[j][mono[j]];
        acc += c * Rat(m);
    }
    return acc;
}

bool IntPoly::has_integer_coeffs() const {
    for (const auto& [mono, c] : terms_)
        if (c.get_den() != 1) return false;
    return true;
}

// ---------------------------------------------------------------- parser

ParseError::ParseError(const std::string& msg, size_t pos)
    : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}

namespace {

struct Parser {
    const std::string& text;
    const std::vector<std::string>& vars;
    size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool peek(char c) {
        skip_ws();
        return pos < text.size() && text[pos] == c;
    }
    bool accept(char c) {
        if (peek(c)) { ++pos; return true; }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) throw ParseError(std::string("expected '") + c + "'", pos);
    }

    Int read_uint() {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw ParseError("expected number", pos);
        return Int(text.substr(start, pos - start));
    }

    IntPoly rational(bool negative) {
        Int num = read_uint();
        if (negative) num = -num;
        Rat r(num);
        if (accept('/')) {
            Int den = read_uint();
            if (den == 0) throw ParseError("zero denominator", pos);
            r = Rat(num) / Rat(den);
        }
        r.canonicalize();
        return IntPoly::constant(static_cast<int>(vars.size()), r);
    }

    IntPoly base() {
        skip_ws();
        if (pos >= text.size()) throw ParseError("unexpected end of input", pos);
        char c = text[pos];
        if (c == '(') {
            ++pos;
            IntPoly e = expr();
            expect(')');
            return e;
        }
        if (c == '-') {
            ++pos;
            return rational(true);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return rational(false);
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos;
            while (pos < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
                ++pos;
            std::string name = text.substr(start, pos - start);
            for (size_t i = 0; i < vars.size(); ++i)
                if (vars[i] == name)
                    return IntPoly::variable(static_cast<int>(vars.size()), static_cast<int>(i));
            throw ParseError("unknown variable '" + name + "'", start);
        }
        throw ParseError("expected number, variable or '('", pos);
    }

    IntPoly factor() {
        IntPoly b = base();
        if (accept('^')) {
            skip_ws();
            if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
                throw ParseError("exponent must be a nonnegative integer", pos);
            Int e = read_uint();
            if (!e.fits_uint_p()) throw ParseError("exponent too large", pos);
            return b.pow(static_cast<unsigned>(e.get_ui()));
        }
        return b;
    }

    IntPoly term() {
        IntPoly f = factor();
        for (;;) {
            if (accept('*')) {
                f = f * factor();
            } else if (accept('/')) {
                Int den = read_uint();
                if (den == 0) throw ParseError("zero denominator", pos);
                f = f.scale(Rat(1) / Rat(den));
            } else {
                break;
            }
        }
        return f;
    }

    IntPoly expr() {
        IntPoly t = term();
        for (;;) {
            if (accept('+'))
                t += term();
            else if (peek('-')) {
                ++pos;
                t -= term();
            } else
                break;
        }
        return t;
    }
};

}  // namespace

IntPoly parse_poly(const std::string& text, const std::vector<std::string>& vars) {
    if (vars.empty()) throw std::invalid_argument("parse: variable list is empty");
    Parser p{text, vars};
    IntPoly result = p.expr();
    p.skip_ws();
    if (p.pos != text.size()) throw ParseError("trailing input", p.pos);
    return result;
}

namespace {

std::string rat_str(const Rat& r) {
    return r.get_str();  // "a/b" or "a"
}

std::string mono_str(const Monomial& mono, const std::vector<std::string>& vars) {
    std::string s;
    for (size_t j = 0; j < mono.size(); ++j) {
        if (!mono[j]) continue;
        if (!s.empty()) s += "*";
        s += vars[j];
        if (mono[j] > 1) s += "^" + std::to_string(mono[j]);
    }
    return s;
}

}  // namespace

std::string render_poly(const IntPoly& p, const std::vector<std::string>& vars) {
    if (static_cast<int>(vars.size()) != p.num_vars())
        throw std::invalid_argument("render: variable list arity mismatch");
    if (p.is_zero()) return "0";
    std::string out;
    // highest term first
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const Rat& c = it->second;
        std::string m = mono_str(it->first, vars);
        bool neg = c < 0;
        Rat a = neg ? Rat(-c) : c;
        std::string piece;
        if (m.empty())
            piece = rat_str(a);
        else if (a == 1)
            piece = m;
        else
            piece = rat_str(a) + "*" + m;
        if (out.empty())
            out = neg ? (m.empty() ? "-" + piece : "-" + rat_str(a) + "*" + m) : piece;
        else
            out += (neg ? " - " : " + ") + piece;
    }
    return out;
}

IntPoly hat(const IntPoly& p) {
    return p - IntPoly::constant(p.num_vars(), p.constant_term());
}

IntPoly affine_substitute(const IntPoly& p, const ZMat& matrix, const ZVec& offset) {
    const int m = p.num_vars();
    if (static_cast<int>(matrix.size()) != m || static_cast<int>(offset.size()) != m)
        throw std::invalid_argument("substitute: dimension mismatch");
    ZMat h = hnf_column_basis(matrix);
    if (h.empty() || static_cast<int>(h[0].size()) != m)
        throw std::invalid_argument("substitute: singular matrix");

    // linear replacement polynomial for each original variable
    std::vector<IntPoly> subs;
    subs.reserve(m);
    for (int i = 0; i < m; ++i) {
        IntPoly s = IntPoly::constant(m, Rat(offset[i]));
        for (int j = 0; j < m; ++j)
            if (matrix[i][j] != 0)
                s += IntPoly::variable(m, j).scale(Rat(matrix[i][j]));
        subs.push_back(std::move(s));
    }
    // power cache per variable
    std::vector<std::vector<IntPoly>> pw(m);
    for (int j = 0; j < m; ++j) {
        int d = std::max(p.degree_in(j), 0);
        pw[j].push_back(IntPoly::constant(m, 1));
        for (int e = 1; e <= d; ++e) pw[j].push_back(pw[j].back() * subs[j]);
    }
    IntPoly r(m);
    for (const auto& [mono, c] : p.terms()) {
        IntPoly t = IntPoly::constant(m, c);
        for (int j = 0; j < m; ++j)
            if (mono[j]) t = t * pw[j][mono[j]];
        r += t;
    }
    return r;
}

Int denominator_scale(const std::vector<IntPoly>& family) {
    if (family.empty()) throw std::invalid_argument("denominator_scale: empty family");
    Int d(1);
    for (const IntPoly& p : family)
        for (const auto& [mono, c] : p.terms()) d = lcm(d, Int(c.get_den()));
    return d;
}

bool is_integral(const IntPoly& p) {
    const int m = p.num_vars();
    std::vector<int> deg(m);
    for (int j = 0; j < m; ++j) deg[j] = std::max(p.degree_in(j), 0);
    ZVec point(m, Int(0));
    // odometer over the degree grid
    for (;;) {
        Rat v = p.eval(point);
        if (v.get_den() != 1) return false;
        int j = 0;
        while (j < m) {
            point[j] += 1;
            if (point[j] <= deg[j]) break;
            point[j] = 0;
            ++j;
        }
        if (j == m) return true;
    }
}

bool is_integral(const IntPoly& p, const AffineLattice& domain) {
    if (domain.dim() != p.num_vars())
        throw std::invalid_argument("is_integral: lattice dimension mismatch");
    return is_integral(affine_substitute(p, domain.basis(), domain.offset()));
}

// ------------------------------------------------------------ univariate

std::vector<Rat> univariate_coeffs(const IntPoly& p) {
    if (p.num_vars() != 1) throw std::invalid_argument("univariate view of multivariate poly");
    std::vector<Rat> c(std::max(p.degree(), 0) + 1, Rat(0));
    for (const auto& [mono, v] : p.terms()) c[mono[0]] = v;
    return c;
}

IntPoly from_univariate_coeffs(const std::vector<Rat>& coeffs) {
    IntPoly p(1);
    for (size_t i = 0; i < coeffs.size(); ++i)
        p.set_coeff(Monomial{static_cast<unsigned>(i)}, coeffs[i]);
    return p;
}

IntPoly derivative_1var(const IntPoly& p) {
    auto c = univariate_coeffs(p);
    std::vector<Rat> d;
    for (size_t i = 1; i < c.size(); ++i) d.push_back(c[i] * Rat(static_cast<long>(i)));
    return from_univariate_coeffs(d);
}

std::pair<IntPoly, IntPoly> divmod_1var(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw std::invalid_argument("division by zero polynomial");
    auto rc = univariate_coeffs(a);
    auto bc = univariate_coeffs(b);
    int db = static_cast<int>(bc.size()) - 1;
    std::vector<Rat> q(std::max(static_cast<int>(rc.size()) - db, 0), Rat(0));
    for (int i = static_cast<int>(rc.size()) - 1; i >= db; --i) {
        if (rc[i] == 0) continue;
        Rat f = rc[i] / bc[db];
        q[i - db] = f;
        for (int j = 0; j <= db; ++j) rc[i - db + j] -= f * bc[j];
    }
    return {from_univariate_coeffs(q), from_univariate_coeffs(rc)};
}

IntPoly divexact_1var(const IntPoly& a, const IntPoly& b) {
    auto [q, r] = divmod_1var(a, b);
    if (!r.is_zero()) throw std::invalid_argument("division is not exact");
    return q;
}

namespace {

// extended Euclid for a pair in Q[n]: returns (g, s, t) with s*a + t*b = g
std::tuple<IntPoly, IntPoly, IntPoly> xgcd_pair(const IntPoly& a, const IntPoly& b) {
    IntPoly r0 = a, r1 = b;
    IntPoly s0 = IntPoly::constant(1, 1), s1 = IntPoly::constant(1, 0);
    IntPoly t0 = IntPoly::constant(1, 0), t1 = IntPoly::constant(1, 1);
    while (!r1.is_zero()) {
        auto [q, r] = divmod_1var(r0, r1);
        IntPoly s2 = s0 - q * s1, t2 = t0 - q * t1;
        r0 = r1; r1 = r;
        s0 = s1; s1 = s2;
        t0 = t1; t1 = t2;
    }
    return {r0, s0, t0};
}

}  // namespace

BezoutResult gcd_bezout_1var(const std::vector<IntPoly>& family) {
    if (family.empty()) throw std::invalid_argument("gcd: empty family");
    for (const IntPoly& p : family)
        if (p.num_vars() != 1) throw std::invalid_argument("gcd: univariate only");

    IntPoly g(1);
    std::vector<IntPoly> cof(family.size(), IntPoly::constant(1, 0));
    bool any = false;
    for (size_t i = 0; i < family.size(); ++i) {
        if (family[i].is_zero()) continue;
        if (!any) {
            g = family[i];
            cof[i] = IntPoly::constant(1, 1);
            any = true;
            continue;
        }
        auto [g2, s, t] = xgcd_pair(g, family[i]);
        for (IntPoly& h : cof) h = s * h;
        cof[i] += t;
        g = g2;
    }
    if (!any) throw std::invalid_argument("gcd: all polynomials are zero");

    // normalize monic and make cofactors integral with one positive scale
    Rat lc = g.terms().rbegin()->second;
    IntPoly monic = g.scale(Rat(1) / lc);
    Int L(1);
    for (const IntPoly& h : cof)
        for (const auto& [mono, c] : h.terms()) L = lcm(L, Int(c.get_den()));
    L = lcm(L, Int(lc.get_den()));
    Rat lam = Rat(L) * (lc < 0 ? Rat(-1) : Rat(1));
    Rat drat = lam * lc;
    if (drat.get_den() != 1 || drat <= 0)
        throw std::logic_error("gcd: scale normalization failed");
    Int d(drat.get_num());

    BezoutResult out;
    out.gcd = monic;
    out.scale = d;
    out.cofactors.reserve(cof.size());
    IntPoly check = monic.scale(Rat(-d));
    for (size_t i = 0; i < cof.size(); ++i) {
        IntPoly h = cof[i].scale(lam);
        if (!h.has_integer_coeffs()) throw std::logic_error("gcd: cofactor not integral");
        check += h * family[i];
        out.cofactors.push_back(std::move(h));
    }
    if (!check.is_zero()) throw std::logic_error("gcd: Bezout identity failed symbolic check");
    return out;
}

int RationalVectorPoly::num_vars() const {
    if (components.empty()) throw std::invalid_argument("vector poly: empty");
    return components[0].num_vars();
}

ZVec RationalVectorPoly::eval_int(const ZVec& point) const {
    ZVec r;
    r.reserve(components.size());
    for (const IntPoly& p : components) {
        Rat v = p.eval(point);
        if (v.get_den() != 1)
            throw std::domain_error("vector poly: non-integer value at lattice point");
        r.push_back(Int(v.get_num()));
    }
    return r;
}

}  // namespace isect
