#include "hecke/qseries.hpp"

#include <algorithm>
#include <sstream>

namespace hecke {

namespace {

std::vector<long> divisors(long n) {
    std::vector<long> d;
    for (long i = 1; i * i <= n; ++i) {
        if (n % i == 0) {
            d.push_back(i);
            if (i != n / i) d.push_back(n / i);
        }
    }
    std::sort(d.begin(), d.end());
    return d;
}

void phi_add(std::map<long, long>& phi, long d, long e) {
    if (e == 0) return;
    auto it = phi.find(d);
    if (it == phi.end()) {
        phi.emplace(d, e);
    } else {
        it->second += e;
        if (it->second == 0) phi.erase(it);
    }
}

// polynomial helpers over BigInt, little-endian coefficients
std::vector<BigInt> poly_div(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
    std::vector<BigInt> r = a;
    std::vector<BigInt> q(a.size() - b.size() + 1, 0);
    for (long i = static_cast<long>(r.size()) - 1; i >= static_cast<long>(b.size()) - 1; --i) {
        BigInt c = r[i] / b.back();
        q[i - (b.size() - 1)] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i - (b.size() - 1) + j] -= c * b[j];
    }
    return q;
}

}  // namespace

int mobius(long n) {
    int result = 1;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            result = -result;
        }
    }
    if (n > 1) result = -result;
    return result;
}

const std::vector<BigInt>& cyclotomic_coeffs(long d) {
    static std::map<long, std::vector<BigInt>> cache;
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;
    // Phi_d = (x^d - 1) / prod_{e | d, e < d} Phi_e
    std::vector<BigInt> num(d + 1, 0);
    num[0] = -1;
    num[d] = 1;
    for (long e : divisors(d)) {
        if (e == d) continue;
        num = poly_div(num, cyclotomic_coeffs(e));
    }
    return cache.emplace(d, std::move(num)).first->second;
}

bool q_part_equal(const CycloFactored& a, const CycloFactored& b) { return a.phi == b.phi; }

CycloFactored binomial_factor(int sign, long e) {
    if (e < 1) throw std::domain_error("binomial_factor: exponent must be >= 1");
    if (sign != 1 && sign != -1) throw std::domain_error("binomial_factor: sign must be +-1");
    CycloFactored f;
    if (sign == -1) {
        // 1 - v^e = -(v^e - 1) = - prod_{d | e} Phi_d(v)
        f.coeff = -1;
        for (long d : divisors(e)) phi_add(f.phi, d, 1);
    } else {
        // 1 + v^e = (v^{2e} - 1)/(v^e - 1) = prod_{d | 2e, d ∤ e} Phi_d(v)
        for (long d : divisors(2 * e))
            if (e % d != 0) phi_add(f.phi, d, 1);
    }
    return f;
}

CycloFactored mul(const CycloFactored& a, const CycloFactored& b) {
    CycloFactored f = a;
    f.coeff *= b.coeff;
    f.vexp += b.vexp;
    for (auto& [d, e] : b.phi) phi_add(f.phi, d, e);
    return f;
}

CycloFactored inverse(const CycloFactored& a) {
    CycloFactored f;
    f.coeff = Rational(1) / a.coeff;
    f.vexp = -a.vexp;
    for (auto& [d, e] : a.phi) f.phi.emplace(d, -e);
    return f;
}

CycloFactored power(const CycloFactored& a, long k) {
    CycloFactored f;
    if (k == 0) return f;
    f.vexp = a.vexp * k;
    bool neg = k < 0;
    long kk = neg ? -k : k;
    Rational c = 1;
    for (long i = 0; i < kk; ++i) c *= a.coeff;
    f.coeff = neg ? Rational(1) / c : c;
    for (auto& [d, e] : a.phi) f.phi.emplace(d, e * k);
    return f;
}

namespace {
Rational rational_pow(const Rational& base, long k) {
    if (k == 0) return 1;
    Rational b = k > 0 ? base : Rational(1) / base;
    long kk = k > 0 ? k : -k;
    Rational r = 1;
    while (kk) {
        if (kk & 1) r *= b;
        b *= b;
        kk >>= 1;
    }
    return r;
}
}  // namespace

Rational evaluate(const CycloFactored& f, const Rational& v0) {
    if (v0 == 0) throw std::domain_error("evaluate: pole/zero at v0 = 0");
    Rational r = f.coeff * rational_pow(v0, f.vexp);
    for (auto& [d, e] : f.phi) {
        const auto& c = cyclotomic_coeffs(d);
        Rational val = 0;
        for (auto it = c.rbegin(); it != c.rend(); ++it) val = val * v0 + Rational(*it);
        if (val == 0) throw std::domain_error("evaluate: pole/zero at v0 (root of Phi_" +
                                              std::to_string(d) + ")");
        r *= rational_pow(val, e);
    }
    return r;
}

long cyclq_exponent(const CycloFactored& f, long d) {
    if (d < 1) throw std::domain_error("cyclq_exponent: d must be >= 1");
    auto get = [&](long k) {
        auto it = f.phi.find(k);
        return it == f.phi.end() ? 0L : it->second;
    };
    if (d % 2 == 0) return get(2 * d);
    long lo = get(d), hi = get(2 * d);
    if (lo != hi)
        throw std::domain_error("cyclq_exponent: not q-rational at d = " + std::to_string(d));
    return lo;
}

// ---------------------------------------------------------------------------
// MultiplicityFn

int MultiplicityFn::at(Q4 x) const {
    auto it = m_.find(x);
    return it == m_.end() ? 0 : it->second;
}

void MultiplicityFn::add(Q4 x, int v) {
    if (v == 0) return;
    auto it = m_.find(x);
    if (it == m_.end()) {
        m_.emplace(x, v);
    } else {
        it->second += v;
        if (it->second == 0) m_.erase(it);
    }
}

void MultiplicityFn::set(Q4 x, int v) {
    if (v == 0)
        m_.erase(x);
    else
        m_[x] = v;
}

Q4 MultiplicityFn::max_support() const {
    if (m_.empty()) throw std::domain_error("max_support of empty function");
    return m_.rbegin()->first;
}

MultiplicityFn MultiplicityFn::operator+(const MultiplicityFn& o) const {
    MultiplicityFn r = *this;
    r += o;
    return r;
}

MultiplicityFn& MultiplicityFn::operator+=(const MultiplicityFn& o) {
    for (auto& [x, v] : o.m_) add(x, v);
    return *this;
}

MultiplicityFn MultiplicityFn::operator-(const MultiplicityFn& o) const {
    MultiplicityFn r = *this;
    for (auto& [x, v] : o.m_) r.add(x, -v);
    return r;
}

MultiplicityFn MultiplicityFn::operator*(int k) const {
    MultiplicityFn r;
    if (k == 0) return r;
    for (auto& [x, v] : m_) r.m_.emplace(x, v * k);
    return r;
}

bool MultiplicityFn::is_even_function() const {
    for (auto& [x, v] : m_)
        if (at(-x) != v) return false;
    return true;
}

std::string MultiplicityFn::str() const {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (auto& [x, v] : m_) {
        if (!first) os << ", ";
        first = false;
        os << x.str() << ": " << v;
    }
    os << "}";
    return os.str();
}

MultiplicityFn convolve(const MultiplicityFn& a, const MultiplicityFn& b) {
    MultiplicityFn r;
    for (auto& [x, u] : a.entries())
        for (auto& [y, v] : b.entries()) r.add(x + y, u * v);
    return r;
}

MultiplicityFn translate(const MultiplicityFn& m, Q4 x) {
    MultiplicityFn r;
    for (auto& [y, v] : m.entries()) r.add(y + x, v);
    return r;
}

MultiplicityFn delta_op(const MultiplicityFn& m, Q4 y) {
    return m * 2 - translate(m, y) - translate(m, -y);
}

MultiplicityFn dirac(Q4 x, int v) {
    MultiplicityFn r;
    r.add(x, v);
    return r;
}

MultiplicityFn s_window(long p) {
    MultiplicityFn r;
    for (long k = -p; k <= p; ++k) r.add(Q4(k), ((p - std::labs(k)) % 2 == 0) ? 1 : -1);
    return r;
}

// ---------------------------------------------------------------------------
// FactorLedger

void FactorLedger::push(int sign, long e, long exp) {
    if (exp == 0) return;
    if (e == 0) {
        if (sign == -1) throw std::domain_error("push: vanishing binomial recorded");
        // (1 + v^0) = 2
        coeff *= rational_pow(Rational(2), exp);
        return;
    }
    if (e < 0) {
        // 1 + s v^{-e} = s v^{-e} (1 + s v^{e})
        if (sign == -1) coeff *= rational_pow(Rational(-1), exp);
        vexp += e * exp;
        e = -e;
    }
    auto key = std::make_pair(sign, e);
    auto it = factors.find(key);
    if (it == factors.end()) {
        factors.emplace(key, exp);
    } else {
        it->second += exp;
        if (it->second == 0) factors.erase(it);
    }
}

void split_even(const MultiplicityFn& mult, MultiplicityFn& even_out,
                MultiplicityFn& odd_minus_out) {
    for (auto& [x, w] : mult.entries()) {
        // (1 - q^x): peel (1 + q^{x/2^i}) while the exponent is an even integer
        Q4 y = x;
        while (y.is_integer() && y.to_integer() % 2 == 0) {
            Q4 h = Q4::from_quarters(y.quarters() / 2);
            even_out.add(h, w);
            y = h;
        }
        odd_minus_out.add(y, w);
    }
}

MultiplicityFn odd_cycl_from_mult(const MultiplicityFn& mult) {
    MultiplicityFn odd;
    if (mult.empty()) return odd;
    Q4 top = mult.max_support();
    // k in Z + 1/2, Phi_{2k}(q) divides (1 - q^x) iff 2k | x
    for (long two_k = 1; Q4::half(two_k) <= top; two_k += 2) {
        int total = 0;
        for (long s = 1; Q4::half(two_k * s) <= top; ++s) total += mult.at(Q4::half(two_k * s));
        if (total != 0) odd.add(Q4::half(two_k), total);
    }
    return odd;
}

MultiplicityFn mult_from_odd_cycl(const MultiplicityFn& odd) {
    MultiplicityFn m;
    if (odd.empty()) return m;
    Q4 top = odd.max_support();
    for (long two_k = 1; Q4::half(two_k) <= top; two_k += 2) {
        int val = 0;
        for (long s = 1; Q4::half(two_k * s) <= top; s += 2)
            val += mobius(s) * odd.at(Q4::half(two_k * s));
        if (val != 0) m.add(Q4::half(two_k), val);
    }
    return m;
}

LedgerAnalysis ledger_analyze(const FactorLedger& ledger) {
    LedgerAnalysis out;
    out.canonical.coeff = ledger.coeff;
    out.canonical.vexp = ledger.vexp;
    for (auto& [key, exp] : ledger.factors) {
        auto [sign, e] = key;
        out.canonical = mul(out.canonical, power(binomial_factor(sign, e), exp));
        // exponents of (1 - q^x): q-exponent x = e/2
        Q4 x = Q4::from_quarters(2 * e);
        if (sign == -1) {
            out.mult.add(x, static_cast<int>(exp));
        } else {
            // 1 + q^x = (1 - q^{2x}) / (1 - q^x)
            out.mult.add(x + x, static_cast<int>(exp));
            out.mult.add(x, static_cast<int>(-exp));
        }
    }
    out.odd_cycl = odd_cycl_from_mult(out.mult);
    MultiplicityFn odd_minus;
    split_even(out.mult, out.even_part, odd_minus);
    return out;
}

std::string cyclo_str(const CycloFactored& f) {
    std::ostringstream os;
    os << rational_str(f.coeff);
    if (f.vexp != 0) os << " v^" << f.vexp;
    for (auto& [d, e] : f.phi) {
        os << " Phi_" << d;
        if (e != 1) os << "^" << e;
    }
    return os.str();
}

}  // namespace hecke
