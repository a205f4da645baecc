#include "hecke/residual.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace hecke {

std::string to_string(ParamType t) {
    switch (t) {
        case ParamType::I: return "I";
        case ParamType::II: return "II";
        case ParamType::III: return "III";
        case ParamType::IV: return "IV";
        case ParamType::V: return "V";
        case ParamType::VI: return "VI";
    }
    return "?";
}

int quarter_delta(Q4 m) {
    ESPair p{m.abs(), Partition()};
    return p.delta();
}

ParamType HeckeParams::type() const {
    bool half_m = m_minus.is_half_integer(), half_p = m_plus.is_half_integer();
    if (half_m && half_p) {
        bool int_m = m_minus.is_integer(), int_p = m_plus.is_integer();
        if (int_m && int_p)
            return ((m_minus - m_plus).to_integer() % 2 == 0) ? ParamType::IV : ParamType::III;
        if (!int_m && !int_p) return ParamType::II;
        return ParamType::I;
    }
    if (m_minus.is_strict_quarter() && m_plus.is_strict_quarter())
        return quarter_delta(m_minus) == quarter_delta(m_plus) ? ParamType::VI : ParamType::V;
    throw std::domain_error("ill-formed parameter pair " + m_minus.str() + "," + m_plus.str());
}

std::string HeckeParams::str() const {
    return "C_" + std::to_string(rank) + "(" + m_minus.str() + "," + m_plus.str() + ")[q^" +
           std::to_string(base) + "]";
}

HeckeParams classify_params(Q4 m_minus, Q4 m_plus, long rank) {
    if (!(m_minus - m_plus).is_half_integer())
        throw std::domain_error("ill-formed pair: 2(m_- - m_+) must be an integer");
    if (rank < 0) throw std::domain_error("rank must be nonnegative");
    HeckeParams p;
    p.m_minus = m_minus;
    p.m_plus = m_plus;
    p.rank = rank;
    p.base = ((m_plus - m_minus).is_integer() && (m_plus + m_minus).is_integer()) ? 1 : 2;
    p.type();  // validates
    return p;
}

CoordinateVector canonical_coords(CoordinateVector c) {
    for (auto& [s, e] : c)
        if (e < 0) e = -e;
    std::sort(c.begin(), c.end());
    return c;
}

CoordinateVector flip_signs(const CoordinateVector& c) {
    CoordinateVector out = c;
    for (auto& [s, e] : out) s = -s;
    return canonical_coords(std::move(out));
}

// ---------------------------------------------------------------------------
// enumeration

namespace {

bool side_is_delta(Q4 m) {
    Q4 a = m.abs();
    return a == Q4(0) || a == q4_half() || a == Q4(1);
}

std::vector<Partition> side_labels(Q4 m, long n) {
    if (m.is_strict_quarter()) return all_partitions(n);
    return enumerate_distinguished(m.abs(), n);
}

}  // namespace

std::vector<std::pair<Partition, Partition>> enumerate_residual_points(const HeckeParams& p) {
    bool quarter = p.m_minus.is_strict_quarter();
    auto supported = [&](Q4 m) { return m.is_strict_quarter() || side_is_delta(m) || true; };
    (void)supported;
    if (!quarter) {
        // distinguished partitions exist for every half-integral m, but the
        // coordinate construction below only covers |m| in {0,1/2,1}; callers
        // needing intermediate parameters go through the brute-force oracle.
        if (!side_is_delta(p.m_minus) || !side_is_delta(p.m_plus))
            throw std::domain_error(
                "enumerate_residual_points: intermediate parameter without closed-form "
                "coordinates; use brute_force_residual_points");
    }
    std::vector<std::pair<Partition, Partition>> out;
    for (long nm = 0; nm <= p.rank; ++nm) {
        auto left = side_labels(p.m_minus, nm);
        if (left.empty()) continue;
        auto right = side_labels(p.m_plus, p.rank - nm);
        for (auto& lm : left)
            for (auto& lp : right) out.emplace_back(lm, lp);
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// vexps (all >= 0) of the one-sided point labelled by lambda at parameter m
std::vector<long> side_vexps(Q4 m, const Partition& lambda, int base) {
    std::vector<long> v;
    if (m.is_strict_quarter()) {
        MTableau t = mtableau_contents(m.abs(), lambda);
        for (auto& row : t.fillings)
            for (auto& f : row) v.push_back((2 * base * f).to_integer());
        std::sort(v.begin(), v.end());
        return v;
    }
    MultiplicityFn h = htilde(m.abs(), lambda);
    for (auto& [x, c] : h.entries()) {
        if (x < Q4(0)) continue;
        long copies = (x == Q4(0)) ? c / 2 : c;
        for (long i = 0; i < copies; ++i) v.push_back((2 * base * x).to_integer());
    }
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

ResidualPoint coordinates(const HeckeParams& p, const Partition& lambda_minus,
                          const Partition& lambda_plus) {
    ResidualPoint r;
    r.params = p;
    r.lambda_minus = lambda_minus;
    r.lambda_plus = lambda_plus;
    for (long e : side_vexps(p.m_minus, lambda_minus, p.base)) r.coords.emplace_back(-1, e);
    for (long e : side_vexps(p.m_plus, lambda_plus, p.base)) r.coords.emplace_back(+1, e);
    r.coords = canonical_coords(std::move(r.coords));
    if (static_cast<long>(r.coords.size()) != p.rank)
        throw std::domain_error("coordinates: label sizes do not match the rank");
    return r;
}

// ---------------------------------------------------------------------------
// mu-function factors

namespace {

// walker over all binomial factors of the normalized mu-function at a point
// f(sign_of_binomial in {+1,-1} meaning (1 + sign * s * v^a), coordinate
// product sign s, v-exponent a, exponent w, is_denominator)
template <typename F>
void for_each_factor(const HeckeParams& p, const CoordinateVector& c, F&& f) {
    long n = static_cast<long>(c.size());
    long b2 = 2 * p.base;
    long em = (2 * p.base * p.m_minus).to_integer();
    long ep = (2 * p.base * p.m_plus).to_integer();
    for (long i = 0; i < n; ++i) {
        for (long j = i + 1; j < n; ++j) {
            auto [si, ei] = c[i];
            auto [sj, ej] = c[j];
            int s = si * sj;
            // numerator (1 - t_i t_j)^2 (1 - t_i t_j^{-1})^2
            f(-1, s, ei + ej, 2, false);
            f(-1, s, ei - ej, 2, false);
            // denominator (1 - v^{+-2b} t_i t_j)(1 - v^{+-2b} t_i t_j^{-1})
            f(-1, s, ei + ej + b2, 1, true);
            f(-1, s, ei + ej - b2, 1, true);
            f(-1, s, ei - ej + b2, 1, true);
            f(-1, s, ei - ej - b2, 1, true);
        }
    }
    for (long k = 0; k < n; ++k) {
        auto [s, e] = c[k];
        // numerator (1 + t_k)^2 (1 - t_k)^2 = (1 - t_k^2)^2
        f(-1, 1, 2 * e, 2, false);
        // denominator (1 + v^{-+2bm_-} t_k)(1 - v^{-+2bm_+} t_k)
        f(+1, s, e - em, 1, true);
        f(+1, s, e + em, 1, true);
        f(-1, s, e - ep, 1, true);
        f(-1, s, e + ep, 1, true);
    }
}

bool anisotropy_applies(const HeckeParams& p) {
    return p.m_minus.is_integer() && p.m_plus.is_integer() &&
           std::labs(p.m_minus.to_integer()) % 2 == 1 &&
           std::labs(p.m_plus.to_integer()) % 2 == 1;
}

ResidueResult residue_impl(const HeckeParams& p, const CoordinateVector& c, bool anisotropy) {
    ResidualCheck chk = check_residual(p, c);
    if (!chk.ok)
        throw std::domain_error("residue_q: point is not residual (defect " +
                                std::to_string(chk.den_zeros - chk.num_zeros) + " != rank " +
                                std::to_string(p.rank) + ")");
    ResidueResult out;
    for_each_factor(p, c, [&](int bsign, int s, long a, long w, bool den) {
        int sign = bsign * s;  // factor is (1 + sign * v^a)
        if (a == 0 && sign == -1) {
            (den ? out.ledger.den_vanished : out.ledger.num_vanished) += w;
            return;
        }
        out.ledger.push(sign, a, den ? -w : w);
    });
    // (v^b - v^{-b})^{-n} = (-1)^n v^{bn} (1 - v^{2b})^{-n}
    out.ledger.push(-1, 2 * p.base, -static_cast<long>(c.size()));
    if (anisotropy && anisotropy_applies(p)) out.ledger.push(+1, 2, -1);  // (v + v^{-1})^{-1}
    LedgerAnalysis an = ledger_analyze(out.ledger);
    out.canonical = an.canonical;
    out.mult = an.mult;
    out.even_part = an.even_part;
    out.odd_cycl = an.odd_cycl;
    return out;
}

}  // namespace

ResidualCheck check_residual(const HeckeParams& p, const CoordinateVector& coords) {
    ResidualCheck chk;
    for_each_factor(p, coords, [&](int bsign, int s, long a, long w, bool den) {
        if (a == 0 && bsign * s == -1) (den ? chk.den_zeros : chk.num_zeros) += w;
    });
    chk.ok = (chk.den_zeros - chk.num_zeros) == static_cast<long>(coords.size()) &&
             static_cast<long>(coords.size()) == p.rank;
    return chk;
}

ResidueResult residue_q(const HeckeParams& p, const CoordinateVector& coords) {
    return residue_impl(p, coords, true);
}

ResidueResult residue_q_raw(const HeckeParams& p, const CoordinateVector& coords) {
    return residue_impl(p, coords, false);
}

ResidueResult residue_full(const HeckeParams& p, const CoordinateVector& coords) {
    ResidueResult r = residue_impl(p, coords, false);
    for (auto& [x, e] : d0_qpart(p).entries()) {
        // (1 + q^x)^e with x a positive half-integer
        r.ledger.push(+1, (2 * x).to_integer(), e);
        r.even_part.add(x, e);
        r.mult.add(2 * x, e);
        r.mult.add(x, -e);
        r.canonical = mul(r.canonical, power(binomial_factor(+1, (2 * x).to_integer()), e));
    }
    r.odd_cycl = odd_cycl_from_mult(r.mult);
    return r;
}

// ---------------------------------------------------------------------------
// normalization d0

namespace {

void add_template_term(MultiplicityFn& m, long reach, long k) {
    // contributes -max{0, reach - k} at integer k
    if (reach > k) m.add(Q4(k), static_cast<int>(-(reach - k)));
}

}  // namespace

std::pair<long, long> solve_sets(const HeckeParams& p) {
    Q4 d = (p.m_plus - p.m_minus).abs();
    Q4 s = (p.m_plus + p.m_minus).abs();
    auto fail = [&]() {
        throw std::domain_error("set identity for {a,b} unsolvable at " + p.str());
    };
    auto as_int = [&](Q4 x) {
        if (!x.is_integer() || x < Q4(0)) fail();
        return x.to_integer();
    };
    switch (p.type()) {
        case ParamType::I: {
            // {1/2 + a, 1/2 + b} = {d, s}
            long a = as_int(d - q4_half()), b = as_int(s - q4_half());
            return {a, b};
        }
        case ParamType::II: {
            // {2a, 1 + 2b} = {d, s}
            Q4 even = d, odd = s;
            if (as_int(even) % 2 != 0) std::swap(even, odd);
            if (even.to_integer() % 2 != 0 || odd.to_integer() % 2 != 1) fail();
            return {even.to_integer() / 2, (odd.to_integer() - 1) / 2};
        }
        case ParamType::III: {
            long x = as_int(d), y = as_int(s);
            if (x % 2 != 1 || y % 2 != 1) fail();
            return {(x - 1) / 2, (y - 1) / 2};
        }
        case ParamType::IV: {
            long x = as_int(d), y = as_int(s);
            if (x % 2 != 0 || y % 2 != 0) fail();
            return {x / 2, y / 2};
        }
        case ParamType::V: {
            // {1/2 + a, 1 + 2b} = {d, s}: exactly one of d, s is an integer
            Q4 half = d, whole = s;
            if (half.is_integer()) std::swap(half, whole);
            long a = as_int(half - q4_half());
            long w = as_int(whole);
            if (w % 2 != 1) fail();
            return {a, (w - 1) / 2};
        }
        case ParamType::VI: {
            Q4 half = d, whole = s;
            if (half.is_integer()) std::swap(half, whole);
            long a = as_int(half - q4_half());
            long w = as_int(whole);
            if (w % 2 != 0) fail();
            return {a, w / 2};
        }
    }
    fail();
    return {0, 0};
}

MultiplicityFn d0_qpart(const HeckeParams& p) {
    MultiplicityFn m;
    ParamType t = p.type();
    if (t == ParamType::V || t == ParamType::VI) {
        // prod_i (1 + q^{2d-2i})^{-i} prod_j (1 + q^{2s-2j})^{-j}
        Q4 d = (p.m_minus - p.m_plus).abs();
        Q4 s = (p.m_minus + p.m_plus).abs();
        for (Q4 c : {d, s}) {
            long cap = c.floor();
            for (long i = 1; i <= cap; ++i) {
                Q4 arg = 2 * c - Q4(2 * i);
                if (arg > Q4(0)) m.add(arg, static_cast<int>(-i));
            }
        }
        return m;
    }
    auto [a, b] = solve_sets(p);
    long reach1 = 0, reach2 = 0;
    switch (t) {
        case ParamType::I: {
            // supported on odd integers j: -(max{0,a+1/2-j/2} + max{0,b+1/2-j/2})
            for (long j = 1; j <= 2 * std::max(a, b) + 1; j += 2) {
                long v1 = std::max(0L, a + (1 - j) / 2), v2 = std::max(0L, b + (1 - j) / 2);
                if (v1 + v2) m.add(Q4(j), static_cast<int>(-(v1 + v2)));
            }
            return m;
        }
        case ParamType::II: reach1 = 2 * a; reach2 = 2 * b + 1; break;
        case ParamType::III: reach1 = 2 * a + 1; reach2 = 2 * b + 1; break;
        case ParamType::IV: reach1 = 2 * a; reach2 = 2 * b; break;
        default: break;
    }
    for (long k = 1; k < std::max(reach1, reach2); ++k) {
        add_template_term(m, reach1, k);
        add_template_term(m, reach2, k);
    }
    return m;
}

// ---------------------------------------------------------------------------
// brute-force oracle

long default_exponent_bound(const HeckeParams& p) {
    Q4 mx = std::max(p.m_minus.abs(), p.m_plus.abs());
    long mx2 = (mx.quarters() * mx.quarters() + 15) / 16;  // ceil(m^2)
    return p.base * (2 * p.rank + mx2 + 1);
}

std::vector<CoordinateVector> brute_force_residual_points(const HeckeParams& p,
                                                          long exponent_bound) {
    std::vector<Coordinate> alphabet;
    for (long e = 0; e <= exponent_bound; ++e) {
        alphabet.emplace_back(-1, e);
        alphabet.emplace_back(+1, e);
    }
    std::sort(alphabet.begin(), alphabet.end());
    std::vector<CoordinateVector> out;
    CoordinateVector cur;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (static_cast<long>(cur.size()) == p.rank) {
            if (check_residual(p, cur).ok) out.push_back(cur);
            return;
        }
        for (std::size_t i = start; i < alphabet.size(); ++i) {
            cur.push_back(alphabet[i]);
            rec(i);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

}  // namespace hecke
