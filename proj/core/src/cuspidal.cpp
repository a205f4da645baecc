#include "hecke/cuspidal.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "hecke/parallel.hpp"

namespace hecke {

std::string to_string(Family f) {
    switch (f) {
        case Family::I: return "I";
        case Family::II: return "II";
        case Family::III_ord: return "III_ord";
        case Family::IV_ord: return "IV_ord";
        case Family::III_extra: return "III_extra";
        case Family::IV_extra: return "IV_extra";
    }
    return "?";
}

std::string DegreeTemplate::label() const {
    return to_string(family) + "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

namespace {

// largest integer of {0, r}
long max_int0(Q4 r) { return (r.is_integer() && r > Q4(0)) ? r.to_integer() : 0; }

long max0(long x) { return x > 0 ? x : 0; }

}  // namespace

DegreeTemplate degree_template(Family f, long a, long b) {
    if (a < 0 || b < 0) throw std::domain_error("degree_template: a, b must be nonnegative");
    DegreeTemplate t{f, a, b, {}};
    long cap = 4 * std::max(a, b) + 4;
    for (long k = 1; k <= cap; ++k) {
        long v = 0;
        switch (f) {
            case Family::II: v = max0(2 * a - k) + max0(2 * b + 1 - k); break;
            case Family::I:
                if (k % 2 == 1) v = max0(a + (1 - k) / 2) + max0(b + (1 - k) / 2);
                break;
            case Family::III_ord: v = max0(2 * a + 1 - k) + max0(2 * b + 1 - k); break;
            case Family::IV_ord: v = max0(2 * a - k) + max0(2 * b - k); break;
            case Family::III_extra:
                v = max_int0(Q4::half(4 * a + 2 - k)) + max_int0(Q4::half(2 * b + 1 - k));
                break;
            case Family::IV_extra:
                v = max_int0(Q4::half(4 * a - k)) + max_int0(Q4::half(2 * b + 1 - k));
                break;
        }
        if (v) t.even_mult.add(Q4(k), static_cast<int>(-v));
    }
    return t;
}

HeckeParams template_source_params(Family f, long a, long b) {
    // the two set elements {x, y}; parameters are (x+y)/2 and (x-y)/2
    Q4 x, y;
    switch (f) {
        case Family::II: x = Q4(2 * a); y = Q4(2 * b + 1); break;
        case Family::I: x = Q4(a) + q4_half(); y = Q4(b) + q4_half(); break;
        case Family::III_ord: x = Q4(2 * a + 1); y = Q4(2 * b + 1); break;
        case Family::IV_ord: x = Q4(2 * a); y = Q4(2 * b); break;
        case Family::III_extra:
        case Family::IV_extra:
            // the q^2-scaled index sits at 2a+1 (III) / 2a (IV), the unitary
            // index at b + 1/2
            x = (f == Family::III_extra) ? Q4(2 * a + 1) : Q4(2 * a);
            y = Q4(b) + q4_half();
            break;
    }
    if (y > x) std::swap(x, y);
    Q4 hi = Q4::from_quarters((x.quarters() + y.quarters()) / 2);
    Q4 lo = Q4::from_quarters((x.quarters() - y.quarters()) / 2);
    // orientation: put the side reducing to the canonical minimal first
    Q4 mm = lo, mp = hi;
    if (f == Family::I) {
        if (!mm.is_strict_half()) std::swap(mm, mp);  // half-integral side first
    } else if (f == Family::III_ord) {
        if (mm.to_integer() % 2 != 0) std::swap(mm, mp);  // even side first
    } else if (f == Family::III_extra) {
        if (quarter_delta(mm) != 0) std::swap(mm, mp);
    }
    return classify_params(mm, mp, 0);
}

Partition rank0_label(Q4 m) {
    if (m.is_strict_quarter()) return Partition();
    Q4 a = m.abs();
    std::vector<long> parts;
    if (a.is_integer()) {
        for (long p = 2 * a.to_integer() - 1; p >= 1; p -= 2) parts.push_back(p);
    } else {
        for (long p = (a - q4_half()).to_integer() * 2; p >= 2; p -= 2) parts.push_back(p);
    }
    return Partition(std::move(parts));
}

ResidueShape shape_of(const ResidueResult& r) { return ResidueShape{r.even_part, r.odd_cycl}; }

// ---------------------------------------------------------------------------
// family predicates

namespace {

bool is_arith_from(const Partition& l, long first, long step) {
    long expect = first + step * (static_cast<long>(l.length()) - 1);
    for (long p : l.parts()) {
        if (p != expect) return false;
        expect -= step;
    }
    return true;
}

bool power_of_two(long x) { return x > 0 && (x & (x - 1)) == 0; }

bool family_a(int delta, const Partition& l) {
    long kappa = static_cast<long>(l.length());
    if (kappa % 2 != delta) return false;
    if (kappa == 0) return true;
    long eps = (l.parts().back() == 1) ? 0 : (l.parts().back() == 3 ? 1 : -1);
    if (eps < 0) return false;
    return is_arith_from(l, 1 + 2 * eps, 4);
}

bool family_bc(int delta, const Partition& l) {
    long len = static_cast<long>(l.length());
    if (len % 2 != delta) return false;
    return is_arith_from(l, 1, 2);
}

bool family_d(int delta, const Partition& l) {
    if (delta != 1) return false;
    long len = static_cast<long>(l.length());
    if (len < 3 || (len - 3) % 4 != 0) return false;
    long r = (len - 3) / 4;
    if (!power_of_two(r + 1)) return false;
    return is_arith_from(l, 3, 2);
}

bool family_e(int delta, const Partition& l) {
    if (delta != 0) return false;
    long len = static_cast<long>(l.length());
    if (len < 4 || len % 4 != 0) return false;
    long r = len / 4 - 1;
    if (!power_of_two(r + 1)) return false;
    if (l.parts().front() != 8 * r + 9) return false;
    Partition rest(std::vector<long>(l.parts().begin() + 1, l.parts().end()));
    return is_arith_from(rest, 1, 2) && rest.parts().front() == 8 * r + 5;
}

bool triangular(const Partition& l) { return is_arith_from(l, 2, 2); }

bool rectangle(const Partition& l, long& rows, long& cols) {
    rows = static_cast<long>(l.length());
    if (rows == 0) return false;
    cols = l.parts().front();
    for (long p : l.parts())
        if (p != cols) return false;
    return true;
}

}  // namespace

bool side_no_odd_family(Q4 m, const Partition& lambda) {
    Q4 a = m.abs();
    if (a.is_strict_quarter()) {
        if (lambda.empty()) return true;  // case (a)
        long rows = 0, cols = 0;
        if (!rectangle(lambda, rows, cols)) return false;
        if (a == q4_quarter()) return rows == cols;                          // (b)
        if (a == Q4::from_quarters(3)) return rows == cols + 1;              // (c)
        if (a == Q4::from_quarters(5) || a == Q4::from_quarters(7))          // (d),(e)
            return rows == cols + 2 && cols % 2 == 1;
        return false;
    }
    if (a == q4_half()) return triangular(lambda);
    if (a == Q4(0) || a == Q4(1)) {
        int delta = a.is_integer() ? static_cast<int>(a.to_integer()) : 0;
        return family_a(delta, lambda) || family_bc(delta, lambda) ||
               family_d(delta, lambda) || family_e(delta, lambda);
    }
    return false;
}

std::vector<std::pair<Partition, Partition>> classify_no_odd(const HeckeParams& p) {
    std::vector<std::pair<Partition, Partition>> out;
    for (auto& [lm, lp] : enumerate_residual_points(p)) {
        ResidualPoint pt = coordinates(p, lm, lp);
        ResidueResult r = residue_q_raw(p, pt.coords);
        bool clean = r.odd_cycl.empty();
        bool families = side_no_odd_family(p.m_minus, lm) && side_no_odd_family(p.m_plus, lp);
        if (clean != families)
            throw std::domain_error("classify_no_odd: family prediction disagrees at " +
                                    p.str() + " " + lm.str() + "," + lp.str());
        if (clean) out.emplace_back(lm, lp);
    }
    return out;
}

// ---------------------------------------------------------------------------
// closed-form route

namespace {

// even coordinate-multiplicity function of one side, on the content grid
MultiplicityFn side_htilde(Q4 m, const Partition& lambda) {
    if (m.is_strict_quarter()) {
        MTableau t = mtableau_contents(m.abs(), lambda);
        MultiplicityFn h;
        for (auto& [x, v] : t.h_plus.entries()) {
            h.add(x, v);
            h.add(-x, v);
        }
        return h;
    }
    return htilde(m.abs(), lambda);
}

// coordinate counts u(x), x >= 0, with u(0) = htilde(0)/2
MultiplicityFn side_counts(const MultiplicityFn& ht) {
    MultiplicityFn u;
    for (auto& [x, v] : ht.entries()) {
        if (x > Q4(0)) u.add(x, v);
        if (x == Q4(0)) u.add(x, v / 2);
    }
    return u;
}

// One-sided multiplicity bookkeeping at parameters (0, mu), base b, organized
// by coordinate counts; the general form of the per-family expansions.
ResidueShape one_sided_general(int base, Q4 mu, const MultiplicityFn& u) {
    MultiplicityFn M;  // (1 - q^j) exponents, j in q-units
    MultiplicityFn P;  // (1 + q^j) exponents
    long n = 0;
    for (auto& [x, w] : u.entries()) n += w;
    auto addM = [&](Q4 carg, int w) {
        if (carg == Q4(0) || w == 0) return;  // vanishing factors carry no content
        M.add((base * carg).abs(), w);
    };
    auto addP = [&](Q4 carg, int w) {
        if (carg == Q4(0) || w == 0) return;
        P.add((base * carg).abs(), w);
    };
    const auto& e = u.entries();
    for (auto i = e.begin(); i != e.end(); ++i) {
        for (auto j = i; j != e.end(); ++j) {
            auto [y, wy] = *i;
            auto [x, wx] = *j;
            long W = (i == j) ? wx * (wx - 1) / 2 : static_cast<long>(wx) * wy;
            if (W == 0) continue;
            addM(x + y, static_cast<int>(2 * W));
            addM(x - y, static_cast<int>(2 * W));
            for (Q4 s : {x + y + Q4(1), x + y - Q4(1), x - y + Q4(1), x - y - Q4(1)})
                addM(s, static_cast<int>(-W));
        }
        auto [x, w] = *i;
        addM(x + x, 2 * w);
        addP(x, -2 * w);  // (1 + q^{b x})^2 from the zero minus-parameter
        addM(x - mu, -w);
        addM(x + mu, -w);
    }
    addM(Q4(1), static_cast<int>(-n));  // (v^b - v^{-b})^{-n}
    ResidueShape out;
    out.odd = odd_cycl_from_mult(M);
    MultiplicityFn odd_minus;
    split_even(M, out.even, odd_minus);
    out.even += P;
    return out;
}

MultiplicityFn scale_keys(const MultiplicityFn& m, int factor) {
    MultiplicityFn out;
    for (auto& [x, v] : m.entries()) out.add(x * factor, v);
    return out;
}

MultiplicityFn positive_part(const MultiplicityFn& m) {
    MultiplicityFn out;
    for (auto& [x, v] : m.entries())
        if (x > Q4(0)) out.add(x, v);
    return out;
}

// base term mult^{(0,lambda)}_{(b; 0, mu)}; paper closed forms for the
// recognized families, the general expansion otherwise
ResidueShape one_sided_base(int base, Q4 mu, const Partition& lambda) {
    Q4 a = mu.abs();
    ResidueShape out;
    if (a.is_strict_quarter()) {
        MTableau t = mtableau_contents(a, lambda);
        MultiplicityFn u;
        for (auto& row : t.fillings)
            for (auto& f : row) u.add(f, 1);
        return one_sided_general(base, a, u);
    }
    MultiplicityFn ht = htilde(a, lambda);
    if (a == q4_half() && triangular(lambda)) {
        // prod_k (1 + q^k)^{-(h(k+1/2) + h(k-1/2))}
        for (long k = 1;; ++k) {
            int v = ht.at(Q4(k) + q4_half()) + ht.at(Q4(k) - q4_half());
            if (v == 0) break;
            out.even.add(Q4(base * k), -v);
        }
        return out;
    }
    if (a.is_integer()) {
        int delta = static_cast<int>(a.to_integer());
        auto add_scaled = [&](const MultiplicityFn& m, int mult) {
            for (auto& [x, v] : positive_part(m).entries())
                out.even.add(x * base, v * mult);
        };
        if (family_a(delta, lambda)) {
            add_scaled(ht, -1);
            return out;
        }
        if (family_bc(delta, lambda)) {
            add_scaled(ht, -2);
            return out;
        }
        if (family_d(delta, lambda) || family_e(delta, lambda)) {
            add_scaled(ht, -2);
            long top = family_d(delta, lambda)
                           ? (static_cast<long>(lambda.length()) - 1) / 2  // a = 2(r+1)
                           : static_cast<long>(lambda.length());           // p = 2a
            for (long s = 1; s <= top; s *= 2) out.even.add(Q4(base * s), 1);
            if (top > 1) out.even.add(Q4(base), 0);  // powers 1,2,4,...,top
            return out;
        }
    }
    return one_sided_general(base, a, side_counts(ht));
}

bool anisotropy_applies_here(const HeckeParams& p) {
    return p.m_minus.is_integer() && p.m_plus.is_integer() &&
           std::labs(p.m_minus.to_integer()) % 2 == 1 &&
           std::labs(p.m_plus.to_integer()) % 2 == 1;
}

}  // namespace

ResidueShape mixed_mult_formula(const HeckeParams& p, const Partition& lambda_minus,
                                const Partition& lambda_plus) {
    MultiplicityFn hm = side_htilde(p.m_minus, lambda_minus);
    MultiplicityFn hp = side_htilde(p.m_plus, lambda_plus);
    ResidueShape out;
    // cross term: prod (1 + q^{bk})^{Delta(h- * h+)(k)}
    MultiplicityFn cross = delta_op(convolve(hm, hp), Q4(1));
    for (auto& [k, v] : positive_part(cross).entries()) out.even.add(k * p.base, v);
    // per side: opposite-parameter correction plus the (0, mu) base
    auto one_side = [&](Q4 mu_self, Q4 mu_opp, const Partition& lambda,
                        const MultiplicityFn& ht) {
        MultiplicityFn corr = convolve(delta_op(dirac(Q4(0)), mu_opp.abs()), ht);
        for (auto& [k, v] : positive_part(corr).entries()) out.even.add(k * p.base, v);
        ResidueShape base = one_sided_base(p.base, mu_self, lambda);
        out.even += base.even;
        out.odd += base.odd;
    };
    one_side(p.m_plus, p.m_minus, lambda_plus, hp);
    one_side(p.m_minus, p.m_plus, lambda_minus, hm);
    if (anisotropy_applies_here(p)) out.even.add(Q4(1), -1);
    return out;
}

// ---------------------------------------------------------------------------
// solving and verification

namespace {

std::vector<LabelledPoint> aut_orbit(const HeckeParams& p, const LabelledPoint& pt) {
    std::vector<LabelledPoint> orbit{pt};
    if (has_swap_automorphism(p)) {
        LabelledPoint sw{pt.lambda_plus, pt.lambda_minus};
        if (!(sw == pt)) orbit.push_back(sw);
    }
    std::sort(orbit.begin(), orbit.end(), [](const LabelledPoint& a, const LabelledPoint& b) {
        return std::tie(a.lambda_minus, a.lambda_plus) < std::tie(b.lambda_minus, b.lambda_plus);
    });
    return orbit;
}

std::vector<std::vector<LabelledPoint>> group_into_orbits(
    const HeckeParams& p, const std::vector<LabelledPoint>& pts) {
    std::set<std::vector<std::pair<Partition, Partition>>> seen;
    std::vector<std::vector<LabelledPoint>> orbits;
    for (auto& pt : pts) {
        auto orbit = aut_orbit(p, pt);
        std::vector<std::pair<Partition, Partition>> key;
        for (auto& o : orbit) key.emplace_back(o.lambda_minus, o.lambda_plus);
        if (seen.insert(key).second) orbits.push_back(orbit);
    }
    return orbits;
}

std::vector<Family> families_for(const HeckeParams& min) {
    auto pr = std::minmax(min.m_minus, min.m_plus);
    if (pr.first == q4_half() && pr.second == q4_half()) return {Family::II};
    if (pr.first == Q4(0) && pr.second == q4_half()) return {Family::I};
    if (pr.first == q4_half() && pr.second == Q4(1)) return {Family::I};
    if (pr.first == Q4(0) && pr.second == Q4(1)) return {Family::III_ord, Family::III_extra};
    return {Family::IV_ord, Family::IV_extra};
}

struct Candidate {
    std::vector<std::string> labels;
    MultiplicityFn even_mult;
    HeckeParams source;
    HeckeParams final_params;
    long final_rank;
    LabelledPoint predicted;
};

}  // namespace

std::vector<std::vector<LabelledPoint>> solve_fdeg(const HeckeParams& params_min,
                                                   const DegreeTemplate& tmpl) {
    std::vector<LabelledPoint> hits;
    for (auto& [lm, lp] : enumerate_residual_points(params_min)) {
        ResidualPoint pt = coordinates(params_min, lm, lp);
        ResidueResult r = residue_full(params_min, pt.coords);
        if (r.odd_cycl.empty() && r.even_part == tmpl.even_mult)
            hits.push_back(LabelledPoint{lm, lp});
    }
    return group_into_orbits(params_min, hits);
}

UniquenessReport verify_uniqueness(const HeckeParams& params_min, int jobs) {
    if (!is_minimal_object(params_min))
        throw std::domain_error("verify_uniqueness: parameters are not a minimal object");
    UniquenessReport rep;
    rep.params = params_min;
    long n = params_min.rank;

    // candidate templates reducing to this minimal object
    std::vector<Candidate> candidates;
    long bound = 2 * n + 6;
    for (Family f : families_for(params_min)) {
        for (long a = 0; a <= bound; ++a) {
            for (long b = 0; b <= bound; ++b) {
                DegreeTemplate t = degree_template(f, a, b);
                HeckeParams src = template_source_params(f, a, b);
                std::vector<STMStep> chain;
                try {
                    chain = reduce_to_minimal(src);
                } catch (const std::exception&) {
                    continue;
                }
                HeckeParams fin = chain.empty() ? src : chain.back().target;
                if (!(fin.m_minus == params_min.m_minus && fin.m_plus == params_min.m_plus))
                    continue;
                LabelledPoint pt{rank0_label(src.m_minus), rank0_label(src.m_plus)};
                for (auto& s : chain) pt = apply_step(s, pt);
                auto same = std::find_if(candidates.begin(), candidates.end(),
                                         [&](const Candidate& c) {
                                             return c.even_mult == t.even_mult;
                                         });
                if (same != candidates.end()) {
                    same->labels.push_back(t.label());
                    if (same->final_rank != fin.rank)
                        rep.failures.push_back("template collision with distinct ranks: " +
                                               t.label());
                    continue;
                }
                candidates.push_back(Candidate{{t.label()}, t.even_mult, src, fin, fin.rank, pt});
            }
        }
    }

    // residues of all labels at rank n
    auto labels = enumerate_residual_points(params_min);
    auto shapes = parallel_map<std::pair<Partition, Partition>, ResidueShape>(
        labels, jobs, [&](const std::pair<Partition, Partition>& lab) {
            ResidualPoint pt = coordinates(params_min, lab.first, lab.second);
            return shape_of(residue_full(params_min, pt.coords));
        });

    std::map<std::size_t, std::vector<LabelledPoint>> matched;  // candidate index -> points
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (!shapes[i].no_odd()) continue;
        LabelledPoint pt{labels[i].first, labels[i].second};
        std::vector<std::size_t> hits;
        for (std::size_t c = 0; c < candidates.size(); ++c)
            if (candidates[c].even_mult == shapes[i].even) hits.push_back(c);
        if (hits.empty()) {
            rep.non_cuspidal_no_odd.push_back(pt);
            continue;
        }
        if (hits.size() > 1)
            rep.failures.push_back("label " + pt.lambda_minus.str() + "," +
                                   pt.lambda_plus.str() + " matches multiple templates");
        std::size_t c = hits.front();
        if (candidates[c].final_rank != n)
            rep.failures.push_back("label " + pt.lambda_minus.str() + "," +
                                   pt.lambda_plus.str() + " matches " +
                                   candidates[c].labels.front() + " whose image has rank " +
                                   std::to_string(candidates[c].final_rank));
        matched[c].push_back(pt);
    }

    for (std::size_t c = 0; c < candidates.size(); ++c) {
        const Candidate& cand = candidates[c];
        if (cand.final_rank != n) {
            if (matched.count(c))
                rep.failures.push_back("solutions at wrong rank for " + cand.labels.front());
            continue;
        }
        TemplateReport tr;
        tr.labels = cand.labels;
        tr.even_mult = cand.even_mult;
        tr.source = cand.source;
        tr.expected_rank = cand.final_rank;
        tr.predicted_orbit = aut_orbit(params_min, cand.predicted);
        auto it = matched.find(c);
        if (it != matched.end()) tr.solution_orbits = group_into_orbits(params_min, it->second);
        tr.pass = tr.solution_orbits.size() == 1 && tr.solution_orbits.front() == tr.predicted_orbit;
        if (!tr.pass) {
            tr.note = tr.solution_orbits.empty()
                          ? "no solutions"
                          : (tr.solution_orbits.size() > 1 ? "multiple orbits"
                                                           : "orbit differs from prediction");
            rep.failures.push_back(cand.labels.front() + ": " + tr.note);
        }
        rep.templates.push_back(std::move(tr));
    }
    rep.pass = rep.failures.empty();
    return rep;
}

}  // namespace hecke
