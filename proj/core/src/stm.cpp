#include "hecke/stm.hpp"

#include <algorithm>

namespace hecke {

std::string to_string(STMKind k) {
    switch (k) {
        case STMKind::IsoEta: return "eta";
        case STMKind::IsoEtaPlus: return "eta_plus";
        case STMKind::IsoEtaMinus: return "eta_minus";
        case STMKind::Translate: return "translate";
        case STMKind::ExtraSpecial: return "extraspecial";
    }
    return "?";
}

namespace {

Partition conjugate_label(Q4 m, const Partition& lambda) {
    if (m.is_strict_quarter()) return lambda.conjugate();
    if ((m.abs() == Q4(0) || m.abs() == q4_half() || m.abs() == Q4(1)))
        return lambda;  // distinguished labels depend on |m| only
    throw std::domain_error("eta_+/-: conjugation for intermediate parameters unsupported");
}

}  // namespace

std::pair<HeckeParams, LabelledPoint> iso_apply(STMKind gen, const HeckeParams& p,
                                                const LabelledPoint& pt) {
    switch (gen) {
        case STMKind::IsoEta: {
            HeckeParams q = classify_params(p.m_plus, p.m_minus, p.rank);
            return {q, LabelledPoint{pt.lambda_plus, pt.lambda_minus}};
        }
        case STMKind::IsoEtaPlus: {
            HeckeParams q = classify_params(p.m_minus, -p.m_plus, p.rank);
            return {q, LabelledPoint{pt.lambda_minus, conjugate_label(p.m_plus, pt.lambda_plus)}};
        }
        case STMKind::IsoEtaMinus: {
            HeckeParams q = classify_params(-p.m_minus, p.m_plus, p.rank);
            return {q, LabelledPoint{conjugate_label(p.m_minus, pt.lambda_minus), pt.lambda_plus}};
        }
        default:
            throw std::domain_error("iso_apply: not an Iso generator");
    }
}

STMStep translate_params(const HeckeParams& p, int side) {
    if (side != -1 && side != 1) throw std::domain_error("translate: side must be -1 or +1");
    Q4 m = side < 0 ? p.m_minus : p.m_plus;
    if (!m.is_half_integer())
        throw std::domain_error("translate: side parameter must be half-integral");
    Q4 step = m.is_integer() ? Q4(2) : Q4(1);
    Q4 target = m.abs() - step;
    if (target < Q4(0))
        throw std::domain_error("translate: target must lie between the parameter and 0");
    if (m < Q4(0)) target = -target;
    // rank increment: |m| - 1/2 for half-integral sides, 2|m| - 2 for integral
    long inc = m.is_integer() ? (2 * m.abs().to_integer() - 2)
                              : (m.abs() - q4_half()).to_integer();
    STMStep s;
    s.kind = STMKind::Translate;
    s.source = p;
    s.side = side;
    s.shift = step;
    s.target = classify_params(side < 0 ? target : p.m_minus, side < 0 ? p.m_plus : target,
                               p.rank + inc);
    if (s.target.base != p.base)
        throw std::domain_error("translate: base changed, conditions violated");
    return s;
}

std::pair<HeckeParams, LabelledPoint> translate_step(const HeckeParams& p,
                                                     const LabelledPoint& pt, int side) {
    STMStep s = translate_params(p, side);
    // the label pair is unchanged; sanity: it must stay distinguished
    const Partition& moved = side < 0 ? pt.lambda_minus : pt.lambda_plus;
    Q4 src_m = (side < 0 ? p.m_minus : p.m_plus).abs();
    Q4 tgt_m = (side < 0 ? s.target.m_minus : s.target.m_plus).abs();
    long src_side_rank =
        (moved.size() - (src_m.quarters() * src_m.quarters()) / 16) / 2;
    long tgt_side_rank =
        (moved.size() - (tgt_m.quarters() * tgt_m.quarters()) / 16) / 2;
    if (tgt_side_rank - src_side_rank != s.target.rank - p.rank)
        throw std::domain_error("translate: rank bookkeeping mismatch");
    if (static_cast<long>(moved.length()) < tgt_m.floor())
        throw std::domain_error("translate: label not distinguished at target");
    return {s.target, pt};
}

STMStep extraspecial_params(const HeckeParams& p) {
    if (p.type() != ParamType::V && p.type() != ParamType::VI)
        throw std::domain_error("extraspecial_map: parameters must be quarter-integral");
    int dm = quarter_delta(p.m_minus), dp = quarter_delta(p.m_plus);
    auto [a, b] = solve_sets(p);
    long rank;
    if (p.type() == ParamType::V)
        rank = 2 * p.rank + a * (a + 1) / 2 + 2 * b * (b + 1);
    else
        rank = 2 * p.rank + a * (a + 1) / 2 + 2 * b * b - dp;
    STMStep s;
    s.kind = STMKind::ExtraSpecial;
    s.source = p;
    s.target = classify_params(Q4(dm), Q4(dp), rank);
    return s;
}

std::pair<HeckeParams, LabelledPoint> extraspecial_map(const HeckeParams& p,
                                                       const LabelledPoint& pt) {
    STMStep s = extraspecial_params(p);
    Partition lm = decode(ESPair{p.m_minus.abs(), pt.lambda_minus});
    Partition lp = decode(ESPair{p.m_plus.abs(), pt.lambda_plus});
    int dm = quarter_delta(p.m_minus), dp = quarter_delta(p.m_plus);
    long n = (lm.size() - dm) / 2 + (lp.size() - dp) / 2;
    if (n != s.target.rank)
        throw std::domain_error("extraspecial_map: decoded sizes disagree with the rank formula");
    return {s.target, LabelledPoint{lm, lp}};
}

bool is_minimal_object(const HeckeParams& p) {
    auto pair = std::minmax(p.m_minus, p.m_plus);
    auto is = [&](long qlo, long qhi) {
        return pair.first == Q4::from_quarters(qlo) && pair.second == Q4::from_quarters(qhi);
    };
    // unordered pairs {1/2,0}, {1/2,1}, {1/2,1/2}, {0,1}, {0,0}, {1,1}
    return is(0, 2) || is(2, 4) || is(2, 2) || is(0, 4) || is(0, 0) || is(4, 4);
}

bool has_swap_automorphism(const HeckeParams& p) { return p.m_minus == p.m_plus; }

std::vector<STMStep> reduce_to_minimal(const HeckeParams& p0) {
    std::vector<STMStep> steps;
    HeckeParams p = p0;
    auto push_iso = [&](STMKind k) {
        STMStep s;
        s.kind = k;
        s.source = p;
        if (k == STMKind::IsoEta)
            s.target = classify_params(p.m_plus, p.m_minus, p.rank);
        else if (k == STMKind::IsoEtaPlus)
            s.target = classify_params(p.m_minus, -p.m_plus, p.rank);
        else
            s.target = classify_params(-p.m_minus, p.m_plus, p.rank);
        steps.push_back(s);
        p = s.target;
    };
    if (p.m_minus < Q4(0)) push_iso(STMKind::IsoEtaMinus);
    if (p.m_plus < Q4(0)) push_iso(STMKind::IsoEtaPlus);
    if (p.type() == ParamType::V || p.type() == ParamType::VI) {
        STMStep s = extraspecial_params(p);
        steps.push_back(s);
        p = s.target;
    }
    auto translatable = [](Q4 m) {
        return m.is_integer() ? m >= Q4(2) : m >= Q4::from_quarters(6);  // >= 3/2
    };
    while (translatable(p.m_minus) || translatable(p.m_plus)) {
        int side = translatable(p.m_minus) ? -1 : +1;
        STMStep s = translate_params(p, side);
        steps.push_back(s);
        p = s.target;
    }
    // canonical ordering of the minimal object: half-integral parameter first,
    // and (0,1) rather than (1,0)
    bool needs_swap = (p.m_plus == q4_half() && p.m_minus != q4_half()) ||
                      (p.m_minus == Q4(1) && p.m_plus == Q4(0));
    if (needs_swap) push_iso(STMKind::IsoEta);
    if (!is_minimal_object(p))
        throw std::domain_error("reduce_to_minimal: did not reach a minimal object");
    return steps;
}

LabelledPoint apply_step(const STMStep& s, const LabelledPoint& pt) {
    switch (s.kind) {
        case STMKind::IsoEta:
        case STMKind::IsoEtaPlus:
        case STMKind::IsoEtaMinus:
            return iso_apply(s.kind, s.source, pt).second;
        case STMKind::Translate:
            return translate_step(s.source, pt, s.side).second;
        case STMKind::ExtraSpecial:
            return extraspecial_map(s.source, pt).second;
    }
    throw std::domain_error("apply_step: unknown step kind");
}

}  // namespace hecke
