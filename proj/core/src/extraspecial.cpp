#include "hecke/extraspecial.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace hecke {

namespace {

void require_quarter(Q4 m) {
    if (!m.is_strict_quarter() || !(m > Q4(0)))
        throw std::domain_error("extra-special parameter m must lie in (Z +/- 1/4)_{>0}");
}

struct Skeleton {
    long t = 0;
    long kappa = 0;
    int eps = 0;
    std::vector<long> alpha, beta, gamma;
    std::vector<long> arm_end;   // row length of hook i
    std::vector<long> leg_end;   // column height of hook i
    std::vector<long> strip_len; // s_i >= 0
};

// Row lengths of the union of nested hooks and strips; throws if the union
// is not a Young diagram.
Partition assemble(const Skeleton& sk) {
    for (long i = 1; i < sk.t; ++i)
        if (sk.arm_end[i] >= sk.arm_end[i - 1] || sk.leg_end[i] >= sk.leg_end[i - 1])
            throw std::domain_error("not a valid extra-special pair: hooks do not nest");
    std::vector<long> rows;
    long max_leg = 0;
    for (long h : sk.leg_end) max_leg = std::max(max_leg, h);
    long nrows = std::max(max_leg, sk.t + sk.kappa);
    for (long r = 1; r <= nrows; ++r) {
        long base = 0;  // legs passing through row r
        for (long j = 0; j < sk.t; ++j)
            if (sk.leg_end[j] >= r) ++base;
        long len;
        if (r <= sk.t) {
            len = sk.arm_end[r - 1];
        } else {
            len = base;
            long s = (r <= sk.t + sk.kappa) ? sk.strip_len[r - sk.t - 1] : 0;
            if (s > 0) {
                if (base != sk.t)
                    throw std::domain_error("not a valid extra-special pair: strip not supported");
                len = sk.t + s;
            }
        }
        if (len > 0) rows.push_back(len);
    }
    for (std::size_t i = 1; i < rows.size(); ++i)
        if (rows[i] > rows[i - 1])
            throw std::domain_error("not a valid extra-special pair: rows not decreasing");
    return Partition(std::move(rows));
}

}  // namespace

long ESPair::kappa() const {
    require_quarter(m);
    // m = kappa + (2 eps - 1)/4 with eps in {0,1}
    long q = m.quarters();  // 4 kappa +/- 1
    return (q + 1) % 4 == 0 ? (q + 1) / 4 : (q - 1) / 4;
}

int ESPair::epsilon() const {
    require_quarter(m);
    return (m.quarters() - 1) % 4 == 0 ? 1 : 0;
}

ESPair encode(const Partition& lambda) {
    if (!lambda.distinct_parts() || !lambda.uniform_parity(1))
        throw std::domain_error("encode: partition must have odd, distinct parts");
    // (1) jump sequence
    std::vector<long> j;
    for (long p : lambda.parts()) j.push_back((p - 1) / 2);
    // (2) dominant parity and excess
    std::vector<long> odd, even;
    for (long x : j) ((x % 2) ? odd : even).push_back(x);
    long kappa;
    int eps;
    if (odd.size() >= even.size()) {
        kappa = static_cast<long>(odd.size() - even.size());
        eps = 1;
    } else {
        kappa = static_cast<long>(even.size() - odd.size());
        eps = 0;
    }
    const std::vector<long>& dom = eps ? odd : even;
    const std::vector<long>& oth = eps ? even : odd;

    Skeleton sk;
    sk.kappa = kappa;
    sk.eps = eps;
    // (3) the kappa smallest parts of dominant parity (sequences are descending)
    sk.gamma.assign(dom.end() - kappa, dom.end());
    // (4) pair the rest
    sk.t = static_cast<long>(oth.size());
    sk.alpha.assign(dom.begin(), dom.end() - kappa);
    sk.beta = oth;
    if (static_cast<long>(sk.alpha.size()) != sk.t)
        throw std::domain_error("encode: parity bookkeeping failed");

    // (5) nested m-hooks: arm end from the hand filling, leg end from the foot
    for (long i = 1; i <= sk.t; ++i) {
        long a = sk.alpha[i - 1], b = sk.beta[i - 1];
        sk.arm_end.push_back(i + (a - eps) / 2 - kappa);
        sk.leg_end.push_back(i + kappa + (b - (1 - eps)) / 2);
        if (sk.arm_end.back() < i) throw std::domain_error("encode: hook arm underflow");
    }
    // (6) horizontal strips
    for (long i = 1; i <= kappa; ++i) {
        long g = sk.gamma[i - 1];
        long threshold = 2 * (kappa - i + 1) + eps;  // gamma below this gives an empty strip
        sk.strip_len.push_back(g >= threshold ? (g - eps) / 2 - (kappa - i) : 0);
    }
    // (7)
    ESPair out;
    out.m = Q4::from_quarters(4 * kappa + (eps ? 1 : -1));
    out.rho = assemble(sk);
    return out;
}

namespace {

Skeleton decompose(const ESPair& p) {
    require_quarter(p.m);
    Skeleton sk;
    sk.kappa = p.kappa();
    sk.eps = p.epsilon();
    const auto& rho = p.rho;
    Partition conj = rho.conjugate();
    // maximal prefix of principal hooks with leg length >= kappa
    long t = 0;
    while (rho.part(t) >= t + 1 && conj.part(t) - (t + 1) >= sk.kappa) ++t;
    sk.t = t;
    for (long i = 1; i <= t; ++i) {
        long arm = rho.part(i - 1) - i;   // >= 0
        long leg = conj.part(i - 1) - i;  // >= kappa
        sk.alpha.push_back(2 * (arm + sk.kappa) + sk.eps);
        sk.beta.push_back(2 * (leg - sk.kappa) + 1 - sk.eps);
        sk.arm_end.push_back(rho.part(i - 1));
        sk.leg_end.push_back(conj.part(i - 1));
    }
    // strip rows of the complement, at most kappa of them
    if (rho.part(t + sk.kappa) > t)
        throw std::domain_error("not a valid extra-special pair: more than kappa strip rows");
    for (long i = 1; i <= sk.kappa; ++i) {
        long s = std::max(rho.part(t + i - 1) - t, 0L);
        sk.strip_len.push_back(s);
        sk.gamma.push_back(s > 0 ? 2 * (sk.kappa + s - i) + sk.eps
                                 : 2 * (sk.kappa - i) + sk.eps);
    }
    return sk;
}

}  // namespace

Partition decode(const ESPair& p) {
    Skeleton sk = decompose(p);
    std::vector<long> j;
    j.insert(j.end(), sk.alpha.begin(), sk.alpha.end());
    j.insert(j.end(), sk.beta.begin(), sk.beta.end());
    j.insert(j.end(), sk.gamma.begin(), sk.gamma.end());
    std::sort(j.rbegin(), j.rend());
    for (std::size_t i = 1; i < j.size(); ++i)
        if (j[i] == j[i - 1])
            throw std::domain_error("not a valid extra-special pair: repeated jump");
    std::vector<long> parts;
    for (long x : j) parts.push_back(2 * x + 1);
    Partition lambda(std::move(parts));
    if ((static_cast<long>(lambda.length()) - sk.kappa) % 2 != 0)
        throw std::domain_error("not a valid extra-special pair: part count parity");
    return lambda;
}

HookStripDecomposition hook_strip_decomposition(const ESPair& p) {
    Skeleton sk = decompose(p);
    HookStripDecomposition out;
    out.t = sk.t;
    for (long i = 0; i < sk.t; ++i) {
        Q4 hand = Q4::from_quarters(2 * sk.alpha[i] - 1);       // (alpha - 1/2)/2
        Q4 foot = Q4::from_quarters(2 * sk.beta[i] - 1).abs();  // |beta - 1/2|/2
        out.hooks.emplace_back(hand, foot);
    }
    for (long i = 0; i < sk.kappa; ++i) {
        if (sk.strip_len[i] > 0)
            out.strips.emplace_back(Q4::from_quarters(2 * sk.gamma[i] - 1).abs());
        else
            out.strips.emplace_back(std::nullopt);
    }
    return out;
}

std::string render_decomposition(const ESPair& p) {
    Skeleton sk = decompose(p);
    MTableau t = mtableau_contents(p.m, p.rho);
    // label each cell: hook index if on row/column i <= t, else strip index
    std::vector<std::vector<std::string>> label(p.rho.length());
    for (std::size_t i = 0; i < p.rho.length(); ++i)
        label[i].resize(p.rho.parts()[i]);
    for (std::size_t i = 0; i < p.rho.length(); ++i) {
        for (long jj = 0; jj < p.rho.parts()[i]; ++jj) {
            long hook = std::min<long>(static_cast<long>(i) + 1, jj + 1);
            if (hook <= sk.t)
                label[i][jj] = "H" + std::to_string(hook);
            else
                label[i][jj] = "S" + std::to_string(static_cast<long>(i) + 1 - sk.t);
        }
    }
    std::size_t w = 0;
    for (auto& row : t.fillings)
        for (auto& f : row) w = std::max(w, f.str().size() + 3);
    std::ostringstream os;
    for (std::size_t i = 0; i < t.fillings.size(); ++i) {
        for (std::size_t jj = 0; jj < t.fillings[i].size(); ++jj) {
            std::string s = t.fillings[i][jj].str() + ":" + label[i][jj];
            os << s << std::string(w + 1 - s.size(), ' ');
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace hecke
