#include "hecke/partitions.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace hecke {

Partition::Partition(std::vector<long> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw std::domain_error("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::domain_error("partition parts must be weakly decreasing");
    }
}

long Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0L); }

Partition Partition::conjugate() const {
    std::vector<long> out;
    for (long j = 1; !parts_.empty() && j <= parts_[0]; ++j) {
        long h = 0;
        while (h < static_cast<long>(parts_.size()) && parts_[h] >= j) ++h;
        out.push_back(h);
    }
    return Partition(std::move(out));
}

bool Partition::distinct_parts() const {
    for (std::size_t i = 1; i < parts_.size(); ++i)
        if (parts_[i] == parts_[i - 1]) return false;
    return true;
}

bool Partition::uniform_parity(int parity) const {
    for (long p : parts_)
        if ((p % 2 + 2) % 2 != parity) return false;
    return true;
}

std::string Partition::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ",";
        os << parts_[i];
    }
    os << "]";
    return os.str();
}

Partition Partition::parse(const std::string& s) {
    std::vector<long> parts;
    std::string tok;
    std::istringstream is(s);
    while (std::getline(is, tok, ',')) {
        if (tok.empty()) continue;
        try {
            parts.push_back(std::stol(tok));
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed partition part '" + tok + "'");
        }
    }
    std::sort(parts.rbegin(), parts.rend());
    return Partition(std::move(parts));
}

namespace {

void gen_partitions(long n, long max_part, std::vector<long>& cur,
                    std::vector<Partition>& out) {
    if (n == 0) {
        out.emplace_back(cur);
        return;
    }
    for (long p = std::min(n, max_part); p >= 1; --p) {
        cur.push_back(p);
        gen_partitions(n - p, p, cur, out);
        cur.pop_back();
    }
}

// distinct parts of fixed parity, generated largest-first
void gen_distinct_parity(long n, long max_part, int parity, std::vector<long>& cur,
                         std::vector<Partition>& out) {
    if (n == 0) {
        out.emplace_back(cur);
        return;
    }
    long p = std::min(n, max_part);
    if (p % 2 != parity) --p;
    for (; p >= 1; p -= 2) {
        cur.push_back(p);
        gen_distinct_parity(n - p, p - 2, parity, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> all_partitions(long n) {
    if (n < 0) throw std::domain_error("all_partitions: negative size");
    std::vector<Partition> out;
    std::vector<long> cur;
    gen_partitions(n, n, cur, out);
    if (n == 0) out = {Partition()};
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Partition> enumerate_distinguished(Q4 m, long n) {
    if (!(m >= Q4(0)) || !m.is_half_integer())
        throw std::domain_error("enumerate_distinguished: m must be in (1/2)Z_{>=0}");
    if (n < 0) throw std::domain_error("enumerate_distinguished: negative rank");
    long m2_floor = (m.quarters() * m.quarters()) / 16;  // floor(m^2)
    long total = 2 * n + m2_floor;
    int parity = m.is_integer() ? 1 : 0;  // integer m: odd parts; half m: even parts
    long min_len = m.floor();
    std::vector<Partition> out;
    if (total == 0) {
        if (min_len <= 0) out = {Partition()};
        return out;
    }
    std::vector<Partition> raw;
    std::vector<long> cur;
    gen_distinct_parity(total, total, parity, cur, raw);
    for (auto& p : raw)
        if (static_cast<long>(p.length()) >= min_len) out.push_back(p);
    std::sort(out.begin(), out.end());
    return out;
}

bool is_distinguished(Q4 m, const Partition& lambda, long n) {
    auto all = enumerate_distinguished(m, n);
    return std::find(all.begin(), all.end(), lambda) != all.end();
}

std::vector<Q4> jumps(const Partition& lambda) {
    if (!lambda.distinct_parts()) throw std::domain_error("jumps: parts must be distinct");
    if (!lambda.uniform_parity(1) && !lambda.uniform_parity(0))
        throw std::domain_error("jumps: parts must have a single parity");
    std::vector<Q4> j;
    for (long p : lambda.parts()) j.push_back(Q4::half(p - 1));
    return j;
}

Partition from_jumps(const std::vector<Q4>& j, int parity) {
    std::vector<long> parts;
    for (Q4 x : j) {
        Q4 part = x * 2 + Q4(1);
        if (!part.is_integer()) throw std::domain_error("from_jumps: jumps not on half grid");
        long p = part.to_integer();
        if ((p % 2 + 2) % 2 != parity) throw std::domain_error("from_jumps: parity mismatch");
        parts.push_back(p);
    }
    std::sort(parts.rbegin(), parts.rend());
    return Partition(std::move(parts));
}

MultiplicityFn htilde(Q4 delta, const Partition& lambda) {
    if (!(delta == Q4(0) || delta == q4_half() || delta == Q4(1)))
        throw std::domain_error("htilde: delta must be 0, 1/2 or 1");
    int parity = delta.is_integer() ? 1 : 0;
    if (!lambda.distinct_parts() || !lambda.uniform_parity(parity))
        throw std::domain_error("htilde: partition not distinguished for delta");
    if (delta.is_integer() && (lambda.size() % 2 + 2) % 2 != (delta.to_integer() % 2))
        throw std::domain_error("htilde: |lambda| parity does not match delta");
    auto js = jumps(lambda);
    MultiplicityFn h;
    // h(x) = #{jumps >= x} for x > 0, extended evenly
    for (Q4 x = delta.is_integer() ? Q4(1) : q4_half(); !js.empty() && x <= js.front();
         x = x + Q4(1)) {
        int c = 0;
        for (Q4 j : js)
            if (j >= x) ++c;
        if (c) {
            h.add(x, c);
            h.add(-x, c);
        }
    }
    if (delta.is_integer()) {
        long h1 = h.at(Q4(1));
        long d = delta.to_integer();
        long m0 = (h1 + 1 - d) / 2;  // floor
        if (m0 > 0) h.add(Q4(0), static_cast<int>(2 * m0));
    }
    return h;
}

MTableau mtableau_contents(Q4 m, const Partition& rho) {
    if (!m.is_strict_quarter() || !(m > Q4(0)))
        throw std::domain_error("mtableau_contents: m must be quarter-integral and positive");
    MTableau t;
    t.m = m;
    t.shape = rho;
    for (std::size_t i = 0; i < rho.length(); ++i) {
        std::vector<Q4> frow, crow;
        for (long j = 1; j <= rho.parts()[i]; ++j) {
            Q4 c = m - Q4(static_cast<long>(i) + 1) + Q4(j);
            crow.push_back(c);
            frow.push_back(c.abs());
            t.h_plus.add(c, 1);
        }
        t.fillings.push_back(std::move(frow));
        t.contents.push_back(std::move(crow));
    }
    for (auto& [x, v] : t.h_plus.entries()) t.h_minus.add(-x, v);
    return t;
}

std::string render_tableau(const MTableau& t) {
    std::size_t w = 0;
    for (auto& row : t.fillings)
        for (auto& f : row) w = std::max(w, f.str().size());
    std::ostringstream os;
    for (auto& row : t.fillings) {
        for (auto& f : row) {
            std::string s = f.str();
            os << std::string(w - s.size(), ' ') << s << ' ';
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace hecke
