#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hecke/numbers.hpp"

namespace hecke {

// Canonical element of the free abelian group generated by the cyclotomic
// polynomials Phi_d(v), together with a rational coefficient and a power
// of v.  q = v^2 throughout.
struct CycloFactored {
    Rational coeff = 1;          // nonzero
    long vexp = 0;               // exponent of v
    std::map<long, long> phi;    // d -> exponent of Phi_d(v), no zero entries

    bool is_one() const { return coeff == 1 && vexp == 0 && phi.empty(); }
    bool operator==(const CycloFactored& o) const = default;
};

// Equality modulo rational constants and powers of v (the q-rational part).
bool q_part_equal(const CycloFactored& a, const CycloFactored& b);

// (1 + sign*v^e) as a canonical product of Phi_d(v).  Requires e >= 1.
CycloFactored binomial_factor(int sign, long e);

CycloFactored mul(const CycloFactored& a, const CycloFactored& b);
CycloFactored inverse(const CycloFactored& a);
CycloFactored power(const CycloFactored& a, long k);

// Exact evaluation at a rational v0.  Throws if v0 is 0 or a root of a
// stored cyclotomic factor with nonzero exponent.
Rational evaluate(const CycloFactored& f, const Rational& v0);

// Coefficient vector of Phi_d(v) over Z (cached).
const std::vector<BigInt>& cyclotomic_coeffs(long d);

// Exponent of the q-level cyclotomic Phi_d(q) inside f, via
// Phi_d(q) = Phi_{2d}(v) for even d and Phi_d(q) = Phi_d(v) Phi_{2d}(v)
// for odd d.  Throws "not q-rational" when the odd-d pairing fails.
long cyclq_exponent(const CycloFactored& f, long d);

int mobius(long n);

// Finitely supported integer-valued function on (1/4)Z.
class MultiplicityFn {
public:
    MultiplicityFn() = default;

    int at(Q4 x) const;
    void add(Q4 x, int v);
    void set(Q4 x, int v);
    bool empty() const { return m_.empty(); }
    std::size_t support_size() const { return m_.size(); }
    const std::map<Q4, int>& entries() const { return m_; }
    Q4 max_support() const;  // throws if empty

    MultiplicityFn operator+(const MultiplicityFn& o) const;
    MultiplicityFn operator-(const MultiplicityFn& o) const;
    MultiplicityFn& operator+=(const MultiplicityFn& o);
    MultiplicityFn operator*(int k) const;
    bool operator==(const MultiplicityFn& o) const { return m_ == o.m_; }

    bool is_even_function() const;  // f(x) == f(-x)

    std::string str() const;

private:
    std::map<Q4, int> m_;
};

// Cauchy convolution (m1*m2)(z) = sum_{x+y=z} m1(x) m2(y).
MultiplicityFn convolve(const MultiplicityFn& a, const MultiplicityFn& b);
// Left translation (T_x m)(y) = m(y-x).
MultiplicityFn translate(const MultiplicityFn& m, Q4 x);
// Delta_y m = 2m - T_y m - T_{-y} m.
MultiplicityFn delta_op(const MultiplicityFn& m, Q4 y);
MultiplicityFn dirac(Q4 x, int v = 1);
// s_window(p)(k) = (-1)^{p-|k|} for integer |k| <= p, else 0.
MultiplicityFn s_window(long p);

// Raw record of binomial factors (1 + sign*v^e)^exp accumulated during a
// residue computation, before canonicalization.
struct FactorLedger {
    std::map<std::pair<int, long>, long> factors;  // (sign, e>=1) -> exponent
    long num_vanished = 0;  // vanishing numerator binomials (squares count twice)
    long den_vanished = 0;

    Rational coeff = 1;  // rational constants picked up while normalizing
    long vexp = 0;       // v-powers picked up while normalizing

    // Record (1 + sign*v^e)^exp for any integer e; e <= 0 is normalized via
    // 1 + s v^{-e} = s v^{-e} (1 + s v^{e}).  A vanishing factor (e == 0,
    // sign == -1) must not be recorded here.
    void push(int sign, long e, long exp);
};

struct LedgerAnalysis {
    CycloFactored canonical;
    MultiplicityFn mult;       // exponents of (1 - q^x), x in (1/2)Z_{>0}
    MultiplicityFn even_part;  // exponents of (1 + q^x) in the M_ev component
    MultiplicityFn odd_cycl;   // exponents of Phi_{2k}(q), k in Z + 1/2
};

LedgerAnalysis ledger_analyze(const FactorLedger& ledger);

// Decomposition of a (1-q^x)-exponent vector into its (1+q^*) content and
// the residual odd-support part; mult keys are q-exponents.
void split_even(const MultiplicityFn& mult, MultiplicityFn& even_out,
                MultiplicityFn& odd_minus_out);

// cycl(k) = sum_{s>=1} mult(s*2k)-style sum per eq. of cyclotomic
// multiplicities; keys of the result lie in Z + 1/2.
MultiplicityFn odd_cycl_from_mult(const MultiplicityFn& mult);

// Moebius inversion of odd_cycl back to a (1-q^{2k})-exponent vector
// supported on half-odd-integers.
MultiplicityFn mult_from_odd_cycl(const MultiplicityFn& odd);

std::string cyclo_str(const CycloFactored& f);

}  // namespace hecke
