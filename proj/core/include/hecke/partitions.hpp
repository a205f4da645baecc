#pragma once

#include <string>
#include <vector>

#include "hecke/qseries.hpp"

namespace hecke {

// Weakly decreasing list of positive parts; the empty list is the zero
// partition and is a first-class value.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<long> parts);

    const std::vector<long>& parts() const { return parts_; }
    std::size_t length() const { return parts_.size(); }
    long size() const;  // sum of parts
    bool empty() const { return parts_.empty(); }
    long part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

    Partition conjugate() const;
    bool distinct_parts() const;
    // all parts odd (parity 1) or all even (parity 0); vacuously true if empty
    bool uniform_parity(int parity) const;

    auto operator<=>(const Partition&) const = default;

    std::string str() const;                     // "[6,4,2]", "[]"
    static Partition parse(const std::string&);  // "6,4,2"; "" is zero

private:
    std::vector<long> parts_;
};

// All partitions of n (n >= 0), sorted.
std::vector<Partition> all_partitions(long n);

// Distinguished unipotent partitions for parameter m in (1/2)Z_{>=0} at
// rank n: partitions of 2n + floor(m^2) with distinct parts of parity
// opposite to 2m, and length at least floor(m).  Sorted.
std::vector<Partition> enumerate_distinguished(Q4 m, long n);
bool is_distinguished(Q4 m, const Partition& lambda, long n);

// Jump sequence (lambda - 1)/2, strictly decreasing; requires distinct
// parts of a single parity.
std::vector<Q4> jumps(const Partition& lambda);
// Inverse: lambda = 2j + 1.  parity: 1 for odd parts (integer jumps),
// 0 for even parts (half-integer jumps).
Partition from_jumps(const std::vector<Q4>& j, int parity);

// Coordinate multiplicity function of the positive residual point labelled
// by a distinguished partition, for delta in {0, 1/2, 1}: even function
// with h(x) = #{jumps >= x} for x > 0 and the delta-dependent value at 0.
MultiplicityFn htilde(Q4 delta, const Partition& lambda);

// m-tableau data for quarter-integral m > 0.
struct MTableau {
    Q4 m;
    Partition shape;
    std::vector<std::vector<Q4>> fillings;  // |m - i + j|
    std::vector<std::vector<Q4>> contents;  // m - i + j
    MultiplicityFn h_plus;                  // multiplicity of signed content x
    MultiplicityFn h_minus;                 // h_minus(x) = h_plus(-x)
};

MTableau mtableau_contents(Q4 m, const Partition& rho);

std::string render_tableau(const MTableau& t);

}  // namespace hecke
