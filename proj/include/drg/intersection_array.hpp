#pragma once

// Intersection arrays of distance-regular graphs and the parametric families
// the tool knows how to generate. An array is immutable once constructed;
// construction performs full feasibility validation and derives the shell
// counts.

#include "drg/numbers.hpp"

#include <string>
#include <vector>

namespace drg {

class IntersectionArray {
public:
    // Text form "b_0,...,b_{D-1};c_1,...,c_D", whitespace insensitive.
    static IntersectionArray parse(const std::string& text);
    static IntersectionArray create(std::vector<long long> b, std::vector<long long> c);

    int diameter() const { return static_cast<int>(b_.size()); }
    long long degree() const { return b_[0]; }

    long long b(int i) const;   // 0 <= i <= D, with b(D) = 0
    long long c(int i) const;   // 0 <= i <= D, with c(0) = 0
    long long a(int i) const;   // k - b(i) - c(i)

    // Shell sizes k_0..k_D around any vertex.
    const std::vector<BigInt>& shell_sizes() const { return k_; }
    const BigInt& vertex_count() const { return n_; }
    const BigInt& edge_count() const { return m_; }

    // Edges between shell i-1 and shell i: e_i = k_i c_i, 1 <= i <= D.
    BigInt shell_boundary(int i) const;

    bool bipartite() const;     // exactly when every a_i is zero
    std::string to_string() const;

    // Non-fatal oddities: sequences that fail the monotonicity every known
    // graph satisfies, without being arithmetically infeasible.
    const std::vector<std::string>& warnings() const { return warnings_; }

private:
    IntersectionArray() = default;
    std::vector<long long> b_;   // b_0..b_{D-1}
    std::vector<long long> c_;   // c_1..c_D stored at 0..D-1
    std::vector<BigInt> k_;
    BigInt n_;
    BigInt m_;
    std::vector<std::string> warnings_;
};

// Family reference "name" or "name:p1,p2" (e.g. "petersen", "hamming:3,2").
struct FamilySpec {
    std::string name;
    std::vector<long long> params;

    static FamilySpec parse(const std::string& text);
    std::string to_string() const;
};

// Known families: complete:n, cycle:n, hamming:m,q, johnson:m,q, odd:m,
// petersen, dodecahedron, biggs-smith. Parameter errors and unsupported
// names raise ValidationError.
IntersectionArray generate_family(const FamilySpec& spec);

} // namespace drg
