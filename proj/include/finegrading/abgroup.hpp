#pragma once

#include <gmpxx.h>

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace fgr {

using Integer = mpz_class;

/// A finitely generated abelian group by generators and relations.
/// Each relation is a vector of length num_generators, meaning the
/// corresponding integer combination of generators vanishes.
struct Presentation {
    long num_generators = 0;
    std::vector<std::vector<Integer>> relations;
};

class GrpElt;

/// Finitely generated abelian group in invariant-factor normal form
/// Z^r x Z_{d1} x ... x Z_{dk} with d1 | d2 | ... and each d_i >= 2.
/// Element coordinates list the free part first, then the torsion part.
class FinAbGroup {
public:
    FinAbGroup() = default;  // trivial group Z^0

    /// Smith-normal-form reduction of a presentation. The unimodular row
    /// transform is retained so presentation generators can be mapped into
    /// normalized coordinates (from_presentation).
    static FinAbGroup normalize(const Presentation& p);
    static FinAbGroup free_group(long rank);
    static FinAbGroup torsion_group(const std::vector<long>& orders);

    long free_rank() const;
    const std::vector<Integer>& torsion() const;
    long coord_count() const;
    bool is_trivial() const { return coord_count() == 0; }
    bool is_finite() const { return free_rank() == 0; }
    Integer order() const;  // finite groups only

    GrpElt zero() const;
    /// Element from normalized coordinates (free first, torsion reduced).
    GrpElt element(std::vector<Integer> coords) const;
    /// i-th normalized generator.
    GrpElt generator(size_t i) const;
    /// Image of a presentation-coordinate vector under the quotient map.
    GrpElt from_presentation(const std::vector<Integer>& gen_coords) const;

    bool isomorphic_to(const FinAbGroup& o) const;
    /// Identity of the underlying group object (element compatibility).
    bool same_group(const FinAbGroup& o) const { return impl_ == o.impl_; }

    /// All elements, finite groups only, in deterministic mixed-radix order.
    std::vector<GrpElt> elements() const;

    /// "Z^r x Z_{d1} x ..."; trivial group renders as "Z^0".
    std::string str() const;

private:
    struct Impl;
    std::shared_ptr<const Impl> impl_;
    friend class GrpElt;
    explicit FinAbGroup(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
};

class GrpElt {
public:
    GrpElt() = default;

    const FinAbGroup& owner() const { return owner_; }
    const std::vector<Integer>& coords() const { return c_; }
    bool is_zero() const;

    GrpElt operator+(const GrpElt& o) const;
    GrpElt operator-(const GrpElt& o) const;
    GrpElt operator-() const;
    GrpElt times(const Integer& k) const;

    /// Least m >= 1 with m*this = 0, or nullopt when infinite.
    std::optional<Integer> element_order() const;

    bool operator==(const GrpElt& o) const;
    bool operator!=(const GrpElt& o) const { return !(*this == o); }
    bool operator<(const GrpElt& o) const;  // lexicographic, for map keys

    std::string str() const;  // "(c1,...,ck)"

private:
    FinAbGroup owner_;
    std::vector<Integer> c_;
    friend class FinAbGroup;
    GrpElt(FinAbGroup owner, std::vector<Integer> c) : owner_(std::move(owner)), c_(std::move(c)) {}
    void check_same(const GrpElt& o) const;
};

/// Smith normal form of A with the left transform: returns diagonal entries
/// (divisibility chain, zeros last) and unimodular U with U*A*V diagonal.
struct SmithResult {
    std::vector<Integer> diag;               // size min(rows, cols)
    std::vector<std::vector<Integer>> left;  // U, rows x rows
};
SmithResult smith_normal_form(std::vector<std::vector<Integer>> a);

/// Does v lie in the integer column span of cols? (all vectors same length)
bool lattice_contains(const std::vector<std::vector<Integer>>& cols, const std::vector<Integer>& v);

/// Does elt lie in the subgroup generated by gens?
bool subgroup_contains(const std::vector<GrpElt>& gens, const GrpElt& elt);

}  // namespace fgr
