#pragma once

#include <cstdint>
#include <optional>

#include "finegrading/involutions.hpp"

namespace fgr {

/// Support label of Q^{(x)m} as a 2m-bit vector: bit 2t is the x-exponent of
/// factor t, bit 2t+1 the y-exponent.
using HLabel = unsigned;

/// The commutation pairing on H = Z_2^{2m} (the standard symplectic form).
int beta_bits(int m, HLabel a, HLabel b);

/// Transvection x -> x + beta(x,v) v as a permutation table of H.
std::vector<HLabel> transvection_table(int m, HLabel v);

/// The full beta-symplectic group Sp(2m, 2) as permutation tables, generated
/// from transvections by closure. Practical for m <= 2 (orders 1, 6, 720).
const std::vector<std::vector<HLabel>>& symplectic_group(int m);

/// Tuple invariant [D, (d_1, ..., d_p)] data: D = Q^{(x)m} and the multiset
/// of labels of the d_i.
struct ITuple {
    int m = 0;
    std::vector<HLabel> labels;
};

/// Pair invariant [(D, tau), (d_1, ..., d_p)] data: additionally the sign
/// function of tau as a bit table (bit h set iff sign(h) = -1). The labels
/// must be all symmetric or all skew for tau.
struct I2Tuple {
    int m = 0;
    std::vector<HLabel> labels;
    std::uint64_t sign_bits = 0;
};

/// Canonical orbit representative; two tuples are equivalent iff keys match.
struct CanonicalClass {
    std::string key;
    int m = 0;
    std::vector<HLabel> labels;
    std::uint64_t sign_bits = 0;
    bool is_i2 = false;

    bool operator==(const CanonicalClass& o) const { return key == o.key; }
    bool operator<(const CanonicalClass& o) const { return key < o.key; }
    /// "[Q^2,(00|00,00|10)]" or "[(Q^2,orthogonal),(...)]".
    std::string display() const;
};

/// Least representative under translations by H, beta-symplectic maps, and
/// permutations (multiset semantics), by breadth-first orbit closure.
CanonicalClass canonicalize_I(const ITuple& t);
/// As above, with the sign function transported alongside; throws on tuples
/// mixing symmetric and skew labels.
CanonicalClass canonicalize_I2(const I2Tuple& t);

bool equivalent(const ITuple& a, const ITuple& b);
bool equivalent(const I2Tuple& a, const I2Tuple& b);

/// Bridges between bit labels and division-algebra group elements.
HLabel label_to_bits(const DivisionAlgebra& d, const GrpElt& h);
GrpElt bits_to_label(const DivisionAlgebra& d, HLabel h);
std::uint64_t sign_bits_of(const DivisionAlgebra& d, const GradedInvolution& tau);
std::string render_label_bits(int m, HLabel h);

/// A graded algebra automorphism of Q^{(x)m} given by its images of the
/// canonical representatives (one scalar multiple per support label).
struct GradedAutomorphism {
    std::vector<CycMatrix> images;  // indexed by HLabel
};

/// Realize a beta-symplectic permutation of H as a graded algebra
/// automorphism (generator images scaled so squares are preserved).
GradedAutomorphism realize_symplectic(const DivisionAlgebra& d, const std::vector<HLabel>& phi);

/// Exact multiplicativity check of a realized automorphism; checks all
/// representative pairs when all_pairs is set, generator pairs otherwise.
bool verify_automorphism(const DivisionAlgebra& d, const GradedAutomorphism& a, bool all_pairs);

/// Exhaustive matrix-level equivalence of tuples: search over the realized
/// symmetry group for a map taking one Delta-form to the other up to
/// homogeneous scaling. m <= 2.
bool matrix_equivalent_I(const DivisionAlgebra& d, const std::vector<HLabel>& a,
                         const std::vector<HLabel>& b);
/// As above with the involution-transport condition (both tuples relative to
/// the same reference involution).
bool matrix_equivalent_I2(const DivisionAlgebra& d, const GradedInvolution& tau,
                          const std::vector<HLabel>& a, const std::vector<HLabel>& b);

/// Combinatorial-vs-matrix-level agreement over all tuples with p <= max_p.
struct CrossValidation {
    long tuples = 0;
    long classes = 0;
    long disagreements = 0;
};
CrossValidation cross_validate_I(int m, int max_p);
CrossValidation cross_validate_I2(int m, int max_p, GradedInvolution::Kind kind);

/// A sequence of moves ('z' = twist by label, 't' = transvection along label)
/// carrying one sign table to another, if any exists.
std::optional<std::vector<std::pair<char, HLabel>>> find_sign_transport(int m, std::uint64_t from,
                                                                        std::uint64_t to);

}  // namespace fgr
