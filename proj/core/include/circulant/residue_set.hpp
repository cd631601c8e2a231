#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "circulant/bits.hpp"

// Exact set algebra over the cyclic group Z_m: sumsets, dilations, periods,
// and structural classification (periodic / aperiodic / quasi-periodic /
// arithmetic progression). Values are immutable and trivially shareable
// between threads; every operation is a pure function.

namespace circulant {

// A finite subset of Z_m together with its modulus. Stored as a 128-bit
// mask so the search core gets word-parallel set operations.
class ResidueSet {
public:
    // Empty set over Z_m.
    explicit ResidueSet(int modulus);
    ResidueSet(int modulus, std::initializer_list<int> members);
    ResidueSet(int modulus, const std::vector<int>& members);

    static ResidueSet full(int modulus);
    static ResidueSet from_bits(int modulus, detail::u128 bits);

    // Parses the textual form "m:{r1,r2,...}"; rejects out-of-range or
    // duplicate residues.
    static ResidueSet parse(std::string_view text);

    int modulus() const { return modulus_; }
    int size() const { return detail::popcount(bits_); }
    bool empty() const { return bits_ == 0; }
    bool contains(int r) const { return detail::test_bit(bits_, r); }
    detail::u128 bits() const { return bits_; }
    std::vector<int> members() const;
    int min_member() const;  // requires nonempty

    ResidueSet with(int r) const;
    ResidueSet without(int r) const;
    ResidueSet shifted(int g) const;  // {a+g mod m}

    ResidueSet intersect(const ResidueSet& other) const;
    ResidueSet unite(const ResidueSet& other) const;
    ResidueSet minus(const ResidueSet& other) const;
    bool is_subset_of(const ResidueSet& other) const;
    bool disjoint_with(const ResidueSet& other) const;

    bool operator==(const ResidueSet& other) const = default;

    // Canonical text "m:{r1,...}" with ascending residues.
    std::string str() const;

private:
    int modulus_;
    detail::u128 bits_;
};

// {a+b mod m : a in A, b in B}. Throws std::invalid_argument on modulus
// mismatch.
ResidueSet sumset(const ResidueSet& a, const ResidueSet& b);

// {-a mod m}.
ResidueSet negate(const ResidueSet& a);

// {c*a mod m}.
ResidueSet dilate(int c, const ResidueSet& a);

// A + (-B).
ResidueSet difference(const ResidueSet& a, const ResidueSet& b);

// Z_m \ A.
ResidueSet complement(const ResidueSet& a);

// A subgroup of Z_m: the multiples of m/order.
class Subgroup {
public:
    // Requires order | modulus.
    static Subgroup of_order(int modulus, int order);

    int modulus() const { return modulus_; }
    int order() const { return order_; }
    int generator() const { return modulus_ / order_; }
    const ResidueSet& members() const { return members_; }
    bool is_trivial() const { return order_ == 1; }
    bool is_proper() const { return order_ < modulus_; }

    bool operator==(const Subgroup& other) const = default;

private:
    Subgroup(int modulus, int order, ResidueSet members);
    int modulus_;
    int order_;
    ResidueSet members_;
};

// All subgroups of Z_m, sorted by order ascending (one per divisor of m).
std::vector<Subgroup> subgroups(int modulus);

// The stabilizer H(C) = {g : C+g = C}. C must be nonempty.
Subgroup period(const ResidueSet& c);

// H(C) = {0}.
bool is_aperiodic(const ResidueSet& c);

// A witnessed split C = C' u C'' for a nontrivial proper subgroup H:
// C' is the union of the H-cosets fully inside C and C'' the remainder,
// properly contained in a single H-coset (possibly empty).
struct QuasiPeriodicWitness {
    Subgroup subgroup;
    ResidueSet periodic_part;
    ResidueSet residual_part;
    std::optional<int> residual_coset_rep;  // min element of the residual part
};

// First witness found scanning nontrivial proper subgroups in decreasing
// order, or nullopt. C must be nonempty.
std::optional<QuasiPeriodicWitness> quasi_periodic_witness(const ResidueSet& c);

// Every accepting subgroup's witness, same scan order.
std::vector<QuasiPeriodicWitness> quasi_periodic_witnesses(const ResidueSet& c);

bool is_quasi_periodic(const ResidueSet& c);

struct ArithmeticProgression {
    int first;
    int step;  // nonzero
};

// Some (a,d) with A = {a + i*d : 0 <= i < |A|}, scanning a then d
// ascending; singletons report step 1. Nullopt if A is not an AP.
std::optional<ArithmeticProgression> arithmetic_progression(const ResidueSet& a);

bool is_arithmetic_progression(const ResidueSet& a);

struct KneserCheck {
    int sum_size;      // |A+B|
    int period_order;  // |H(A+B)|
    bool bound_holds;  // |A+B| >= |A+H|+|B+H|-|H| >= |A|+|B|-|H|
    bool periodicity_clause_holds;  // |A+B| <= |A|+|B|-2 implies H nontrivial
};

KneserCheck kneser_check(const ResidueSet& a, const ResidueSet& b);

}  // namespace circulant
