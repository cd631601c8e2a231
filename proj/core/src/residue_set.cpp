#include "circulant/residue_set.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

#include "circulant/errors.hpp"

namespace circulant {

using detail::u128;

namespace {

void check_modulus(int m) {
    if (m < 1 || m > detail::kMaxModulus)
        throw std::invalid_argument("modulus must be in [1, 128], got " +
                                    std::to_string(m));
}

void check_same_modulus(const ResidueSet& a, const ResidueSet& b) {
    if (a.modulus() != b.modulus())
        throw std::invalid_argument("modulus mismatch: " +
                                    std::to_string(a.modulus()) + " vs " +
                                    std::to_string(b.modulus()));
}

void check_nonempty(const ResidueSet& c, const char* op) {
    if (c.empty())
        throw std::invalid_argument(std::string(op) + ": empty input set");
}

}  // namespace

ResidueSet::ResidueSet(int modulus) : modulus_(modulus), bits_(0) {
    check_modulus(modulus);
}

ResidueSet::ResidueSet(int modulus, std::initializer_list<int> members)
    : ResidueSet(modulus, std::vector<int>(members)) {}

ResidueSet::ResidueSet(int modulus, const std::vector<int>& members)
    : modulus_(modulus), bits_(0) {
    check_modulus(modulus);
    for (int r : members) {
        if (r < 0 || r >= modulus)
            throw std::invalid_argument("residue " + std::to_string(r) +
                                        " out of range for modulus " +
                                        std::to_string(modulus));
        bits_ = detail::set_bit(bits_, r);
    }
}

ResidueSet ResidueSet::full(int modulus) {
    check_modulus(modulus);
    return from_bits(modulus, detail::low_mask(modulus));
}

ResidueSet ResidueSet::from_bits(int modulus, u128 bits) {
    check_modulus(modulus);
    ResidueSet s(modulus);
    s.bits_ = bits & detail::low_mask(modulus);
    return s;
}

std::vector<int> ResidueSet::members() const {
    std::vector<int> out;
    out.reserve(static_cast<size_t>(size()));
    detail::for_each_bit(bits_, [&](int r) { out.push_back(r); });
    return out;
}

int ResidueSet::min_member() const {
    if (empty()) throw std::invalid_argument("min_member: empty set");
    return detail::countr_zero(bits_);
}

ResidueSet ResidueSet::with(int r) const {
    if (r < 0 || r >= modulus_)
        throw std::invalid_argument("residue out of range");
    return from_bits(modulus_, detail::set_bit(bits_, r));
}

ResidueSet ResidueSet::without(int r) const {
    if (r < 0 || r >= modulus_)
        throw std::invalid_argument("residue out of range");
    return from_bits(modulus_, bits_ & ~(u128{1} << r));
}

ResidueSet ResidueSet::shifted(int g) const {
    int s = ((g % modulus_) + modulus_) % modulus_;
    return from_bits(modulus_, detail::rotl_mod(bits_, s, modulus_));
}

ResidueSet ResidueSet::intersect(const ResidueSet& other) const {
    check_same_modulus(*this, other);
    return from_bits(modulus_, bits_ & other.bits_);
}

ResidueSet ResidueSet::unite(const ResidueSet& other) const {
    check_same_modulus(*this, other);
    return from_bits(modulus_, bits_ | other.bits_);
}

ResidueSet ResidueSet::minus(const ResidueSet& other) const {
    check_same_modulus(*this, other);
    return from_bits(modulus_, bits_ & ~other.bits_);
}

bool ResidueSet::is_subset_of(const ResidueSet& other) const {
    check_same_modulus(*this, other);
    return (bits_ & ~other.bits_) == 0;
}

bool ResidueSet::disjoint_with(const ResidueSet& other) const {
    check_same_modulus(*this, other);
    return (bits_ & other.bits_) == 0;
}

std::string ResidueSet::str() const {
    std::ostringstream out;
    out << modulus_ << ":{";
    bool first = true;
    detail::for_each_bit(bits_, [&](int r) {
        if (!first) out << ',';
        out << r;
        first = false;
    });
    out << '}';
    return out.str();
}

ResidueSet ResidueSet::parse(std::string_view text) {
    auto colon = text.find(':');
    if (colon == std::string_view::npos)
        throw ParseError("residue set must look like m:{r1,r2,...}: '" +
                         std::string(text) + "'");
    int m = 0;
    {
        auto head = text.substr(0, colon);
        auto [p, ec] = std::from_chars(head.data(), head.data() + head.size(), m);
        if (ec != std::errc{} || p != head.data() + head.size())
            throw ParseError("bad modulus in '" + std::string(text) + "'");
    }
    if (m < 1 || m > detail::kMaxModulus)
        throw ParseError("modulus out of range in '" + std::string(text) + "'");

    auto body = text.substr(colon + 1);
    if (!body.empty() && body.front() == '{') {
        if (body.back() != '}')
            throw ParseError("unterminated '{' in '" + std::string(text) + "'");
        body = body.substr(1, body.size() - 2);
    }

    ResidueSet out(m);
    size_t pos = 0;
    while (pos < body.size()) {
        auto comma = body.find(',', pos);
        auto item = body.substr(pos, comma == std::string_view::npos
                                         ? std::string_view::npos
                                         : comma - pos);
        int r = 0;
        auto [p, ec] = std::from_chars(item.data(), item.data() + item.size(), r);
        if (ec != std::errc{} || p != item.data() + item.size())
            throw ParseError("bad residue '" + std::string(item) + "' in '" +
                             std::string(text) + "'");
        if (r < 0 || r >= m)
            throw ParseError("residue " + std::to_string(r) +
                             " out of range in '" + std::string(text) + "'");
        if (out.contains(r))
            throw ParseError("duplicate residue " + std::to_string(r) + " in '" +
                             std::string(text) + "'");
        out = out.with(r);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
        if (pos == body.size())
            throw ParseError("trailing comma in '" + std::string(text) + "'");
    }
    return out;
}

ResidueSet sumset(const ResidueSet& a, const ResidueSet& b) {
    check_same_modulus(a, b);
    int m = a.modulus();
    u128 acc = 0;
    detail::for_each_bit(a.bits(), [&](int r) {
        acc |= detail::rotl_mod(b.bits(), r, m);
    });
    return ResidueSet::from_bits(m, acc);
}

ResidueSet negate(const ResidueSet& a) {
    int m = a.modulus();
    u128 acc = 0;
    detail::for_each_bit(a.bits(), [&](int r) {
        acc = detail::set_bit(acc, r == 0 ? 0 : m - r);
    });
    return ResidueSet::from_bits(m, acc);
}

ResidueSet dilate(int c, const ResidueSet& a) {
    int m = a.modulus();
    int f = ((c % m) + m) % m;
    u128 acc = 0;
    detail::for_each_bit(a.bits(), [&](int r) {
        acc = detail::set_bit(acc, static_cast<int>((static_cast<long long>(f) * r) % m));
    });
    return ResidueSet::from_bits(m, acc);
}

ResidueSet difference(const ResidueSet& a, const ResidueSet& b) {
    return sumset(a, negate(b));
}

ResidueSet complement(const ResidueSet& a) {
    return ResidueSet::from_bits(a.modulus(),
                                 ~a.bits() & detail::low_mask(a.modulus()));
}

Subgroup::Subgroup(int modulus, int order, ResidueSet members)
    : modulus_(modulus), order_(order), members_(std::move(members)) {}

Subgroup Subgroup::of_order(int modulus, int order) {
    check_modulus(modulus);
    if (order < 1 || modulus % order != 0)
        throw std::invalid_argument("subgroup order " + std::to_string(order) +
                                    " does not divide modulus " +
                                    std::to_string(modulus));
    int g = modulus / order;
    u128 bits = 0;
    for (int x = 0; x < modulus; x += g) bits = detail::set_bit(bits, x);
    return Subgroup(modulus, order, ResidueSet::from_bits(modulus, bits));
}

std::vector<Subgroup> subgroups(int modulus) {
    check_modulus(modulus);
    std::vector<Subgroup> out;
    for (int d = 1; d <= modulus; ++d)
        if (modulus % d == 0) out.push_back(Subgroup::of_order(modulus, d));
    return out;
}

Subgroup period(const ResidueSet& c) {
    check_nonempty(c, "period");
    int m = c.modulus();
    // H(C) is a subgroup, so it is generated by its least positive element,
    // which divides m; scanning divisors ascending finds that generator.
    for (int g = 1; g < m; ++g) {
        if (m % g != 0) continue;
        if (detail::rotl_mod(c.bits(), g, m) == c.bits())
            return Subgroup::of_order(m, m / g);
    }
    return Subgroup::of_order(m, 1);
}

bool is_aperiodic(const ResidueSet& c) { return period(c).is_trivial(); }

namespace {

// Canonical split of C for subgroup H: the union of full cosets and the
// remainder. Accepts iff the remainder is empty or properly inside one coset.
std::optional<QuasiPeriodicWitness> witness_for(const ResidueSet& c,
                                                const Subgroup& h) {
    int m = c.modulus();
    u128 hbits = h.members().bits();
    u128 periodic = 0;
    for (int rep = 0; rep < h.generator(); ++rep) {
        u128 coset = detail::rotl_mod(hbits, rep, m);
        if ((c.bits() & coset) == coset) periodic |= coset;
    }
    u128 residual = c.bits() & ~periodic;
    std::optional<int> rep;
    if (residual != 0) {
        int cmin = detail::countr_zero(residual);
        u128 coset = detail::rotl_mod(hbits, cmin % h.generator(), m);
        if ((residual & ~coset) != 0) return std::nullopt;  // spills over cosets
        if (residual == coset) return std::nullopt;         // not proper
        rep = cmin;
    }
    return QuasiPeriodicWitness{h, ResidueSet::from_bits(m, periodic),
                                ResidueSet::from_bits(m, residual), rep};
}

}  // namespace

std::optional<QuasiPeriodicWitness> quasi_periodic_witness(const ResidueSet& c) {
    check_nonempty(c, "quasi_periodic_witness");
    auto subs = subgroups(c.modulus());
    for (auto it = subs.rbegin(); it != subs.rend(); ++it) {
        if (!it->is_proper() || it->is_trivial()) continue;
        if (auto w = witness_for(c, *it)) return w;
    }
    return std::nullopt;
}

std::vector<QuasiPeriodicWitness> quasi_periodic_witnesses(const ResidueSet& c) {
    check_nonempty(c, "quasi_periodic_witnesses");
    std::vector<QuasiPeriodicWitness> out;
    auto subs = subgroups(c.modulus());
    for (auto it = subs.rbegin(); it != subs.rend(); ++it) {
        if (!it->is_proper() || it->is_trivial()) continue;
        if (auto w = witness_for(c, *it)) out.push_back(std::move(*w));
    }
    return out;
}

bool is_quasi_periodic(const ResidueSet& c) {
    return quasi_periodic_witness(c).has_value();
}

std::optional<ArithmeticProgression> arithmetic_progression(const ResidueSet& a) {
    check_nonempty(a, "arithmetic_progression");
    int m = a.modulus();
    int k = a.size();
    if (k == 1) return ArithmeticProgression{a.min_member(), 1};
    for (int first = 0; first < m; ++first) {
        if (!a.contains(first)) continue;
        for (int step = 1; step < m; ++step) {
            u128 bits = 0;
            int x = first;
            bool ok = true;
            for (int i = 0; i < k; ++i) {
                if (!a.contains(x)) {
                    ok = false;
                    break;
                }
                bits = detail::set_bit(bits, x);
                x = (x + step) % m;
            }
            if (ok && bits == a.bits()) return ArithmeticProgression{first, step};
        }
    }
    return std::nullopt;
}

bool is_arithmetic_progression(const ResidueSet& a) {
    return arithmetic_progression(a).has_value();
}

KneserCheck kneser_check(const ResidueSet& a, const ResidueSet& b) {
    check_nonempty(a, "kneser_check");
    check_nonempty(b, "kneser_check");
    check_same_modulus(a, b);
    ResidueSet sum = sumset(a, b);
    Subgroup h = period(sum);
    int ah = sumset(a, h.members()).size();
    int bh = sumset(b, h.members()).size();
    bool bound = sum.size() >= ah + bh - h.order() &&
                 ah + bh - h.order() >= a.size() + b.size() - h.order();
    bool clause = sum.size() > a.size() + b.size() - 2 || !h.is_trivial();
    return KneserCheck{sum.size(), h.order(), bound, clause};
}

}  // namespace circulant
