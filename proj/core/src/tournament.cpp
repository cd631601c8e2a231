#include "circulant/tournament.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "circulant/errors.hpp"

namespace circulant {

using detail::u128;

SymbolSet::SymbolSet(ResidueSet members) : members_(std::move(members)) {
    int m = members_.modulus();
    if (m < 3 || m % 2 == 0)
        throw std::invalid_argument("symbol set modulus must be odd and >= 3, got " +
                                    std::to_string(m));
    if (members_.contains(0))
        throw std::invalid_argument("symbol set must not contain 0: " +
                                    members_.str());
    int n = (m - 1) / 2;
    for (int j = 1; j <= n; ++j) {
        bool a = members_.contains(j);
        bool b = members_.contains(m - j);
        if (a == b)
            throw std::invalid_argument(
                "symbol set must contain exactly one of {" + std::to_string(j) +
                "," + std::to_string(m - j) + "}: " + members_.str());
    }
    // |J| = n follows from one-per-pair, but keep the direct check.
    if (members_.size() != n)
        throw std::invalid_argument("symbol set mod " + std::to_string(m) +
                                    " must have " + std::to_string(n) +
                                    " members: " + members_.str());
}

SymbolSet SymbolSet::cyclic(int n) {
    if (n < 1) throw std::invalid_argument("cyclic symbol set needs n >= 1");
    std::vector<int> v(static_cast<size_t>(n));
    for (int j = 1; j <= n; ++j) v[static_cast<size_t>(j - 1)] = j;
    return SymbolSet(ResidueSet(2 * n + 1, v));
}

SymbolSet SymbolSet::parse(std::string_view text) {
    auto colon = text.find(':');
    std::string braced(text);
    if (colon != std::string_view::npos && colon + 1 < text.size() &&
        text[colon + 1] != '{') {
        braced = std::string(text.substr(0, colon + 1)) + "{" +
                 std::string(text.substr(colon + 1)) + "}";
    }
    try {
        return SymbolSet(ResidueSet::parse(braced));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

void for_each_symbol_set(int n, const std::function<void(const SymbolSet&)>& fn) {
    if (n < 1) throw std::invalid_argument("symbol set enumeration needs n >= 1");
    if (n > 62) throw std::invalid_argument("symbol set enumeration capped at n = 62");
    int m = 2 * n + 1;
    for (std::uint64_t choice = 0; choice < (std::uint64_t{1} << n); ++choice) {
        u128 bits = 0;
        for (int j = 1; j <= n; ++j) {
            bool flip = (choice >> (n - j)) & 1;  // bit for pair {j, m-j}
            bits = detail::set_bit(bits, flip ? m - j : j);
        }
        fn(SymbolSet(ResidueSet::from_bits(m, bits)));
    }
}

std::vector<SymbolSet> enumerate_symbol_sets(int n) {
    std::vector<SymbolSet> out;
    out.reserve(n <= 20 ? (size_t{1} << n) : 0);
    for_each_symbol_set(n, [&](const SymbolSet& s) { out.push_back(s); });
    return out;
}

CirculantTournament::CirculantTournament(SymbolSet symbol)
    : symbol_(std::move(symbol)), order_(symbol_.modulus()) {
    out_.resize(static_cast<size_t>(order_));
    in_.resize(static_cast<size_t>(order_));
    u128 jbits = symbol_.members().bits();
    u128 njbits = negate(symbol_.members()).bits();
    for (int v = 0; v < order_; ++v) {
        out_[static_cast<size_t>(v)] = detail::rotl_mod(jbits, v, order_);
        in_[static_cast<size_t>(v)] = detail::rotl_mod(njbits, v, order_);
    }
}

VertexPartition::VertexPartition(int order, std::vector<std::vector<int>> classes)
    : order_(order), classes_(std::move(classes)) {
    if (order < 1) throw std::invalid_argument("partition order must be >= 1");
    class_of_.assign(static_cast<size_t>(order), -1);
    for (auto& cls : classes_) {
        if (cls.empty())
            throw std::invalid_argument("partition class must be nonempty");
        std::sort(cls.begin(), cls.end());
        for (int v : cls) {
            if (v < 0 || v >= order)
                throw std::invalid_argument("partition vertex " + std::to_string(v) +
                                            " out of range");
            if (class_of_[static_cast<size_t>(v)] != -1)
                throw std::invalid_argument("partition classes overlap at vertex " +
                                            std::to_string(v));
            class_of_[static_cast<size_t>(v)] = 0;  // provisional
        }
    }
    for (int v = 0; v < order; ++v)
        if (class_of_[static_cast<size_t>(v)] == -1)
            throw std::invalid_argument("partition misses vertex " +
                                        std::to_string(v));
    std::sort(classes_.begin(), classes_.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    for (int k = 0; k < class_count(); ++k)
        for (int v : classes_[static_cast<size_t>(k)])
            class_of_[static_cast<size_t>(v)] = k;
}

VertexPartition VertexPartition::from_class_ids(const std::vector<int>& ids) {
    if (ids.empty()) throw std::invalid_argument("empty class id vector");
    std::vector<std::vector<int>> classes;
    std::vector<int> slot;  // label -> position in classes, by first occurrence
    for (int v = 0; v < static_cast<int>(ids.size()); ++v) {
        int label = ids[static_cast<size_t>(v)];
        if (label < 0) throw std::invalid_argument("negative class label");
        if (label >= static_cast<int>(slot.size())) slot.resize(static_cast<size_t>(label) + 1, -1);
        if (slot[static_cast<size_t>(label)] == -1) {
            slot[static_cast<size_t>(label)] = static_cast<int>(classes.size());
            classes.emplace_back();
        }
        classes[static_cast<size_t>(slot[static_cast<size_t>(label)])].push_back(v);
    }
    return VertexPartition(static_cast<int>(ids.size()), std::move(classes));
}

VertexPartition VertexPartition::parse(std::string_view text, int order) {
    std::vector<std::vector<int>> classes;
    size_t pos = 0;
    while (pos < text.size()) {
        if (text[pos] != '{')
            throw ParseError("expected '{' at position " + std::to_string(pos) +
                             " in partition '" + std::string(text) + "'");
        auto close = text.find('}', pos);
        if (close == std::string_view::npos)
            throw ParseError("unterminated class in partition '" +
                             std::string(text) + "'");
        std::vector<int> cls;
        std::string body(text.substr(pos + 1, close - pos - 1));
        std::istringstream in(body);
        std::string item;
        while (std::getline(in, item, ',')) {
            try {
                size_t used = 0;
                int v = std::stoi(item, &used);
                if (used != item.size()) throw std::invalid_argument(item);
                cls.push_back(v);
            } catch (const std::exception&) {
                throw ParseError("bad vertex '" + item + "' in partition '" +
                                 std::string(text) + "'");
            }
        }
        classes.push_back(std::move(cls));
        pos = close + 1;
        if (pos < text.size()) {
            if (text[pos] != '|')
                throw ParseError("expected '|' between classes in '" +
                                 std::string(text) + "'");
            ++pos;
        }
    }
    try {
        return VertexPartition(order, std::move(classes));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

int VertexPartition::singular_count() const {
    int count = 0;
    for (const auto& cls : classes_)
        if (cls.size() == 1) ++count;
    return count;
}

int singular_count(const VertexPartition& p) { return p.singular_count(); }

std::string VertexPartition::str() const {
    std::ostringstream out;
    for (size_t k = 0; k < classes_.size(); ++k) {
        if (k) out << '|';
        out << '{';
        for (size_t i = 0; i < classes_[k].size(); ++i) {
            if (i) out << ',';
            out << classes_[k][i];
        }
        out << '}';
    }
    return out.str();
}

void for_each_directed_triangle(const CirculantTournament& t,
                                const std::function<void(int, int, int)>& fn) {
    int n = t.order();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (!t.arc(u, v)) continue;
            for (int w = u + 1; w < n; ++w) {
                if (w == v) continue;
                if (t.arc(v, w) && t.arc(w, u)) fn(u, v, w);
            }
        }
}

std::vector<std::array<int, 3>> directed_triangles(const CirculantTournament& t) {
    std::vector<std::array<int, 3>> out;
    for_each_directed_triangle(t, [&](int u, int v, int w) {
        out.push_back({u, v, w});
    });
    return out;
}

bool alspach_check(const CirculantTournament& t) {
    int n = t.order();
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            if (u == v || !t.arc(u, v)) continue;
            u128 witnesses = t.out_mask(v) & t.in_mask(u);
            if (witnesses == 0) return false;
        }
    return true;
}

namespace {

void check_partition_fits(const CirculantTournament& t, const VertexPartition& p) {
    if (p.order() != t.order())
        throw std::invalid_argument("partition covers " + std::to_string(p.order()) +
                                    " vertices, tournament has " +
                                    std::to_string(t.order()));
}

}  // namespace

std::vector<std::pair<int, int>> external_arcs(const CirculantTournament& t,
                                               const VertexPartition& p) {
    check_partition_fits(t, p);
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < t.order(); ++u)
        for (int v = 0; v < t.order(); ++v)
            if (u != v && p.class_of(u) != p.class_of(v) && t.arc(u, v))
                out.emplace_back(u, v);
    return out;
}

bool is_externally_c3_free(const CirculantTournament& t,
                           const VertexPartition& p) {
    check_partition_fits(t, p);
    int n = t.order();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (!t.arc(u, v)) continue;
            int a = p.class_of(u), b = p.class_of(v);
            for (int w = u + 1; w < n; ++w) {
                if (w == v || !t.arc(v, w) || !t.arc(w, u)) continue;
                int c = p.class_of(w);
                if (a != b && b != c && a != c) return false;
            }
        }
    return true;
}

bool is_externally_acyclic(const CirculantTournament& t,
                           const VertexPartition& p) {
    check_partition_fits(t, p);
    int n = t.order();
    // Iterative DFS 3-coloring over the implicit external-arc digraph.
    std::vector<int> color(static_cast<size_t>(n), 0);  // 0 white, 1 grey, 2 black
    std::vector<std::pair<int, int>> stack;             // (vertex, next candidate)
    for (int start = 0; start < n; ++start) {
        if (color[static_cast<size_t>(start)] != 0) continue;
        stack.emplace_back(start, 0);
        color[static_cast<size_t>(start)] = 1;
        while (!stack.empty()) {
            int u = stack.back().first;
            int next = stack.back().second;
            int push = -1;
            while (next < n) {
                int v = next++;
                if (v == u || p.class_of(u) == p.class_of(v) || !t.arc(u, v))
                    continue;
                if (color[static_cast<size_t>(v)] == 1) return false;  // back arc
                if (color[static_cast<size_t>(v)] == 0) {
                    push = v;
                    break;
                }
            }
            stack.back().second = next;
            if (push == -1) {
                color[static_cast<size_t>(u)] = 2;
                stack.pop_back();
            } else {
                color[static_cast<size_t>(push)] = 1;
                stack.emplace_back(push, 0);
            }
        }
    }
    return true;
}

}  // namespace circulant
