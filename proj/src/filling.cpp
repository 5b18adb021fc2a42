#include "nsmac/filling.hpp"

#include <algorithm>
#include <set>

namespace nsmac {

namespace {

void check_labels(const Filling& f, const Diagram& d) {
    const Int n = static_cast<Int>(d.n());
    if (f.labels.size() != d.boxes.size())
        throw std::invalid_argument("filling: label count does not match diagram");
    for (Int l : f.labels)
        if (l < 1 || l > n)
            throw std::invalid_argument("filling: label outside 1..n");
}

} // namespace

bool is_nonattacking(const Filling& f) {
    Diagram d = build_diagram(f.shape);
    check_labels(f, d);
    for (std::size_t b = 0; b < d.boxes.size(); ++b) {
        for (int a : d.earlier_attackers[b])
            if (f.labels[a] == f.labels[b]) return false;
        for (Int base : d.basement_labels_attacked[b])
            if (f.labels[b] == base) return false;
    }
    return true;
}

std::vector<Filling> enumerate_nonattacking(const Composition& c) {
    Diagram d = build_diagram(c);
    const Int n = static_cast<Int>(d.n());
    std::vector<Filling> out;
    std::vector<Int> labels(d.boxes.size(), 0);

    // Depth-first over boxes in reading order; per-box candidate labels are
    // whatever the already-placed attackers and the basement leave free.
    auto rec = [&](auto&& self, std::size_t k) -> void {
        if (k == d.boxes.size()) {
            out.push_back(Filling{c, labels});
            return;
        }
        std::vector<char> forbidden(n + 1, 0);
        for (int a : d.earlier_attackers[k]) forbidden[labels[a]] = 1;
        for (Int base : d.basement_labels_attacked[k]) forbidden[base] = 1;
        for (Int l = 1; l <= n; ++l)
            if (!forbidden[l]) {
                labels[k] = l;
                self(self, k + 1);
            }
        labels[k] = 0;
    };
    rec(rec, 0);
    return out;
}

WeightVector multiplicity(const Filling& f) {
    Diagram d = build_diagram(f.shape);
    check_labels(f, d);
    WeightVector m(f.shape.size(), 0);
    for (Int l : f.labels) ++m[l - 1];
    return m;
}

PointSet support_by_enumeration(const Composition& c) {
    PointSet s;
    for (const Filling& f : enumerate_nonattacking(c)) s.push_back(multiplicity(f));
    canonicalize(s);
    return s;
}

Filling relabel(const Filling& f, const std::vector<Int>& perm) {
    if (perm.size() != f.shape.size())
        throw std::invalid_argument("relabel: permutation length mismatch");
    Filling g = f;
    for (auto& l : g.labels) l = perm[l - 1];
    return g;
}

NuFamily::NuFamily(Composition base_, Int a, int m)
    : base(std::move(base_)), column_height(a), prefix_length(m) {
    for (Int x : base)
        if (x < 0) throw std::invalid_argument("NuFamily: base entries must be non-negative");
    if (a < 1) throw std::invalid_argument("NuFamily: column height must be >= 1");
    if (m < 2) throw std::invalid_argument("NuFamily: prefix length must be >= 2");
}

Composition NuFamily::member(int i) const {
    if (i < 1 || i > prefix_length)
        throw std::invalid_argument("NuFamily::member: index out of range");
    Composition nu(member_length(), 0);
    nu[i - 1] = column_height;
    std::copy(base.begin(), base.end(), nu.begin() + prefix_length);
    return nu;
}

Filling chain_flip(const NuFamily& fam, int i, const Filling& f) {
    if (i < 1 || i + 1 > fam.size())
        throw std::invalid_argument("chain_flip: index out of range");
    Composition hi = fam.member(i + 1);
    if (f.shape != hi)
        throw std::invalid_argument("chain_flip: filling does not have shape nu_{i+1}");
    if (!is_nonattacking(f))
        throw std::invalid_argument("chain_flip: input filling is attacking");
    Diagram d = build_diagram(hi);
    // Bottom box of the moving column reads first: row 1, and its column
    // (i+1 <= m) lies left of every base column.
    if (d.boxes.empty() || d.boxes[0] != Box{static_cast<Int>(i + 1), 1})
        throw std::invalid_argument("chain_flip: moving column has no bottom box");
    const Int lo = static_cast<Int>(i), hiLabel = static_cast<Int>(i + 1);
    if (f.labels[0] != hiLabel)
        throw std::invalid_argument(
            "chain_flip: bottom box of the moving column is not labeled i+1");

    // Greedy chain in reading order: extend while the next box labeled i or
    // i+1 attacks the current chain end.
    std::vector<std::size_t> chain{0};
    for (std::size_t k = 1; k < d.boxes.size(); ++k) {
        if (f.labels[k] != lo && f.labels[k] != hiLabel) continue;
        if (attacks(d.boxes[chain.back()], d.boxes[k])) chain.push_back(k);
    }
    std::vector<char> in_chain(d.boxes.size(), 0);
    for (std::size_t k : chain) in_chain[k] = 1;

    // Maximality, as the chain construction guarantees: no i/i+1 box outside
    // the chain attacks any chain member.
    for (std::size_t k = 0; k < d.boxes.size(); ++k) {
        if (in_chain[k] || (f.labels[k] != lo && f.labels[k] != hiLabel)) continue;
        for (std::size_t c : chain)
            if (attacks(d.boxes[k], d.boxes[c]))
                throw std::logic_error("chain_flip: greedy chain is not maximal");
    }

    // Flip i <-> i+1 on the chain; boxes transfer to nu_i verbatim because the
    // reading orders of the family members agree under the identification.
    Filling out{fam.member(i), f.labels};
    for (std::size_t k : chain)
        out.labels[k] = (out.labels[k] == lo) ? hiLabel : lo;

    if (!is_nonattacking(out))
        throw std::logic_error("chain_flip: flipped filling is attacking");
    return out;
}

Filling chain_flip(const Filling& f, int i) {
    const int m = i + 1;
    if (i < 1 || static_cast<std::size_t>(m) > f.shape.size())
        throw std::invalid_argument("chain_flip: index out of range");
    for (int k = 0; k < i; ++k)
        if (f.shape[k] != 0)
            throw std::invalid_argument("chain_flip: entries before the moving column must be zero");
    if (f.shape[m - 1] < 1)
        throw std::invalid_argument("chain_flip: moving column is empty");
    Composition base(f.shape.begin() + m, f.shape.end());
    return chain_flip(NuFamily(std::move(base), f.shape[m - 1], m), i, f);
}

namespace {

// Identified label vectors of all non-attacking fillings of nu_i, as a set.
std::set<std::vector<Int>> label_set(const NuFamily& fam, int i) {
    std::set<std::vector<Int>> s;
    for (const Filling& f : enumerate_nonattacking(fam.member(i)))
        s.insert(f.labels);
    return s;
}

std::set<std::vector<Int>> relabel_set(const std::set<std::vector<Int>>& s,
                                       std::size_t n, int a, int b) {
    std::vector<Int> perm(n);
    for (std::size_t v = 1; v <= n; ++v) perm[v - 1] = static_cast<Int>(v);
    std::swap(perm[a - 1], perm[b - 1]);
    std::set<std::vector<Int>> out;
    for (auto labels : s) {
        for (auto& l : labels) l = perm[l - 1];
        out.insert(std::move(labels));
    }
    return out;
}

} // namespace

bool verify_partial_sym(const NuFamily& fam, int i) {
    if (i < 1 || i + 1 > fam.size())
        throw std::invalid_argument("verify_partial_sym: index out of range");
    const std::size_t N = fam.member_length();
    auto Lnext = label_set(fam, i + 1);
    auto Lcur = label_set(fam, i);
    auto Lone = relabel_set(label_set(fam, 1), N, 1, i + 1);

    for (const auto& x : Lcur)
        if (Lone.count(x)) return false; // not disjoint
    if (Lcur.size() + Lone.size() != Lnext.size()) return false;
    for (const auto& x : Lcur)
        if (!Lnext.count(x)) return false;
    for (const auto& x : Lone)
        if (!Lnext.count(x)) return false;
    return true;
}

bool verify_reflection_inclusion(const NuFamily& fam, int i) {
    if (i < 1 || i + 1 > fam.size())
        throw std::invalid_argument("verify_reflection_inclusion: index out of range");
    PointSet supp = support_by_enumeration(fam.member(i));
    const std::size_t N = fam.member_length();
    WeightVector shift = sub(unit_vector(N, i + 1), unit_vector(N, i));
    PointSet shifted = translate(supp, shift);
    for (const auto& v : supp) {
        WeightVector w = simple_transposition(v, i);
        if (!point_set_contains(supp, w) && !point_set_contains(shifted, w))
            return false;
    }
    return true;
}

} // namespace nsmac
