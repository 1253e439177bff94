#include "rackh/permutation.hpp"

#include <numeric>
#include <stdexcept>

namespace rackh {

Permutation::Permutation(int n) : img_(n) {
    if (n < 0) throw std::invalid_argument("Permutation: negative degree");
    std::iota(img_.begin(), img_.end(), 1);
}

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size(), false);
    for (int v : img_) {
        if (v < 1 || v > degree() || seen[v - 1]) throw std::invalid_argument("Permutation: not a bijection of {1..n}");
        seen[v - 1] = true;
    }
}

int Permutation::sign() const {
    int inv = 0;
    for (int i = 0; i < degree(); ++i)
        for (int j = i + 1; j < degree(); ++j)
            if (img_[i] > img_[j]) ++inv;
    return inv % 2 ? -1 : 1;
}

Permutation Permutation::inverse() const {
    std::vector<int> r(img_.size());
    for (int i = 1; i <= degree(); ++i) r[img_[i - 1] - 1] = i;
    return Permutation(std::move(r));
}

Permutation Permutation::compose(const Permutation &other) const {
    if (degree() != other.degree()) throw std::invalid_argument("Permutation: degree mismatch in composition");
    std::vector<int> r(img_.size());
    for (int i = 1; i <= degree(); ++i) r[i - 1] = img_[other(i) - 1];
    return Permutation(std::move(r));
}

Permutation concat(const Permutation &a, const Permutation &b) {
    const int p = a.degree();
    std::vector<int> r;
    r.reserve(p + b.degree());
    for (int i = 1; i <= p; ++i) r.push_back(a(i));
    for (int i = 1; i <= b.degree(); ++i) r.push_back(p + b(i));
    return Permutation(std::move(r));
}

Permutation cycle_asc(int n, int a, int b) {
    if (a < 1 || b > n || a > b) throw std::invalid_argument("cycle_asc: bad range");
    std::vector<int> r(n);
    std::iota(r.begin(), r.end(), 1);
    for (int i = a; i < b; ++i) r[i - 1] = i + 1;
    r[b - 1] = a;
    return Permutation(std::move(r));
}

Permutation cycle_desc(int n, int b, int a) {
    if (a < 1 || b > n || a > b) throw std::invalid_argument("cycle_desc: bad range");
    return cycle_asc(n, a, b).inverse();
}

Permutation transposition(int n, int a, int b) {
    if (a < 1 || b < 1 || a > n || b > n) throw std::invalid_argument("transposition: out of range");
    std::vector<int> r(n);
    std::iota(r.begin(), r.end(), 1);
    std::swap(r[a - 1], r[b - 1]);
    return Permutation(std::move(r));
}

bool is_shuffle(const Permutation &s, int p1, int p2) {
    if (s.degree() != p1 + p2) return false;
    for (int i = 1; i < p1; ++i)
        if (s(i) > s(i + 1)) return false;
    for (int i = p1 + 1; i < p1 + p2; ++i)
        if (s(i) > s(i + 1)) return false;
    return true;
}

std::vector<Permutation> shuffles(int p1, int p2, ShuffleClass cls) {
    if (p1 < 0 || p2 < 0) throw std::invalid_argument("shuffles: negative block size");
    const int n = p1 + p2;
    std::vector<Permutation> out;
    if (p1 == 0 || p2 == 0) {
        // one degenerate shuffle; classified per the frozen convention
        bool keep = cls == ShuffleClass::All || (p2 == 0 ? cls == ShuffleClass::TopFixed
                                                         : cls == ShuffleClass::LeftMax);
        if (p1 == 0 && p2 == 0 && cls == ShuffleClass::LeftMax) keep = false;
        if (keep) out.emplace_back(n);
        return out;
    }
    // choose the value set of the first block
    std::vector<int> pick(p1);
    for (int i = 0; i < p1; ++i) pick[i] = i + 1;
    for (;;) {
        std::vector<int> img(n);
        std::vector<bool> used(n + 1, false);
        for (int i = 0; i < p1; ++i) {
            img[i] = pick[i];
            used[pick[i]] = true;
        }
        int j = p1;
        for (int v = 1; v <= n; ++v)
            if (!used[v]) img[j++] = v;
        Permutation s(std::move(img));
        bool top = s(n) == n;
        if (cls == ShuffleClass::All || (cls == ShuffleClass::TopFixed) == top) out.push_back(std::move(s));
        // next p1-subset of {1..n}
        int i = p1 - 1;
        while (i >= 0 && pick[i] == n - (p1 - 1 - i)) --i;
        if (i < 0) break;
        ++pick[i];
        for (int k = i + 1; k < p1; ++k) pick[k] = pick[k - 1] + 1;
    }
    return out;
}

Permutation alpha(const Permutation &s, const Permutation &g, int p1, int p2, int p3) {
    if (!is_shuffle(s, p1, p2 + p3) || !is_shuffle(g, p2, p3))
        throw std::invalid_argument("alpha: arguments outside stated shuffle sets");
    return s.compose(concat(Permutation(p1), g));
}

Permutation beta(const Permutation &s, const Permutation &g, int p1, int p2, int p3) {
    if (!is_shuffle(s, p1 + p2, p3) || !is_shuffle(g, p1, p2))
        throw std::invalid_argument("beta: arguments outside stated shuffle sets");
    return s.compose(concat(g, Permutation(p3)));
}

Permutation phi(const Permutation &s, int i) {
    const int n1 = s.degree(); // n+1
    if (i < 1 || i > n1) throw std::invalid_argument("phi: i out of range");
    Permutation full = cycle_desc(n1, n1, s(i)).compose(s).compose(cycle_asc(n1, i, n1));
    // the composite fixes n+1; drop it
    std::vector<int> img(full.images().begin(), full.images().end() - 1);
    return Permutation(std::move(img));
}

std::pair<Permutation, int> psi(const Permutation &s, int i) { return {phi(s, i), s(i)}; }

Permutation nu(const Permutation &s, int i) {
    const int n1 = s.degree() + 1;
    if (i < 1 || i > n1) throw std::invalid_argument("nu: i out of range");
    return cycle_desc(n1, i, 1).compose(concat(Permutation(1), s));
}

Permutation xi(const Permutation &s, int i) {
    const int n1 = s.degree() + 1;
    if (i < 1 || i > n1) throw std::invalid_argument("xi: i out of range");
    return cycle_asc(n1, i, n1).compose(concat(s, Permutation(1)));
}

std::pair<Permutation, int> kappa(const Permutation &s, int i) {
    if (i < 1 || i + 1 > s.degree()) throw std::invalid_argument("kappa: i out of range");
    return {transposition(s.degree(), s(i), s(i + 1)).compose(s), i};
}

} // namespace rackh
