#pragma once

#include <utility>
#include <vector>

namespace rackh {

// One-line notation over {1..n}: images[i-1] = sigma(i).
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(int n); // identity
    explicit Permutation(std::vector<int> images);

    int degree() const { return static_cast<int>(img_.size()); }
    int operator()(int i) const { return img_[i - 1]; }
    const std::vector<int> &images() const { return img_; }

    int sign() const; // parity of the inversion count
    Permutation inverse() const;
    // (this o other)(i) = this(other(i))
    Permutation compose(const Permutation &other) const;

    bool operator==(const Permutation &) const = default;
    bool operator<(const Permutation &o) const { return img_ < o.img_; }

private:
    std::vector<int> img_;
};

// Blockwise concatenation: (a * b)(k) = a(k) for k <= p, p + b(k-p) above.
Permutation concat(const Permutation &a, const Permutation &b);

// Consecutive cycle (a a+1 ... b) in S_n: a -> a+1, ..., b -> a.  a == b gives id.
Permutation cycle_asc(int n, int a, int b);
// Consecutive cycle (b b-1 ... a) in S_n: b -> b-1, ..., a -> b.
Permutation cycle_desc(int n, int b, int a);
Permutation transposition(int n, int a, int b);

enum class ShuffleClass { All, TopFixed, LeftMax };

// (p1,p2)-shuffles: increasing on positions 1..p1 and p1+1..p1+p2.
// TopFixed: sigma(p1+p2) = p1+p2.  LeftMax: sigma(p1) = p1+p2.
// Degenerate blocks: id in Sh_{p,0} and Sh_{0,0} is TopFixed, id in Sh_{0,p} LeftMax.
std::vector<Permutation> shuffles(int p1, int p2, ShuffleClass cls);
bool is_shuffle(const Permutation &s, int p1, int p2);

// alpha(s,g) = s o (1_{p1} * g) for s in Sh_{p1,p2+p3}, g in Sh_{p2,p3}
Permutation alpha(const Permutation &s, const Permutation &g, int p1, int p2, int p3);
// beta(s,g) = s o (g * 1_{p3}) for s in Sh_{p1+p2,p3}, g in Sh_{p1,p2}
Permutation beta(const Permutation &s, const Permutation &g, int p1, int p2, int p3);

// phi(s,i) = (n+1 ... s(i)) o s o (i ... n+1), restricted to S_n (fixes n+1)
Permutation phi(const Permutation &s, int i);
std::pair<Permutation, int> psi(const Permutation &s, int i); // (phi(s,i), s(i))

// Change-of-variable maps: nu(s,i) = (i i-1 ... 1) o (1 * s),
// xi(s,i) = (i i+1 ... n+1) o (s * 1), kappa(s,i) = (s(i) s(i+1)) o s.
Permutation nu(const Permutation &s, int i);
Permutation xi(const Permutation &s, int i);
std::pair<Permutation, int> kappa(const Permutation &s, int i);

} // namespace rackh
