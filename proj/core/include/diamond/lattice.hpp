#pragma once

// Recursive diamond graphs D_n: addressing of edges, subgraph copies and
// vertices, exact counting, and small-n path enumeration. The graph is never
// materialized; everything works on packed address words. A word lists one
// (branch, segment) digit per level, coarsest level first, so a SubgraphAddress
// of word length n-k names a copy of D_k inside D_n (an element of G_{k,n}).

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "diamond/errors.hpp"

namespace diamond::lattice {

using BigInt = boost::multiprecision::cpp_int;

struct LatticeParams {
    int b = 2;  // branching number
    int s = 2;  // segment number

    LatticeParams(int branching, int segments) : b(branching), s(segments) {
        if (b < 2) throw OutOfRange("LatticeParams: b must be >= 2 (b = 1 is trivial)");
        if (s < 1) throw OutOfRange("LatticeParams: s must be >= 1");
        if (b * s > 64) throw OutOfRange("LatticeParams: b*s > 64 unsupported");
    }
    int digits() const { return b * s; }
    friend bool operator==(const LatticeParams&, const LatticeParams&) = default;
};

// Packed word of (i, j) digits, coarsest level first. digit = (i-1)*s + (j-1).
class Word {
  public:
    Word() = default;
    Word(const LatticeParams& p, std::vector<std::uint8_t> digits)
        : digits_(std::move(digits)) {
        for (auto d : digits_)
            if (d >= p.digits()) throw OutOfRange("Word: digit out of range");
    }

    static Word from_rank(const LatticeParams& p, int depth, BigInt rank);
    BigInt rank(const LatticeParams& p) const;

    int depth() const { return static_cast<int>(digits_.size()); }
    std::uint8_t digit(int level) const { return digits_[static_cast<std::size_t>(level)]; }
    int branch(const LatticeParams& p, int level) const { return digit(level) / p.s + 1; }
    int segment(const LatticeParams& p, int level) const { return digit(level) % p.s + 1; }

    Word child(const LatticeParams& p, int i, int j) const;  // append (i, j)

    const std::vector<std::uint8_t>& digits() const { return digits_; }
    friend bool operator==(const Word&, const Word&) = default;

  private:
    std::vector<std::uint8_t> digits_;
};

// An edge of D_n is a depth-n word.
struct EdgeAddress {
    Word word;
};

// A copy g of D_k inside D_n carries a word of length n-k.
struct SubgraphAddress {
    Word word;
};

// Interior vertex g<>(i, j) of the copy g, with branch i in 1..b and slot
// j in 1..s-1. Its generation is word-length + 1; a copy of D_k in D_n holds
// vertices of global generation n-k+1 .. n (convention pinned by tests).
struct VertexAddress {
    Word parent;
    int branch = 1;
    int slot = 1;

    int generation() const { return parent.depth() + 1; }
};

// --- counting -------------------------------------------------------------

BigInt count_paths(const LatticeParams& p, int n);                  // b^{(s^n-1)/(s-1)}
BigInt count_edges(const LatticeParams& p, int n);                  // (bs)^n
BigInt count_generation_vertices(const LatticeParams& p, int k);    // b^k s^{k-1}(s-1)
BigInt count_vertices(const LatticeParams& p, int n);               // sum over generations
BigInt path_vertex_count(const LatticeParams& p, int n);            // s^n - 1 per path

double vertex_on_path_probability(const LatticeParams& p, const VertexAddress& a);

// Sum over vertices of P(a)^2 = sum_{k=1..n} ((s-1)/s) (s/b)^k.
double first_order_overlap_sum(const LatticeParams& p, int n);

// --- address arithmetic ----------------------------------------------------

std::vector<SubgraphAddress> children(const LatticeParams& p, const SubgraphAddress& g,
                                      int depth_of_g);
std::vector<VertexAddress> interior_vertices(const LatticeParams& p, const SubgraphAddress& g,
                                             int depth_of_g);

// --- enumeration oracle (small n) -------------------------------------------

// A directed path stores its branch choice at every D_1 copy it traverses,
// ordered by the copy's word (preorder), plus the interior vertices visited
// and the depth-n edges traversed.
struct Path {
    std::vector<std::pair<Word, int>> choices;  // (copy word, chosen branch)
    std::vector<VertexAddress> vertices;
    std::vector<EdgeAddress> edges;
};

inline constexpr std::uint64_t kDefaultPathCap = 1'000'000;

std::vector<Path> enumerate_paths(const LatticeParams& p, int n,
                                  std::uint64_t cap = kDefaultPathCap);

} // namespace diamond::lattice
