#include "diamond/lattice.hpp"

#include <cmath>

namespace diamond::lattice {

Word Word::from_rank(const LatticeParams& p, int depth, BigInt rank) {
    std::vector<std::uint8_t> d(static_cast<std::size_t>(depth));
    const int base = p.digits();
    for (int level = depth - 1; level >= 0; --level) {
        d[static_cast<std::size_t>(level)] = static_cast<std::uint8_t>(rank % base);
        rank /= base;
    }
    if (rank != 0) throw OutOfRange("Word::from_rank: rank too large for depth");
    return Word(p, std::move(d));
}

BigInt Word::rank(const LatticeParams& p) const {
    BigInt r = 0;
    for (auto d : digits_) r = r * p.digits() + d;
    return r;
}

Word Word::child(const LatticeParams& p, int i, int j) const {
    if (i < 1 || i > p.b || j < 1 || j > p.s) throw OutOfRange("Word::child: (i,j) out of range");
    Word w = *this;
    w.digits_.push_back(static_cast<std::uint8_t>((i - 1) * p.s + (j - 1)));
    return w;
}

BigInt count_paths(const LatticeParams& p, int n) {
    if (n < 0) throw OutOfRange("count_paths: n must be >= 0");
    // exponent (s^n - 1)/(s - 1), read as n when s = 1
    BigInt exponent = 0;
    BigInt spow = 1;
    for (int k = 0; k < n; ++k) {
        exponent += spow;
        spow *= p.s;
    }
    return boost::multiprecision::pow(BigInt(p.b), static_cast<unsigned>(exponent));
}

BigInt count_edges(const LatticeParams& p, int n) {
    if (n < 0) throw OutOfRange("count_edges: n must be >= 0");
    return boost::multiprecision::pow(BigInt(p.b) * p.s, static_cast<unsigned>(n));
}

BigInt count_generation_vertices(const LatticeParams& p, int k) {
    if (k < 1) throw OutOfRange("count_generation_vertices: k must be >= 1");
    return boost::multiprecision::pow(BigInt(p.b), static_cast<unsigned>(k)) *
           boost::multiprecision::pow(BigInt(p.s), static_cast<unsigned>(k - 1)) * (p.s - 1);
}

BigInt count_vertices(const LatticeParams& p, int n) {
    BigInt total = 0;
    for (int k = 1; k <= n; ++k) total += count_generation_vertices(p, k);
    return total;
}

BigInt path_vertex_count(const LatticeParams& p, int n) {
    return boost::multiprecision::pow(BigInt(p.s), static_cast<unsigned>(n)) - 1;
}

double vertex_on_path_probability(const LatticeParams& p, const VertexAddress& a) {
    return std::pow(static_cast<double>(p.b), -static_cast<double>(a.generation()));
}

double first_order_overlap_sum(const LatticeParams& p, int n) {
    if (n < 0) throw OutOfRange("first_order_overlap_sum: n must be >= 0");
    const double ratio = static_cast<double>(p.s) / p.b;
    const double pref = static_cast<double>(p.s - 1) / p.s;
    double sum = 0.0, pow_k = 1.0;
    for (int k = 1; k <= n; ++k) {
        pow_k *= ratio;
        sum += pref * pow_k;
    }
    return sum;
}

std::vector<SubgraphAddress> children(const LatticeParams& p, const SubgraphAddress& g,
                                      int depth_of_g) {
    std::vector<SubgraphAddress> out;
    if (depth_of_g <= 0) return out;
    out.reserve(static_cast<std::size_t>(p.digits()));
    for (int i = 1; i <= p.b; ++i)
        for (int j = 1; j <= p.s; ++j) out.push_back({g.word.child(p, i, j)});
    return out;
}

std::vector<VertexAddress> interior_vertices(const LatticeParams& p, const SubgraphAddress& g,
                                             int depth_of_g) {
    std::vector<VertexAddress> out;
    if (depth_of_g <= 0) return out;
    out.reserve(static_cast<std::size_t>(p.b * (p.s - 1)));
    for (int i = 1; i <= p.b; ++i)
        for (int j = 1; j < p.s; ++j) out.push_back({g.word, i, j});
    return out;
}

namespace {

std::vector<Path> cross(std::vector<Path> prefixes, const std::vector<Path>& suffixes) {
    std::vector<Path> out;
    out.reserve(prefixes.size() * suffixes.size());
    for (const auto& a : prefixes) {
        for (const auto& b : suffixes) {
            Path p = a;
            p.choices.insert(p.choices.end(), b.choices.begin(), b.choices.end());
            p.vertices.insert(p.vertices.end(), b.vertices.begin(), b.vertices.end());
            p.edges.insert(p.edges.end(), b.edges.begin(), b.edges.end());
            out.push_back(std::move(p));
        }
    }
    return out;
}

std::vector<Path> enumerate_copy(const LatticeParams& p, const Word& w, int k) {
    if (k == 0) {
        Path leaf;
        leaf.edges.push_back({w});
        return {leaf};
    }
    std::vector<Path> out;
    for (int i = 1; i <= p.b; ++i) {
        Path prefix;
        prefix.choices.emplace_back(w, i);
        for (int j = 1; j < p.s; ++j) prefix.vertices.push_back({w, i, j});
        std::vector<Path> acc{prefix};
        for (int j = 1; j <= p.s; ++j)
            acc = cross(std::move(acc), enumerate_copy(p, w.child(p, i, j), k - 1));
        out.insert(out.end(), std::make_move_iterator(acc.begin()),
                   std::make_move_iterator(acc.end()));
    }
    return out;
}

} // namespace

std::vector<Path> enumerate_paths(const LatticeParams& p, int n, std::uint64_t cap) {
    if (n < 0) throw OutOfRange("enumerate_paths: n must be >= 0");
    if (count_paths(p, n) > cap)
        throw CapExceeded("enumerate_paths: path count exceeds cap");
    return enumerate_copy(p, Word{}, n);
}

} // namespace diamond::lattice
