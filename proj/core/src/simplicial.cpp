#include "omcat/simplicial.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace omcat {

SimplicialComplex::SimplicialComplex(unsigned n, std::vector<std::uint64_t> facets)
    : SimplicialComplex(n, std::move(facets), false) {}

SimplicialComplex::SimplicialComplex(unsigned n, std::vector<std::uint64_t> facets, bool make_void)
    : n_(n), is_void_(make_void) {
    if (n > 64) throw DimensionError("complex ground set too large");
    if (make_void) return;
    std::sort(facets.begin(), facets.end());
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
    // drop non-maximal faces
    for (std::uint64_t f : facets) {
        bool maximal = true;
        for (std::uint64_t g : facets)
            if (g != f && (f & ~g) == 0) {
                maximal = false;
                break;
            }
        if (maximal) facets_.push_back(f);
    }
}

bool SimplicialComplex::has_face(std::uint64_t s) const {
    if (is_void_) return false;
    for (std::uint64_t f : facets_)
        if ((s & ~f) == 0) return true;
    return facets_.empty() ? s == 0 : false;
}

bool SimplicialComplex::is_pure() const {
    if (is_void_ || facets_.empty()) return true;
    int k = std::popcount(facets_[0]);
    for (std::uint64_t f : facets_)
        if (std::popcount(f) != k) return false;
    return true;
}

int SimplicialComplex::dim() const {
    if (is_void_) return -2;
    int d = -1;
    for (std::uint64_t f : facets_) d = std::max(d, std::popcount(f) - 1);
    return d;
}

std::vector<std::uint64_t> SimplicialComplex::all_faces() const {
    std::set<std::uint64_t> faces;
    if (is_void_) return {};
    faces.insert(0);
    for (std::uint64_t f : facets_) {
        // subsets of f
        std::uint64_t s = f;
        while (true) {
            faces.insert(s);
            if (s == 0) break;
            s = (s - 1) & f;
        }
    }
    return {faces.begin(), faces.end()};
}

std::vector<long> SimplicialComplex::f_vector() const {
    if (is_void_) return {};
    std::vector<long> f(static_cast<std::size_t>(dim() + 2), 0);
    for (std::uint64_t s : all_faces()) ++f[static_cast<std::size_t>(std::popcount(s))];
    return f;
}

namespace {
void enumerate_monomials(const SimplicialComplex& k, unsigned degree, unsigned from,
                         Monomial& current, std::uint64_t support, std::vector<Monomial>& out) {
    if (degree == 0) {
        out.push_back(current);
        return;
    }
    for (unsigned i = from; i < k.ground_size(); ++i) {
        std::uint64_t s = support | (std::uint64_t(1) << i);
        if (!k.has_face(s)) continue;
        ++current[i];
        enumerate_monomials(k, degree - 1, i, current, s, out);
        --current[i];
    }
}
} // namespace

std::vector<Monomial> monomials_of_degree(const SimplicialComplex& k, unsigned degree) {
    std::vector<Monomial> out;
    if (k.is_void()) return out;
    Monomial current(k.ground_size(), 0);
    enumerate_monomials(k, degree, 0, current, 0, out);
    return out;
}

std::vector<long> h_vector(const SimplicialComplex& k) {
    if (k.is_void()) return {};
    std::vector<long> f = k.f_vector();
    const int dcap = k.dim() + 1; // h has entries h_0..h_dcap
    std::vector<long> h(static_cast<std::size_t>(dcap + 1), 0);
    // h_j = sum_i (-1)^(j-i) C(dcap-i, j-i) f_{i}
    auto binom = [](long a, long b) -> long {
        if (b < 0 || b > a) return 0;
        long r = 1;
        for (long i = 0; i < b; ++i) r = r * (a - i) / (i + 1);
        return r;
    };
    for (int j = 0; j <= dcap; ++j) {
        long acc = 0;
        for (int i = 0; i <= j; ++i) {
            long term = binom(dcap - i, j - i) * f[static_cast<std::size_t>(i)];
            acc += ((j - i) % 2 == 0) ? term : -term;
        }
        h[static_cast<std::size_t>(j)] = acc;
    }
    return h;
}

} // namespace omcat
