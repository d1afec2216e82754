#include "omcat/oracle.hpp"

#include <algorithm>
#include <bit>

namespace omcat {

namespace {

std::vector<Rat> zero_vec(std::size_t n) {
    return std::vector<Rat>(n, Rat(0));
}

void axpy(std::vector<Rat>& acc, const Rat& c, const std::vector<Rat>& v) {
    if (acc.size() != v.size()) throw InternalError("oracle vector size mismatch");
    for (std::size_t i = 0; i < v.size(); ++i) acc[i] += c * v[i];
}

} // namespace

PathAlgebraOracle::PathAlgebraOracle(const Program& p, const ParameterSpace& u, OracleOptions opts)
    : prog_(p), n_(p.n()) {
    p_topes_ = p.bounded_feasible_topes();
    if (p_topes_.size() > opts.max_topes)
        throw ResourceLimitError("oracle bound: |P| = " + std::to_string(p_topes_.size()) +
                                 " exceeds " + std::to_string(opts.max_topes));
    if (n_ > opts.max_ground)
        throw ResourceLimitError("oracle bound: n exceeds " + std::to_string(opts.max_ground));
    ParamCheck chk = is_parameter_space(u, p.underlying());
    if (!chk.ok)
        throw DomainError("param", "oracle needs a valid parameter space; singular on basis " +
                                       subset_str(chk.witness_basis, p.underlying().ground()));

    vertices_ = p.bounded_sign_vectors();
    for (std::size_t i = 0; i < vertices_.size(); ++i)
        vertex_index_[vertices_[i].neg_mask()] = i;
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        arrows_from_.emplace_back();
        for (unsigned c = 0; c < n_; ++c) {
            SignVector flipped = vertices_[i].flip(std::uint64_t(1) << c);
            auto it = vertex_index_.find(flipped.neg_mask());
            if (it == vertex_index_.end()) continue;
            arrows_from_[i].push_back(arrows_.size());
            arrows_.push_back({i, it->second, c});
        }
    }
    uperp_ = u.orthogonal_complement().theta();

    unsigned cutoff = 2 * (p.d() + n_) + opts.extra_degrees;
    modules_.resize(p_topes_.size());
    std::vector<std::vector<Laurent>> entries(p_topes_.size(),
                                              std::vector<Laurent>(p_topes_.size()));
    for (std::size_t a = 0; a < p_topes_.size(); ++a) {
        Module& mod = modules_[a];
        build_module(vertex_id(p_topes_[a]), mod);
        if (mod.terminal.size() > cutoff + 1)
            throw ResourceLimitError("oracle degree cutoff insufficient: path spaces still "
                                     "nonzero at degree " +
                                     std::to_string(mod.terminal.size() - 1));
        top_degree_ = std::max(top_degree_, static_cast<unsigned>(mod.terminal.size()) - 1);
        for (std::size_t b = 0; b < p_topes_.size(); ++b) {
            std::size_t target = vertex_id(p_topes_[b]);
            Laurent acc;
            for (std::size_t deg = 0; deg < mod.terminal.size(); ++deg) {
                long count = 0;
                for (std::size_t t : mod.terminal[deg])
                    if (t == target) ++count;
                if (count) acc = acc + Laurent::monomial(count, static_cast<int>(deg));
            }
            entries[a][b] = acc;
        }
    }
    dims_ = GradedMatrix(p_topes_, std::move(entries));
}

std::size_t PathAlgebraOracle::vertex_id(const SignVector& v) const {
    auto it = vertex_index_.find(v.neg_mask());
    if (it == vertex_index_.end())
        throw DomainError("oracle", v.str() + " is not a bounded sign vector");
    if (!(vertices_[it->second] == v)) throw InternalError("vertex table corrupted");
    return it->second;
}

void PathAlgebraOracle::build_module(std::size_t start_vertex, Module& mod) {
    mod.terminal.push_back({start_vertex});
    while (true) {
        const std::size_t deg = mod.terminal.size() - 1;
        const auto& basis_term = mod.terminal[deg];
        if (basis_term.empty()) break;

        // candidates: (basis element, arrow out of its terminal vertex)
        struct Cand {
            std::size_t basis_elem;
            std::size_t arrow;
        };
        std::vector<Cand> cands;
        std::map<std::pair<std::size_t, std::size_t>, std::size_t> cand_index;
        for (std::size_t b = 0; b < basis_term.size(); ++b)
            for (std::size_t ar : arrows_from_[basis_term[b]]) {
                cand_index[{b, ar}] = cands.size();
                cands.push_back({b, ar});
            }
        if (cands.empty()) {
            mod.action.emplace_back();
            mod.terminal.emplace_back();
            break;
        }

        // relation rows, grouped by the terminal vertex of the candidate
        std::vector<std::vector<Rat>> rel_rows;
        auto cand_terminal = [&](std::size_t ci) { return arrows_[cands[ci].arrow].to; };
        auto add_two_step = [&](std::vector<Rat>& row, std::size_t prev_basis_elem,
                                std::size_t arrow1, std::size_t arrow2, const Rat& coeff) {
            // expansion of (prev basis elem * arrow1) in the degree-deg basis
            if (deg == 0) throw InternalError("two-step relation at degree 0");
            const auto& act = mod.action[deg - 1];
            auto it = act.find({prev_basis_elem, arrow1});
            if (it == act.end()) throw InternalError("missing action entry");
            const std::vector<Rat>& expansion = it->second;
            for (std::size_t b = 0; b < expansion.size(); ++b) {
                if (expansion[b] == 0) continue;
                auto cit = cand_index.find({b, arrow2});
                if (cit == cand_index.end()) throw InternalError("missing candidate");
                row[cit->second] += coeff * expansion[b];
            }
        };

        if (deg >= 1) {
            const auto& prev_term = mod.terminal[deg - 1];
            for (std::size_t pb = 0; pb < prev_term.size(); ++pb) {
                std::size_t gamma = prev_term[pb];
                const SignVector& gv = vertices_[gamma];
                // squares and half-squares out of gamma
                for (unsigned i = 0; i < n_; ++i)
                    for (unsigned j = i + 1; j < n_; ++j) {
                        std::uint64_t bi = std::uint64_t(1) << i, bj = std::uint64_t(1) << j;
                        auto mid_i = vertex_index_.find(gv.flip(bi).neg_mask());
                        auto mid_j = vertex_index_.find(gv.flip(bj).neg_mask());
                        auto far = vertex_index_.find(gv.flip(bi | bj).neg_mask());
                        if (far == vertex_index_.end()) continue;
                        if (mid_i == vertex_index_.end() && mid_j == vertex_index_.end()) continue;
                        std::vector<Rat> row = zero_vec(cands.size());
                        auto arrow_id = [&](std::size_t from, std::size_t to) -> std::size_t {
                            for (std::size_t ar : arrows_from_[from])
                                if (arrows_[ar].to == to) return ar;
                            throw InternalError("missing arrow");
                        };
                        if (mid_i != vertex_index_.end())
                            add_two_step(row, pb, arrow_id(gamma, mid_i->second),
                                         arrow_id(mid_i->second, far->second), Rat(1));
                        if (mid_j != vertex_index_.end())
                            add_two_step(row, pb, arrow_id(gamma, mid_j->second),
                                         arrow_id(mid_j->second, far->second),
                                         mid_i != vertex_index_.end() ? Rat(-1) : Rat(1));
                        rel_rows.push_back(std::move(row));
                    }
                // theta relations from the orthogonal complement
                for (std::size_t w = 0; w < uperp_.rows(); ++w) {
                    std::vector<Rat> row = zero_vec(cands.size());
                    bool any = false;
                    for (unsigned i = 0; i < n_; ++i) {
                        if (uperp_.at(w, i) == 0) continue;
                        auto mid = vertex_index_.find(gv.flip(std::uint64_t(1) << i).neg_mask());
                        if (mid == vertex_index_.end()) continue;
                        auto arrow_id = [&](std::size_t from, std::size_t to) -> std::size_t {
                            for (std::size_t ar : arrows_from_[from])
                                if (arrows_[ar].to == to) return ar;
                            throw InternalError("missing arrow");
                        };
                        add_two_step(row, pb, arrow_id(gamma, mid->second),
                                     arrow_id(mid->second, gamma), uperp_.at(w, i));
                        any = true;
                    }
                    if (any) rel_rows.push_back(std::move(row));
                }
            }
        }

        // reduce the relation rows; candidates that are pivots get rewritten
        RatMatrix rel(rel_rows.size(), cands.size());
        for (std::size_t r = 0; r < rel_rows.size(); ++r)
            for (std::size_t c = 0; c < cands.size(); ++c) rel.at(r, c) = rel_rows[r][c];
        std::vector<std::size_t> pivots = rel.rref_inplace();
        std::vector<bool> is_pivot(cands.size(), false);
        for (std::size_t p : pivots) is_pivot[p] = true;

        std::vector<std::size_t> new_terminal;
        std::vector<std::size_t> new_index(cands.size(), SIZE_MAX);
        for (std::size_t c = 0; c < cands.size(); ++c)
            if (!is_pivot[c]) {
                new_index[c] = new_terminal.size();
                new_terminal.push_back(cand_terminal(c));
            }
        std::map<std::pair<std::size_t, std::size_t>, std::vector<Rat>> action;
        for (std::size_t c = 0; c < cands.size(); ++c) {
            std::vector<Rat> expansion = zero_vec(new_terminal.size());
            if (!is_pivot[c]) {
                expansion[new_index[c]] = 1;
            } else {
                std::size_t prow = SIZE_MAX;
                for (std::size_t r = 0; r < pivots.size(); ++r)
                    if (pivots[r] == c) prow = r;
                for (std::size_t cc = 0; cc < cands.size(); ++cc) {
                    if (cc == c || rel.at(prow, cc) == 0) continue;
                    if (is_pivot[cc]) throw InternalError("rref left a pivot dependency");
                    expansion[new_index[cc]] = -rel.at(prow, cc);
                }
            }
            action[{cands[c].basis_elem, cands[c].arrow}] = std::move(expansion);
        }
        mod.action.push_back(std::move(action));
        mod.terminal.push_back(std::move(new_terminal));
        if (mod.terminal.back().empty()) break;
        if (mod.terminal.size() > 200)
            throw ResourceLimitError("oracle runaway: degree exceeded 200");
    }
}

std::vector<Rat> PathAlgebraOracle::path_image(const std::vector<SignVector>& path) const {
    if (path.empty()) throw DomainError("oracle", "empty path");
    std::size_t start = SIZE_MAX;
    for (std::size_t a = 0; a < p_topes_.size(); ++a)
        if (p_topes_[a] == path[0]) start = a;
    if (start == SIZE_MAX)
        throw DomainError("oracle", "paths must start at a bounded feasible tope");
    const Module& mod = modules_[start];
    std::vector<Rat> vec = {Rat(1)};
    for (std::size_t step = 0; step + 1 < path.size(); ++step) {
        if (step >= mod.action.size()) return {};
        std::size_t from = vertex_id(path[step]); // validates boundedness
        std::size_t to = vertex_id(path[step + 1]);
        std::size_t arrow = SIZE_MAX;
        for (std::size_t ar : arrows_from_[from])
            if (arrows_[ar].to == to) arrow = ar;
        if (arrow == SIZE_MAX)
            throw DomainError("oracle", "consecutive path vertices are not adjacent");
        const auto& act = mod.action[step];
        std::vector<Rat> next = zero_vec(mod.terminal[step + 1].size());
        for (std::size_t b = 0; b < vec.size(); ++b) {
            if (vec[b] == 0) continue;
            auto it = act.find({b, arrow});
            if (it == act.end()) throw InternalError("missing action for path step");
            axpy(next, vec[b], it->second);
        }
        vec = std::move(next);
    }
    return vec;
}

bool PathAlgebraOracle::paths_equal(const std::vector<SignVector>& p1,
                                    const std::vector<SignVector>& p2) const {
    if (p1.empty() || p2.empty() || !(p1.front() == p2.front()) || !(p1.back() == p2.back()))
        return false;
    if (p1.size() != p2.size()) return false;
    return path_image(p1) == path_image(p2);
}

PathAlgebraOracle::QuadraticRelations PathAlgebraOracle::quadratic_relations(
    const SignVector& alpha, const SignVector& beta) const {
    QuadraticRelations out;
    for (const auto& mid : p_topes_) {
        if (hamming_distance(alpha, mid) != 1 || hamming_distance(mid, beta) != 1) continue;
        out.mids.push_back(mid);
    }
    if (out.mids.empty()) return out;
    std::vector<std::vector<Rat>> images;
    std::size_t image_dim = 0;
    for (const auto& mid : out.mids) {
        std::vector<Rat> img = path_image({alpha, mid, beta});
        image_dim = img.size();
        images.push_back(std::move(img));
    }
    // kernel of the mids -> A_2 map; restrict image coordinates to the beta block
    RatMatrix m(out.mids.size(), image_dim);
    for (std::size_t r = 0; r < images.size(); ++r)
        for (std::size_t c = 0; c < image_dim; ++c) m.at(r, c) = images[r][c];
    RatMatrix ker = m.transpose().kernel_basis();
    for (std::size_t r = 0; r < ker.rows(); ++r) {
        std::vector<Rat> row(out.mids.size());
        for (std::size_t c = 0; c < out.mids.size(); ++c) row[c] = ker.at(r, c);
        out.rows.push_back(std::move(row));
    }
    return out;
}

GradedMatrix path_algebra_oracle(const Program& p, const ParameterSpace& u, OracleOptions options) {
    PathAlgebraOracle oracle(p, u, options);
    return oracle.graded_dims();
}

int edge_sign(const SignVector& alpha, unsigned coord) {
    std::uint64_t below = (std::uint64_t(1) << coord) - 1;
    int negs = std::popcount(alpha.neg_mask() & below);
    return negs % 2 == 0 ? 1 : -1;
}

} // namespace omcat
