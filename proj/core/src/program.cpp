#include "omcat/program.hpp"

#include <algorithm>
#include <bit>

namespace omcat {

namespace {

OrientedMatroid reindex_program_matroid(const OrientedMatroid& om, const std::string& g_label,
                                        const std::string& f_label) {
    unsigned gi = om.label_index(g_label);
    unsigned fi = om.label_index(f_label);
    if (gi == fi) throw DomainError("program", "g and f must be distinct elements");
    std::vector<unsigned> perm;
    std::vector<std::string> labels;
    for (unsigned i = 0; i < om.size(); ++i) {
        if (i == gi || i == fi) continue;
        perm.push_back(i);
        labels.push_back(om.ground()[i]);
    }
    perm.push_back(gi);
    labels.push_back(om.ground()[gi]);
    perm.push_back(fi);
    labels.push_back(om.ground()[fi]);
    std::vector<SignVector> cocircuits;
    cocircuits.reserve(om.cocircuits().size());
    for (const auto& y : om.cocircuits()) cocircuits.push_back(y.restrict_to(perm));
    return OrientedMatroid(labels, canonical_sorted(std::move(cocircuits)), true);
}

} // namespace

Program::Program(const OrientedMatroid& mtilde, const std::string& g_label,
                 const std::string& f_label, ProgramOptions options)
    : opts_(options),
      mt_(reindex_program_matroid(mtilde, g_label, f_label)),
      n_om_(mt_.minor(std::uint64_t(1) << (mt_.size() - 1), 0)),
      mg_om_(mt_.minor(0, std::uint64_t(1) << (mt_.size() - 2))),
      m_om_(n_om_.minor(0, std::uint64_t(1) << (n_om_.size() - 1))),
      lat_mt_(mt_, options.max_covectors),
      lat_n_(n_om_, options.max_covectors) {
    if (mt_.size() < 3) throw DomainError("program", "a program needs E_n nonempty plus g and f");
    if (mt_.size() > opts_.max_ground)
        throw ResourceLimitError("ground set larger than the configured guard");
    n_ = mt_.size() - 2;
    d_ = m_om_.rank();

    std::uint64_t g_bit = std::uint64_t(1) << n_;
    std::uint64_t f_bit = std::uint64_t(1) << (n_ + 1);
    if (mt_.loops() & g_bit) throw DomainError("program", "g is a loop");
    if (mt_.coloops() & f_bit) throw DomainError("program", "f is a coloop");
    if (mt_.rank() != d_ + 1)
        throw DomainError("program", "rank of the extended matroid is not d+1");

    for (const auto& v : lat_mt_.covectors()) mt_covector_set_.insert(v);

    // genericity condition (1): cocircuits of N with more than d zeros on
    // E_n u {g} vanish at g
    for (const auto& y : n_om_.cocircuits()) {
        unsigned zeros = n_ + 1 - y.support_size();
        if (zeros > d_ && y.sign(n_) != 0) {
            genericity_ = {false, "cocircuit_zeros", y,
                           "genericity condition (1) violated by cocircuit " + y.str() +
                               " of the affine matroid: " + std::to_string(zeros) +
                               " zeros with nonzero g"};
            break;
        }
    }
    // genericity condition (2): circuits of M~/g with more than n-d zeros
    // vanish at f
    if (genericity_.generic) {
        for (const auto& x : mg_om_.circuits()) {
            unsigned zeros = n_ + 1 - x.support_size();
            if (zeros > n_ - d_ && x.sign(n_) != 0) {
                genericity_ = {false, "circuit_zeros", x,
                               "genericity condition (2) violated by circuit " + x.str() +
                                   " of the contraction: " + std::to_string(zeros) +
                                   " zeros with nonzero f"};
                break;
            }
        }
    }

    for (const auto& y : n_om_.cocircuits())
        if (y.sign(n_) > 0) feasible_cocircuits_.push_back(y);
    for (const auto& v : lat_n_.covectors())
        if (v.sign(n_) == 0) inf_covectors_.push_back(v);

    std::vector<unsigned> en(n_);
    for (unsigned i = 0; i < n_; ++i) en[i] = i;
    for (const auto& t : lat_n_.topes())
        if (t.sign(n_) > 0) feasible_topes_.push_back(t.restrict_to(en));
    std::sort(feasible_topes_.begin(), feasible_topes_.end(), tope_lex_less);
    for (const auto& t : feasible_topes_) feasible_set_.insert(t);

    if (!genericity_.generic) return;

    for (const auto& z : inf_covectors_)
        if (!z.is_zero() && direction_f_value(z) > 0) {
            incr_dirs_e_.push_back(z.restrict_to(en));
            incr_dirs_full_.push_back(z);
        }

    if (n_ > opts_.max_ground)
        throw ResourceLimitError("sign-vector sweep over 2^n exceeds the guard");
    for (std::uint64_t negm = 0; negm < (std::uint64_t(1) << n_); ++negm) {
        std::uint64_t all = (std::uint64_t(1) << n_) - 1;
        SignVector alpha(n_, all & ~negm, negm);
        bool unbounded = false;
        for (const auto& z : incr_dirs_e_)
            if (z.conforms_to(alpha)) {
                unbounded = true;
                break;
            }
        if (!unbounded) bounded_.push_back(alpha);
    }
    std::sort(bounded_.begin(), bounded_.end(), tope_lex_less);
    for (const auto& b : bounded_) bounded_set_.insert(b);
    for (const auto& t : feasible_topes_)
        if (bounded_set_.count(t)) bf_topes_.push_back(t);

    // mu: every bounded feasible tope has a unique optimal cocircuit whose
    // zero set is a basis, and the assignment is a bijection onto the bases
    std::vector<std::pair<std::uint64_t, SignVector>> rows;
    std::unordered_set<std::uint64_t> seen;
    for (const auto& alpha : bf_topes_) {
        SignVector y = optimal_cocircuit(alpha);
        std::uint64_t basis = y.zero_set() & ((std::uint64_t(1) << n_) - 1);
        if (!seen.insert(basis).second)
            throw InternalError("two topes share the optimal-cocircuit basis " +
                                subset_str(basis, m_om_.ground()));
        rows.emplace_back(basis, alpha);
    }
    const auto& bases = m_om_.bases();
    if (rows.size() != bases.size())
        throw InternalError("bounded feasible tope count differs from the basis count");
    for (std::uint64_t b : bases)
        if (!seen.count(b))
            throw InternalError("basis " + subset_str(b, m_om_.ground()) + " missed by mu");
    mu_ = std::make_shared<MuTable>(n_, std::move(rows));

    // directed graph on the feasible cocircuits
    auto graph = std::make_shared<TopeGraph>();
    graph->vertices = feasible_cocircuits_;
    auto vertex_index = [&](const SignVector& y) -> std::size_t {
        for (std::size_t i = 0; i < graph->vertices.size(); ++i)
            if (graph->vertices[i] == y) return i;
        throw InternalError("feasible cocircuit missing from the vertex list");
    };
    const auto& covs = lat_n_.covectors();
    const auto& ranks = lat_n_.ranks();
    for (std::size_t ci = 0; ci < covs.size(); ++ci) {
        if (ranks[ci] != 2 || covs[ci].sign(n_) <= 0) continue;
        const SignVector& w = covs[ci];
        std::vector<SignVector> feas, inf;
        for (const auto& y : n_om_.cocircuits()) {
            if (!y.is_face_of(w)) continue;
            (y.sign(n_) > 0 ? feas : inf).push_back(y);
        }
        if (feas.size() + inf.size() != 2)
            throw InternalError("edge " + w.str() + " has " +
                                std::to_string(feas.size() + inf.size()) + " cocircuit faces");
        if (feas.size() == 2) {
            int dir = 0;
            bool found = false;
            for (const auto& z : n_om_.cocircuits()) {
                if (z.sign(n_) != 0) continue;
                if (!(feas[0].compose(z) == w)) continue;
                int fv = direction_f_value(z);
                if (fv == 0)
                    throw DomainError("genericity", "constant direction on edge " + w.str());
                if (found && fv != dir)
                    throw InternalError("inconsistent edge direction on " + w.str());
                dir = fv;
                found = true;
            }
            if (!found) throw InternalError("no boundary direction found for edge " + w.str());
            std::size_t a = vertex_index(feas[0]), b = vertex_index(feas[1]);
            if (dir > 0)
                graph->edges.push_back({a, b, w});
            else
                graph->edges.push_back({b, a, w});
        } else if (feas.size() == 1) {
            int fv = direction_f_value(inf[0]);
            if (fv == 0) throw DomainError("genericity", "constant ray on edge " + w.str());
            graph->rays.push_back({vertex_index(feas[0]), fv > 0, w});
        }
    }
    // cycle detection, iterative depth-first search
    std::vector<std::vector<std::size_t>> adj(graph->vertices.size());
    for (std::size_t e = 0; e < graph->edges.size(); ++e)
        adj[graph->edges[e].from].push_back(graph->edges[e].to);
    std::vector<int> state(graph->vertices.size(), 0); // 0 new, 1 open, 2 done
    std::vector<std::size_t> parent(graph->vertices.size(), SIZE_MAX);
    for (std::size_t s = 0; s < graph->vertices.size() && graph->acyclic; ++s) {
        if (state[s] != 0) continue;
        std::vector<std::pair<std::size_t, std::size_t>> stack{{s, 0}};
        state[s] = 1;
        while (!stack.empty() && graph->acyclic) {
            auto& [v, next] = stack.back();
            if (next < adj[v].size()) {
                std::size_t w = adj[v][next++];
                if (state[w] == 0) {
                    state[w] = 1;
                    parent[w] = v;
                    stack.emplace_back(w, 0);
                } else if (state[w] == 1) {
                    graph->acyclic = false;
                    std::vector<std::size_t> cycle{w};
                    for (std::size_t cur = v; cur != w; cur = parent[cur]) cycle.push_back(cur);
                    std::reverse(cycle.begin(), cycle.end());
                    graph->witness_cycle = cycle;
                }
            } else {
                state[v] = 2;
                stack.pop_back();
            }
        }
    }
    graph_ = std::move(graph);
}

void Program::require_generic(const char* op) const {
    if (!genericity_.generic)
        throw DomainError("generic", std::string(op) + " requires a generic program: " +
                                          genericity_.detail);
}

const std::vector<SignVector>& Program::feasible_topes() const {
    require_generic("feasible_topes");
    return feasible_topes_;
}

const std::vector<SignVector>& Program::bounded_sign_vectors() const {
    require_generic("bounded_sign_vectors");
    return bounded_;
}

const std::vector<SignVector>& Program::bounded_feasible_topes() const {
    require_generic("bounded_feasible_topes");
    return bf_topes_;
}

bool Program::is_feasible(const SignVector& alpha) const {
    return feasible_set_.count(alpha) > 0;
}

bool Program::is_bounded(const SignVector& alpha) const {
    require_generic("is_bounded");
    return bounded_set_.count(alpha) > 0;
}

int Program::direction_f_value(const SignVector& z) const {
    if (z.size() != n_ + 1 || z.sign(n_) != 0)
        throw DomainError("direction", "directions live in the boundary of affine space");
    if (mt_covector_set_.count(z.append(0))) return 0;
    bool up = mt_covector_set_.count(z.append(1)) > 0;
    bool down = mt_covector_set_.count(z.append(-1)) > 0;
    if (up == down)
        throw DomainError("direction", z.str() + " is not a covector of the affine matroid");
    return up ? 1 : -1;
}

SignVector Program::tope_of(const SignVector& alpha) const {
    if (alpha.size() != n_) throw DimensionError("sign vector is not on E_n");
    SignVector t = alpha.append(1);
    if (!lat_n_.contains(t))
        throw DomainError("tope", alpha.str() + " is not a feasible tope");
    return t;
}

std::vector<SignVector> Program::feasible_faces(const SignVector& covector) const {
    std::vector<SignVector> out;
    for (const auto& v : lat_n_.covectors())
        if (v.sign(n_) > 0 && v.is_face_of(covector)) out.push_back(v);
    return out;
}

std::vector<SignVector> Program::feasible_cocircuit_faces(const SignVector& covector) const {
    std::vector<SignVector> out;
    for (const auto& y : feasible_cocircuits_)
        if (y.is_face_of(covector)) out.push_back(y);
    return out;
}

SignVector Program::optimal_cocircuit(const SignVector& alpha) const {
    require_generic("optimal_cocircuit");
    if (!is_bounded(alpha) || !is_feasible(alpha))
        throw DomainError("optimal", alpha.str() + " is not a bounded feasible tope");
    SignVector t = tope_of(alpha);
    std::vector<SignVector> optima;
    for (const auto& y : feasible_cocircuit_faces(t)) {
        // Z is feasible for Y in T when the perturbation of Y toward Z stays
        // inside T
        bool has_increasing = false;
        for (const auto& z : incr_dirs_full_) {
            if (y.compose(z).is_face_of(t)) {
                has_increasing = true;
                break;
            }
        }
        if (!has_increasing) optima.push_back(y);
    }
    if (optima.size() != 1)
        throw InternalError("tope " + alpha.str() + " has " + std::to_string(optima.size()) +
                            " optimal cocircuits; genericity broken");
    return optima[0];
}

int Program::mu_sign_on_basis(std::uint64_t basis, unsigned i) const {
    require_generic("mu_sign_on_basis");
    if (!(basis & (std::uint64_t(1) << i)))
        throw DomainError("mu", "element not in the basis");
    std::uint64_t rest = basis & ~(std::uint64_t(1) << i);
    // unique +- pair of cocircuits of M~/g vanishing on basis \ {i}; the one
    // decreasing at f carries the sign of mu(basis) at i
    for (const auto& z : mg_om_.cocircuits()) {
        if (z.support() & rest) continue;
        if (z.sign(n_) >= 0) continue; // f sits at index n in M~/g
        int s = z.sign(i);
        if (s == 0)
            throw InternalError("contraction cocircuit vanishes on the basis element");
        return s;
    }
    throw InternalError("no decreasing cocircuit for basis " + subset_str(basis, m_om_.ground()));
}

std::uint64_t Program::mu_inv(const SignVector& alpha) const {
    const MuTable& t = mu_table();
    return t.bases()[t.index_of(alpha)];
}

SignVector Program::mu(std::uint64_t basis) const {
    const MuTable& t = mu_table();
    return t.topes()[t.index_of_basis(basis)];
}

const MuTable& Program::mu_table() const {
    require_generic("mu_table");
    return *mu_;
}

const TopeGraph& Program::graph() const {
    require_generic("graph");
    return *graph_;
}

bool Program::is_euclidean() const {
    return graph().acyclic;
}

Program Program::dual_program() const {
    const auto& labels = mt_.ground();
    return Program(mt_.dual(), labels[n_ + 1], labels[n_], opts_);
}

Program Program::minor(std::uint64_t delete_set, std::uint64_t contract_set) const {
    require_generic("minor");
    std::uint64_t en_mask = (std::uint64_t(1) << n_) - 1;
    if ((delete_set | contract_set) & ~en_mask)
        throw DomainError("minor", "only E_n elements can be deleted or contracted");
    if (delete_set & contract_set) throw DomainError("minor", "overlapping sets");
    bool delete_ok = delete_set == 0, contract_ok = contract_set == 0;
    for (std::uint64_t b : m_om_.bases()) {
        if ((b & delete_set) == 0) delete_ok = true;
        if ((contract_set & ~b) == 0) contract_ok = true;
    }
    if (!delete_ok)
        throw DomainError("minor", "deletion set must avoid some basis");
    if (!contract_ok)
        throw DomainError("minor", "contraction set must lie inside some basis");
    const auto& labels = mt_.ground();
    return Program(mt_.minor(delete_set, contract_set), labels[n_], labels[n_ + 1], opts_);
}

Program Program::reorient_g() const {
    const auto& labels = mt_.ground();
    return Program(mt_.reorient(std::uint64_t(1) << n_), labels[n_], labels[n_ + 1], opts_);
}

bool Program::complementary_slackness(const SignVector& alpha, std::uint64_t basis,
                                      const Program* dual) const {
    require_generic("complementary_slackness");
    SignVector mb = mu(basis);
    bool primal = true;
    for (unsigned i = 0; i < n_ && primal; ++i)
        if (basis & (std::uint64_t(1) << i))
            if (alpha.sign(i) != mb.sign(i)) primal = false;

    std::optional<Program> local;
    if (!dual) local.emplace(dual_program());
    const Program& dp = dual ? *dual : *local;
    std::uint64_t comp = ((std::uint64_t(1) << n_) - 1) & ~basis;
    const SignVector* xbc = nullptr;
    for (const auto& y : dp.feasible_cocircuits_)
        if ((y.zero_set() & ((std::uint64_t(1) << n_) - 1)) == comp) {
            xbc = &y;
            break;
        }
    if (!xbc) throw InternalError("no dual feasible cocircuit with the complementary basis");
    bool dual_face = xbc->is_face_of(dp.tope_of(alpha));
    if (primal != dual_face)
        throw InternalError("cone test and dual face test disagree on " + alpha.str());
    return primal;
}

std::vector<std::pair<SignVector, unsigned>> Program::outgoing_census(
    const SignVector& covector) const {
    require_generic("outgoing_census");
    const TopeGraph& g = graph();
    std::vector<std::pair<SignVector, unsigned>> census;
    std::vector<std::size_t> vertex_ids;
    for (std::size_t i = 0; i < g.vertices.size(); ++i)
        if (g.vertices[i].is_face_of(covector)) {
            census.emplace_back(g.vertices[i], 0);
            vertex_ids.push_back(i);
        }
    auto slot = [&](std::size_t vid) -> unsigned* {
        for (std::size_t k = 0; k < vertex_ids.size(); ++k)
            if (vertex_ids[k] == vid) return &census[k].second;
        return nullptr;
    };
    for (const auto& e : g.edges) {
        if (!e.covector.is_face_of(covector)) continue;
        if (unsigned* c = slot(e.from)) ++*c;
    }
    for (const auto& r : g.rays) {
        if (!r.covector.is_face_of(covector)) continue;
        if (!r.outgoing) continue;
        if (unsigned* c = slot(r.vertex)) ++*c;
    }
    return census;
}

} // namespace omcat
