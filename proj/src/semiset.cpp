#include "lojex/semiset.hpp"

#include <algorithm>
#include <cmath>

#include "lojex/errors.hpp"

namespace lojex {

BasicSet::BasicSet(int nv, std::vector<Polynomial> gs, std::vector<Polynomial> hs)
    : num_vars(nv), ineqs(std::move(gs)), eqs(std::move(hs)) {
    if (num_vars <= 0) throw input_error("basic set needs a positive ambient dimension");
    for (const Polynomial& p : ineqs)
        if (p.num_vars() != num_vars)
            throw input_error("inequality constraint dimension differs from ambient");
    for (const Polynomial& p : eqs)
        if (p.num_vars() != num_vars)
            throw input_error("equation constraint dimension differs from ambient");
}

SemialgebraicSet::SemialgebraicSet(int nv, std::vector<BasicSet> ps)
    : num_vars(nv), pieces(std::move(ps)) {
    if (pieces.empty()) throw input_error("semialgebraic set needs at least one piece");
    for (const BasicSet& p : pieces)
        if (p.num_vars != num_vars)
            throw input_error("union pieces disagree on ambient dimension");
}

SemialgebraicSet SemialgebraicSet::full_space(int num_vars) {
    return SemialgebraicSet(num_vars, {BasicSet(num_vars, {}, {})});
}

SemialgebraicSet SemialgebraicSet::basic(BasicSet piece) {
    int nv = piece.num_vars;
    return SemialgebraicSet(nv, {std::move(piece)});
}

PresentationComplexity complexity(const SemialgebraicSet& S) {
    PresentationComplexity c;
    c.ambient_dim = S.num_vars;
    bool any_constraint = false;
    for (const BasicSet& piece : S.pieces) {
        c.r = std::max(c.r, static_cast<int>(piece.ineqs.size()));
        for (const Polynomial& p : piece.ineqs) {
            any_constraint = true;
            if (auto d = p.degree()) c.kappa = std::max(c.kappa, *d);
        }
        for (const Polynomial& p : piece.eqs) {
            any_constraint = true;
            if (auto d = p.degree()) c.kappa = std::max(c.kappa, *d);
        }
    }
    if (any_constraint) c.kappa = std::max(c.kappa, 1);
    return c;
}

long brocker_cap(int N) {
    if (N < 1) throw input_error("brocker_cap: ambient dimension must be >= 1");
    return static_cast<long>(N) * (N + 1) / 2;
}

bool membership(const BasicSet& piece, std::span<const double> x, double tol) {
    if (static_cast<int>(x.size()) != piece.num_vars)
        throw input_error("membership: point dimension differs from ambient");
    for (const Polynomial& g : piece.ineqs)
        if (g.eval(x) < -tol) return false;
    for (const Polynomial& h : piece.eqs)
        if (std::fabs(h.eval(x)) > tol) return false;
    return true;
}

bool membership(const SemialgebraicSet& S, std::span<const double> x, double tol) {
    for (const BasicSet& piece : S.pieces)
        if (membership(piece, x, tol)) return true;
    return false;
}

double violation(const BasicSet& piece, std::span<const double> x) {
    double v = 0.0;
    for (const Polynomial& g : piece.ineqs) {
        double gv = g.eval(x);
        if (gv < 0.0) v += gv * gv;
    }
    for (const Polynomial& h : piece.eqs) {
        double hv = h.eval(x);
        v += hv * hv;
    }
    return v;
}

SemialgebraicSet graph_presentation(const PolyMap& F, const SemialgebraicSet& X) {
    if (F.num_vars != X.num_vars)
        throw input_error("graph_presentation: map and set ambient dimensions differ");
    const int n = X.num_vars;
    const int m = F.arity();
    const int nv = n + m;
    std::vector<BasicSet> pieces;
    pieces.reserve(X.pieces.size());
    for (const BasicSet& piece : X.pieces) {
        std::vector<Polynomial> gs, hs;
        gs.reserve(piece.ineqs.size());
        hs.reserve(piece.eqs.size() + m);
        for (const Polynomial& g : piece.ineqs) gs.push_back(g.extended(nv));
        for (const Polynomial& h : piece.eqs) hs.push_back(h.extended(nv));
        for (int j = 0; j < m; ++j)
            hs.push_back(Polynomial::variable(nv, n + j) - F.components[j].extended(nv));
        pieces.emplace_back(nv, std::move(gs), std::move(hs));
    }
    return SemialgebraicSet(nv, std::move(pieces));
}

SemialgebraicSet intersect(const SemialgebraicSet& X, const SemialgebraicSet& Y) {
    if (X.num_vars != Y.num_vars)
        throw input_error("intersect: ambient dimensions differ");
    std::vector<BasicSet> pieces;
    pieces.reserve(X.pieces.size() * Y.pieces.size());
    for (const BasicSet& a : X.pieces)
        for (const BasicSet& b : Y.pieces) {
            std::vector<Polynomial> gs = a.ineqs;
            gs.insert(gs.end(), b.ineqs.begin(), b.ineqs.end());
            std::vector<Polynomial> hs = a.eqs;
            hs.insert(hs.end(), b.eqs.begin(), b.eqs.end());
            pieces.emplace_back(X.num_vars, std::move(gs), std::move(hs));
        }
    return SemialgebraicSet(X.num_vars, std::move(pieces));
}

SemialgebraicSet zero_set_on(const PolyMap& F, const SemialgebraicSet& X) {
    if (F.num_vars != X.num_vars)
        throw input_error("zero_set_on: map and set ambient dimensions differ");
    std::vector<BasicSet> pieces;
    pieces.reserve(X.pieces.size());
    for (const BasicSet& piece : X.pieces) {
        std::vector<Polynomial> hs = piece.eqs;
        for (const Polynomial& f : F.components)
            if (!f.is_zero()) hs.push_back(f);
        pieces.emplace_back(X.num_vars, piece.ineqs, std::move(hs));
    }
    return SemialgebraicSet(X.num_vars, std::move(pieces));
}

}  // namespace lojex
