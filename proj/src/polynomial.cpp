#include "lojex/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "lojex/errors.hpp"

namespace lojex {

namespace {

// graded lexicographic, leading term first
bool grlex_before(const Monomial& a, const Monomial& b) {
    int da = a.total_degree();
    int db = b.total_degree();
    if (da != db) return da > db;
    return a.exps > b.exps;
}

double ipow(double base, int e) {
    double r = 1.0;
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

}  // namespace

Polynomial::Polynomial(int num_vars, std::vector<Monomial> terms)
    : num_vars_(num_vars), terms_(std::move(terms)) {
    if (num_vars_ <= 0) throw input_error("polynomial needs a positive variable count");
    for (const Monomial& t : terms_) {
        if (static_cast<int>(t.exps.size()) != num_vars_)
            throw input_error("monomial exponent vector length differs from variable count");
        for (int e : t.exps)
            if (e < 0) throw input_error("negative exponent in monomial");
    }
    canonicalize();
}

void Polynomial::canonicalize() {
    std::sort(terms_.begin(), terms_.end(), grlex_before);
    std::vector<Monomial> merged;
    merged.reserve(terms_.size());
    for (Monomial& t : terms_) {
        if (!merged.empty() && merged.back().exps == t.exps)
            merged.back().coef += t.coef;
        else
            merged.push_back(std::move(t));
    }
    merged.erase(std::remove_if(merged.begin(), merged.end(),
                                [](const Monomial& t) { return t.coef == 0.0; }),
                 merged.end());
    terms_ = std::move(merged);
}

Polynomial Polynomial::constant(int num_vars, double c) {
    if (c == 0.0) return Polynomial(num_vars);
    return Polynomial(num_vars, {Monomial{c, std::vector<int>(num_vars, 0)}});
}

Polynomial Polynomial::variable(int num_vars, int index) {
    if (index < 0 || index >= num_vars) throw input_error("variable index out of range");
    std::vector<int> e(num_vars, 0);
    e[index] = 1;
    return Polynomial(num_vars, {Monomial{1.0, std::move(e)}});
}

std::optional<int> Polynomial::degree() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.front().total_degree();
}

double Polynomial::eval(std::span<const double> x) const {
    if (static_cast<int>(x.size()) != num_vars_)
        throw input_error("eval: point dimension differs from variable count");
    double sum = 0.0;
    for (const Monomial& t : terms_) {
        double v = t.coef;
        for (int i = 0; i < num_vars_; ++i) {
            int e = t.exps[i];
            if (e > 0) v *= ipow(x[i], e);
        }
        sum += v;
    }
    return sum;
}

Polynomial Polynomial::derivative(int var) const {
    if (var < 0 || var >= num_vars_) throw input_error("derivative index out of range");
    std::vector<Monomial> out;
    out.reserve(terms_.size());
    for (const Monomial& t : terms_) {
        if (t.exps[var] == 0) continue;
        Monomial d = t;
        d.coef *= d.exps[var];
        d.exps[var] -= 1;
        out.push_back(std::move(d));
    }
    return Polynomial(num_vars_, std::move(out));
}

std::vector<Polynomial> Polynomial::gradient() const {
    std::vector<Polynomial> g;
    g.reserve(num_vars_);
    for (int i = 0; i < num_vars_; ++i) g.push_back(derivative(i));
    return g;
}

Polynomial Polynomial::extended(int new_num_vars) const {
    if (new_num_vars < num_vars_) throw input_error("extended: cannot shrink variable count");
    if (new_num_vars == num_vars_) return *this;
    std::vector<Monomial> out;
    out.reserve(terms_.size());
    for (const Monomial& t : terms_) {
        Monomial e = t;
        e.exps.resize(new_num_vars, 0);
        out.push_back(std::move(e));
    }
    return Polynomial(new_num_vars, std::move(out));
}

Polynomial Polynomial::scaled(double c) const {
    if (c == 0.0) return Polynomial(num_vars_ == 0 ? 1 : num_vars_);
    std::vector<Monomial> out = terms_;
    for (Monomial& t : out) t.coef *= c;
    return Polynomial(num_vars_ == 0 ? 1 : num_vars_, std::move(out));
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const Monomial& t : terms_) {
        double c = t.coef;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        double ac = std::fabs(c);
        bool has_var = t.total_degree() > 0;
        if (ac != 1.0 || !has_var) os << ac;
        for (int i = 0; i < num_vars_; ++i) {
            if (t.exps[i] == 0) continue;
            os << "x" << i + 1;
            if (t.exps[i] > 1) os << "^" << t.exps[i];
        }
    }
    return os.str();
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    if (a.num_vars_ != b.num_vars_)
        throw input_error("polynomial addition: variable counts differ");
    std::vector<Monomial> out = a.terms_;
    out.insert(out.end(), b.terms_.begin(), b.terms_.end());
    return Polynomial(a.num_vars_, std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + b.scaled(-1.0); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.num_vars_ != b.num_vars_)
        throw input_error("polynomial multiplication: variable counts differ");
    std::vector<Monomial> out;
    out.reserve(a.terms_.size() * b.terms_.size());
    for (const Monomial& s : a.terms_)
        for (const Monomial& t : b.terms_) {
            Monomial m;
            m.coef = s.coef * t.coef;
            m.exps.resize(a.num_vars_);
            for (int i = 0; i < a.num_vars_; ++i) m.exps[i] = s.exps[i] + t.exps[i];
            out.push_back(std::move(m));
        }
    return Polynomial(a.num_vars_, std::move(out));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.num_vars_ != b.num_vars_ || a.terms_.size() != b.terms_.size()) return false;
    for (size_t i = 0; i < a.terms_.size(); ++i)
        if (a.terms_[i].coef != b.terms_[i].coef || a.terms_[i].exps != b.terms_[i].exps)
            return false;
    return true;
}

PolyMap::PolyMap(int nv, std::vector<Polynomial> comps)
    : num_vars(nv), components(std::move(comps)) {
    if (components.empty()) throw input_error("polynomial map needs at least one component");
    for (const Polynomial& p : components)
        if (p.num_vars() != num_vars)
            throw input_error("polynomial map components disagree on variable count");
}

std::optional<int> PolyMap::degree() const {
    std::optional<int> d;
    for (const Polynomial& p : components)
        if (auto pd = p.degree(); pd && (!d || *pd > *d)) d = pd;
    return d;
}

void PolyMap::eval(std::span<const double> x, std::span<double> out) const {
    for (size_t i = 0; i < components.size(); ++i) out[i] = components[i].eval(x);
}

double PolyMap::norm_at(std::span<const double> x) const {
    double s = 0.0;
    for (const Polynomial& p : components) {
        double v = p.eval(x);
        s += v * v;
    }
    return std::sqrt(s);
}

Vec PolyMap::norm2_gradient(std::span<const double> x) const {
    Vec g(num_vars, 0.0);
    for (const Polynomial& p : components) {
        double v = p.eval(x);
        if (v == 0.0) continue;
        for (int i = 0; i < num_vars; ++i) g[i] += 2.0 * v * p.derivative(i).eval(x);
    }
    return g;
}

PolyMap compose_linear(const PolyMap& F, const Mat& L) {
    if (L.cols != F.arity())
        throw input_error("compose_linear: matrix column count differs from map arity");
    if (L.rows < 1) throw input_error("compose_linear: matrix needs at least one row");
    std::vector<Polynomial> comps;
    comps.reserve(L.rows);
    for (int i = 0; i < L.rows; ++i) {
        Polynomial acc(F.num_vars);
        for (int j = 0; j < L.cols; ++j) {
            double c = L.at(i, j);
            if (c == 0.0) continue;
            acc = acc + F.components[j].scaled(c);
        }
        comps.push_back(std::move(acc));
    }
    return PolyMap(F.num_vars, std::move(comps));
}

Polynomial subtract_square_slack(const Polynomial& g, int slack_index, int total_slacks) {
    if (slack_index < 1 || slack_index > total_slacks)
        throw input_error("subtract_square_slack: slack index out of range");
    int nv = g.num_vars() + total_slacks;
    Polynomial ext = g.extended(nv);
    std::vector<int> e(nv, 0);
    e[g.num_vars() + slack_index - 1] = 2;
    Polynomial slack_sq(nv, {Monomial{1.0, std::move(e)}});
    return ext - slack_sq;
}

}  // namespace lojex
