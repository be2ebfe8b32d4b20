#ifndef LOJEX_POLYNOMIAL_HPP
#define LOJEX_POLYNOMIAL_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lojex/linalg.hpp"

namespace lojex {

/// One term of a sparse polynomial: coefficient times a monomial in N variables.
/// Zero-coefficient terms are never stored.
struct Monomial {
    double coef = 0.0;
    std::vector<int> exps;  // length N, entries >= 0

    int total_degree() const {
        int d = 0;
        for (int e : exps) d += e;
        return d;
    }
};

/// Sparse real multivariate polynomial in canonical form: terms sorted in
/// graded lexicographic order (leading term first), pairwise distinct
/// exponent vectors, no zero coefficients. Immutable after construction.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(int num_vars) : num_vars_(num_vars) {}
    Polynomial(int num_vars, std::vector<Monomial> terms);

    static Polynomial constant(int num_vars, double c);
    static Polynomial variable(int num_vars, int index);

    int num_vars() const { return num_vars_; }
    const std::vector<Monomial>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Total degree; empty optional is the zero-polynomial sentinel.
    std::optional<int> degree() const;

    /// Evaluate at x (terms summed in canonical order, so the result is
    /// deterministic for a given canonical form).
    double eval(std::span<const double> x) const;

    Polynomial derivative(int var) const;
    std::vector<Polynomial> gradient() const;

    /// Same polynomial viewed in a larger ambient space (new trailing vars).
    Polynomial extended(int new_num_vars) const;

    Polynomial scaled(double c) const;

    std::string to_string() const;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(double c, const Polynomial& p) { return p.scaled(c); }
    friend Polynomial operator-(const Polynomial& p) { return p.scaled(-1.0); }
    friend bool operator==(const Polynomial& a, const Polynomial& b);

private:
    void canonicalize();

    int num_vars_ = 0;
    std::vector<Monomial> terms_;
};

/// A polynomial mapping F = (f_1, ..., f_m), all components on the same space.
struct PolyMap {
    int num_vars = 0;
    std::vector<Polynomial> components;

    PolyMap() = default;
    PolyMap(int num_vars, std::vector<Polynomial> comps);

    int arity() const { return static_cast<int>(components.size()); }

    /// max over component degrees; sentinel when every component is zero
    std::optional<int> degree() const;

    void eval(std::span<const double> x, std::span<double> out) const;

    /// Euclidean norm |F(x)|
    double norm_at(std::span<const double> x) const;

    /// gradient of |F(x)|^2, i.e. 2 sum_i f_i(x) grad f_i(x)
    Vec norm2_gradient(std::span<const double> x) const;
};

/// L o F for a k x m real matrix L: component i is sum_j L(i,j) f_j.
PolyMap compose_linear(const PolyMap& F, const Mat& L);

/// g(x) - y_j^2 viewed in R^{N+r}; slack_index is 1-based within 1..total_slacks.
Polynomial subtract_square_slack(const Polynomial& g, int slack_index, int total_slacks);

}  // namespace lojex

#endif
