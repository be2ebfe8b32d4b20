#ifndef LOJEX_ERRORS_HPP
#define LOJEX_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lojex {

// Bad caller input: dimension mismatches, violated preconditions, malformed files.
class input_error : public std::invalid_argument {
public:
    explicit input_error(const std::string& what) : std::invalid_argument(what) {}
};

// The feasibility search found no point of the set; carries the best
// constraint violation seen so the caller can judge emptiness.
class infeasible_error : public std::runtime_error {
public:
    infeasible_error(const std::string& what, double best_violation)
        : std::runtime_error(what), best_violation_(best_violation) {}
    double best_violation() const { return best_violation_; }

private:
    double best_violation_;
};

}  // namespace lojex

#endif
