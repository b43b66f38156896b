#ifndef FINDIM_ERRORS_HPP
#define FINDIM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace findim {

/** Arithmetic or shape misuse of a coefficient domain. */
class DomainError : public std::runtime_error
{
    public:
        using std::runtime_error::runtime_error;
};

/** Invalid ring data: associativity, unit laws, bimodule axioms. */
class AlgebraError : public std::runtime_error
{
    public:
        using std::runtime_error::runtime_error;
};

/** The triangular bimodule is not projective on the named side. */
class HypothesisError : public std::runtime_error
{
    public:
        enum class Side { Left, Right };

        HypothesisError(Side side, const std::string& what)
            : std::runtime_error(what), side_(side) {}

        Side side() const { return side_; }

    private:
        Side side_;
};

/** A request outside the backends this engine can decide. */
class UnsupportedError : public std::runtime_error
{
    public:
        using std::runtime_error::runtime_error;
};

/** A documented precondition of an operation does not hold. */
class PreconditionError : public std::runtime_error
{
    public:
        using std::runtime_error::runtime_error;
};

/** A homology value could not be decided below the resolution cap. */
class IndeterminateError : public std::runtime_error
{
    public:
        using std::runtime_error::runtime_error;
};

}   // namespace findim

#endif
