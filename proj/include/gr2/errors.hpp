#pragma once

#include <array>
#include <stdexcept>
#include <string>

namespace gr2 {

/// A valuation or initial form was requested for the zero polynomial.
class undefined_value_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Input violates the four-point condition; `quadruple` is the first
/// offending 4-subset (1-based, increasing).
class not_tropical_error : public std::invalid_argument {
public:
    not_tropical_error(std::array<int, 4> q, const std::string& what)
        : std::invalid_argument(what), quadruple(q) {}
    std::array<int, 4> quadruple;
};

/// A sigma-weight fails parity or a triangle inequality at `vertex`.
class not_in_semigroup_error : public std::invalid_argument {
public:
    not_in_semigroup_error(int v, const std::string& what) : std::invalid_argument(what), vertex(v) {}
    int vertex;
};

/// A linear-algebra computation would exceed the configured size limit.
class size_limit_error : public std::length_error {
public:
    using std::length_error::length_error;
};

}  // namespace gr2
