#include "isospec/int_polynomial.hpp"

#include "isospec/errors.hpp"

namespace isospec {

namespace {
const Integer kZero(0);
}

IntPolynomial::IntPolynomial(std::vector<Integer> coefficients)
    : coefficients_(std::move(coefficients)) {
    if (coefficients_.empty() || coefficients_.back() != 1)
        throw InvalidArgumentError("polynomial must be monic");
}

const Integer& IntPolynomial::coefficient(std::size_t k) const {
    return k < coefficients_.size() ? coefficients_[k] : kZero;
}

Integer IntPolynomial::evaluate(const Integer& x) const {
    Integer value = 0;
    for (std::size_t k = coefficients_.size(); k-- > 0;) {
        value *= x;
        value += coefficients_[k];
    }
    return value;
}

std::string IntPolynomial::str() const {
    std::string out;
    for (std::size_t k = coefficients_.size(); k-- > 0;) {
        const Integer& c = coefficients_[k];
        if (c == 0 && coefficients_.size() > 1)
            continue;
        const bool leading = out.empty();
        if (leading)
            out += (c < 0) ? "-" : "";
        else
            out += (c < 0) ? " - " : " + ";
        Integer a = abs(c);
        if (a != 1 || k == 0)
            out += a.get_str();
        if (k > 0) {
            if (a != 1)
                out += "*";
            out += "x";
            if (k > 1)
                out += "^" + std::to_string(k);
        }
    }
    return out.empty() ? "0" : out;
}

} // namespace isospec
