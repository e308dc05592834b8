#include "isospec/place.hpp"

#include "isospec/errors.hpp"

namespace isospec {

std::string to_string(PlaceKind kind) {
    switch (kind) {
    case PlaceKind::finite: return "finite";
    case PlaceKind::real: return "real";
    case PlaceKind::complex: return "complex";
    }
    throw InvalidArgumentError("unknown place kind");
}

PlaceKind place_kind_from_string(const std::string& text) {
    if (text == "finite") return PlaceKind::finite;
    if (text == "real") return PlaceKind::real;
    if (text == "complex") return PlaceKind::complex;
    throw InvalidArgumentError("unknown place kind '" + text + "'");
}

Place Place::finite_prime(const Integer& p) {
    if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 30) == 0)
        throw InvalidArgumentError("'" + p.get_str() + "' is not a prime");
    std::string label = "p:" + p.get_str();
    return Place{PlaceKind::finite, label, label};
}

Place Place::real_place() { return Place{PlaceKind::real, "real", "real"}; }

Place Place::complex_place() { return Place{PlaceKind::complex, "complex", "complex"}; }

Integer Place::rational_prime() const {
    if (kind != PlaceKind::finite || label.rfind("p:", 0) != 0)
        throw InvalidArgumentError("place '" + label + "' is not a finite place over Q");
    const std::string digits = label.substr(2);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
        throw InvalidArgumentError("place '" + label + "' is not a plain rational prime");
    return Integer(digits);
}

} // namespace isospec
