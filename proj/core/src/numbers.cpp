#include "hecke/numbers.hpp"

#include <numeric>

namespace hecke {

std::string Q4::str() const {
    long q = quarters_;
    if (q % 4 == 0) return std::to_string(q / 4);
    if (q % 2 == 0) return std::to_string(q / 2) + "/2";
    return std::to_string(q) + "/4";
}

Q4 Q4::parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational token");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            return Q4(std::stol(s));
        }
        long num = std::stol(s.substr(0, slash));
        long den = std::stol(s.substr(slash + 1));
        if (den != 1 && den != 2 && den != 4)
            throw std::invalid_argument("denominator must divide 4 in '" + s + "'");
        return Q4::from_quarters(num * (4 / den));
    } catch (const std::invalid_argument&) {
        throw;
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed rational '" + s + "'");
    }
}

std::string rational_str(const Rational& r) {
    std::string num = numerator(r).str();
    if (denominator(r) == 1) return num;
    return num + "/" + denominator(r).str();
}

}  // namespace hecke
