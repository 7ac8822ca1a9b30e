#ifndef DGS_SRC_JSON_UTIL_HPP
#define DGS_SRC_JSON_UTIL_HPP

#include <json.hpp>

#include "dgs/error.hpp"
#include "dgs/matrix.hpp"

namespace dgs::detail {

// Integers that fit a signed 64-bit word are JSON numbers, larger ones
// decimal strings, so output stays exact.
inline nlohmann::json bigint_json(const BigInt& v) {
    if (mpz_fits_slong_p(v.get_mpz_t())) return v.get_si();
    return v.get_str();
}

inline BigInt json_bigint(const nlohmann::json& v) {
    if (v.is_number_integer()) return BigInt(v.get<long>());
    if (v.is_string()) {
        BigInt out;
        if (out.set_str(v.get<std::string>(), 10) != 0)
            fail(ErrorKind::ParseError, "not a decimal integer: " + v.get<std::string>());
        return out;
    }
    fail(ErrorKind::ParseError, "expected an integer, got " + v.dump());
}

}  // namespace dgs::detail

#endif
