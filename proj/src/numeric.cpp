#include "coinv/numeric.hpp"

#include <stdexcept>

namespace coinv {

std::int64_t to_int64(const BigInt& v) {
    if (!v.fits_slong_p())
        throw std::overflow_error("value does not fit in a machine integer");
    return static_cast<std::int64_t>(v.get_si());
}

}  // namespace coinv
