#include "symsos/rational.hpp"

#include "symsos/errors.hpp"

namespace symsos {

Rational rational_from_string(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) {
        throw InputError("invalid rational literal: '" + s + "'");
    }
    q.canonicalize();
    return q;
}

}  // namespace symsos
