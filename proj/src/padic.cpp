#include <ellqp/padic.hpp>

#include <sstream>

namespace ellqp {

std::string Padic::to_string() const {
    std::ostringstream os;
    if (zero_) {
        if (zprec_ >= kInfPrec)
            os << "0";
        else
            os << "O(" << p_ << "^" << zprec_ << ")";
        return os.str();
    }
    os << p_ << "^" << v_ << " * (";
    Int u = u_;
    bool first = true;
    for (long i = 0; i < n_ && u != 0; ++i) {
        Int d = u % p_;
        u /= p_;
        if (d != 0) {
            if (!first) os << " + ";
            os << d;
            if (i == 1) os << "*" << p_;
            if (i > 1) os << "*" << p_ << "^" << i;
            first = false;
        }
    }
    if (first) os << "0";
    os << ") + O(" << p_ << "^" << (v_ + n_) << ")";
    return os.str();
}

}  // namespace ellqp
