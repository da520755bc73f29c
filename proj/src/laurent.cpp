#include "sbrep/laurent.hpp"

namespace sbrep {

std::string LaurentPoly::str() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : coeffs_) {
        std::string cs = c.str();
        if (!first) {
            if (!cs.empty() && cs[0] == '-' && c.is_real()) {
                out += " - ";
                cs = cs.substr(1);
            } else {
                out += " + ";
            }
        }
        first = false;
        std::string term;
        if (e == 0) {
            term = (c.is_real() && c.im() == 0) ? cs : "(" + c.str() + ")";
            out += term;
            continue;
        }
        std::string tpow = e == 1 ? "t" : "t^" + std::to_string(e);
        if (cs == "1")
            term = tpow;
        else if (cs == "-1")
            term = "-" + tpow;
        else if (c.is_real())
            term = cs + "*" + tpow;
        else
            term = "(" + c.str() + ")*" + tpow;
        out += term;
    }
    return out;
}

}  // namespace sbrep
