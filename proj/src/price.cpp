#include "spectro/price.hpp"

namespace spectro {

std::string Price::to_string(const char* inf_symbol) const {
    std::string out = "(";
    for (int i = 0; i < 6; ++i) {
        if (i) out += ',';
        if (v_[i] == infinity)
            out += inf_symbol;
        else
            out += std::to_string(v_[i]);
    }
    out += ')';
    return out;
}

bool price_leq(const Price& a, const Price& b) { return a.leq(b); }
bool price_lt(const Price& a, const Price& b) { return a.strictly_below(b); }
Price price_join(const Price& a, const Price& b) { return a.join(b); }

}  // namespace spectro
