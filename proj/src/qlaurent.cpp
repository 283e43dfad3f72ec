#include "wittdiv/qlaurent.hpp"

namespace wittdiv {

QLaurent to_rational(const ZLaurent& a) {
    if (a.is_zero()) return {};
    std::vector<mpq_class> v;
    v.reserve(a.span());
    for (const auto& c : a.dense()) v.emplace_back(c);
    return QLaurent(a.min_exp(), std::move(v));
}

bool is_integral(const QLaurent& a) {
    for (const auto& c : a.dense())
        if (c.get_den() != 1) return false;
    return true;
}

ZLaurent to_integral(const QLaurent& a) {
    if (a.is_zero()) return {};
    std::vector<mpz_class> v;
    v.reserve(a.span());
    for (const auto& c : a.dense()) {
        if (c.get_den() != 1) throw IntegralityError("non-integral coefficient " + c.get_str() + " in " + a.to_string());
        v.push_back(c.get_num());
    }
    return ZLaurent(a.min_exp(), std::move(v));
}

}  // namespace wittdiv
