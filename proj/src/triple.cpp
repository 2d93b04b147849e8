#include "windmill/triple.hpp"

#include <sstream>

namespace windmill {

Nat windmill_value(const Triple& t) {
    return t.x * t.x + 4 * t.y * t.z;
}

Triple flip(const Triple& t) {
    return {t.x, t.z, t.y};
}

Triple zagier(const Triple& t) {
    const Nat& x = t.x;
    const Nat& y = t.y;
    const Nat& z = t.z;
    if (x + z < y) return {x + 2 * z, z, y - z - x};
    if (x < 2 * y) return {2 * y - x, y, x + z - y};
    return {x - 2 * y, x + z - y, y};
}

Triple zagier_flip(const Triple& t) {
    return zagier(flip(t));
}

Nat mind(const Triple& t) {
    const Nat& x = t.x;
    const Nat& y = t.y;
    const Nat& z = t.z;
    if (x + z < y) return x + 2 * z;
    if (x < y) return 2 * y - x;
    return x;
}

ZagierCase classify_case(const Triple& t) {
    const Nat& x = t.x;
    const Nat& y = t.y;
    if (x < y) {
        if (x + t.z < y) return ZagierCase::Case1;
        return ZagierCase::Case2;
    }
    if (x == y) return ZagierCase::Case3;
    if (x < 2 * y) return ZagierCase::Case4;
    return ZagierCase::Case5;
}

std::string to_string(const Triple& t) {
    std::ostringstream os;
    os << '(' << t.x << ',' << t.y << ',' << t.z << ')';
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Triple& t) {
    return os << to_string(t);
}

const char* to_string(ZagierCase c) {
    switch (c) {
        case ZagierCase::Case1: return "Case1";
        case ZagierCase::Case2: return "Case2";
        case ZagierCase::Case3: return "Case3";
        case ZagierCase::Case4: return "Case4";
        case ZagierCase::Case5: return "Case5";
    }
    return "?";
}

}  // namespace windmill
