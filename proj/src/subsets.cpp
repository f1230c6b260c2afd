#include "toric/subsets.hpp"

#include <stdexcept>

namespace toric {

std::vector<int> subset_elements(Subset s) {
    std::vector<int> out;
    out.reserve(subset_size(s));
    while (s) {
        out.push_back(__builtin_ctz(s) + 1);
        s &= s - 1;
    }
    return out;
}

Subset subset_of(std::initializer_list<int> elements) {
    Subset s = 0;
    for (int e : elements) {
        if (e < 1 || e > kMaxGround) throw std::invalid_argument("element out of range");
        s |= singleton(e);
    }
    return s;
}

Subset subset_of(const std::vector<int>& elements) {
    Subset s = 0;
    for (int e : elements) {
        if (e < 1 || e > kMaxGround) throw std::invalid_argument("element out of range");
        s |= singleton(e);
    }
    return s;
}

std::string subset_to_string(Subset s) {
    std::string out = "{";
    bool first = true;
    for (int e : subset_elements(s)) {
        if (!first) out += ",";
        out += std::to_string(e);
        first = false;
    }
    out += "}";
    return out;
}

Subset relabel_subset(Subset s, const std::vector<int>& image) {
    Subset out = 0;
    for (int e : subset_elements(s)) {
        int target = image[static_cast<std::size_t>(e)];
        if (target > 0) out |= singleton(target);
    }
    return out;
}

}  // namespace toric
