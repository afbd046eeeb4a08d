#include "orecode/util.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace orecode {

int worker_count() {
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    if (hw < 1) hw = 1;
    if (const char* env = std::getenv("ORECODE_THREADS")) {
        int cap = std::atoi(env);
        if (cap >= 1) hw = std::min(hw, cap);
    }
    return hw;
}

std::string pow_decimal(uint64_t base, uint64_t exp) {
    std::vector<uint32_t> digits{1};  // little-endian decimal digits
    for (uint64_t i = 0; i < exp; ++i) {
        uint64_t carry = 0;
        for (auto& d : digits) {
            uint64_t v = static_cast<uint64_t>(d) * base + carry;
            d = static_cast<uint32_t>(v % 10);
            carry = v / 10;
        }
        while (carry) {
            digits.push_back(static_cast<uint32_t>(carry % 10));
            carry /= 10;
        }
    }
    std::string out;
    out.reserve(digits.size());
    for (auto it = digits.rbegin(); it != digits.rend(); ++it)
        out.push_back(static_cast<char>('0' + *it));
    return out;
}

}  // namespace orecode
