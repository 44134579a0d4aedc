#include "dexc/chains.hpp"

namespace dexc {

std::string to_string(const Cell& cell) {
    std::string out = "[" + to_string(cell.base);
    for (int axis : cell.dirs) {
        out += ":e" + std::to_string(axis);
    }
    return out + "]";
}

}  // namespace dexc
