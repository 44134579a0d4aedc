#include "dexc/forms.hpp"

namespace dexc {

int wedge_sign(const MultiIndex& left, const MultiIndex& right) {
    std::size_t inversions = 0;
    for (int i : left) {
        for (int j : right) {
            if (i == j) {
                return 0;
            }
            inversions += i > j ? 1 : 0;
        }
    }
    return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace dexc
