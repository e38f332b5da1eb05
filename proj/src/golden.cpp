#include "gwcp3/table.hpp"

namespace gwcp3 {

// Reference values for degrees 1..5: rational count N0, elliptic coefficient
// N1 (num/den) and the combined elliptic curve count per cell. 35 rows,
// 2n+1 cells per degree, ascending b within each degree block.
const std::vector<GoldenRow>& golden_rows() {
    static const std::vector<GoldenRow> rows = {
        // degree 1
        {1, 4, 0, 2, -1, 6, 0},
        {1, 2, 1, 1, -1, 12, 0},
        {1, 0, 2, 1, -1, 12, 0},
        // degree 2
        {2, 8, 0, 92, -23, 1, 0},
        {2, 6, 1, 18, -9, 2, 0},
        {2, 4, 2, 4, -1, 1, 0},
        {2, 2, 3, 1, -1, 4, 0},
        {2, 0, 4, 0, 0, 1, 0},
        // degree 3
        {3, 12, 0, 80160, -31900, 1, 1500},
        {3, 10, 1, 9864, -3960, 1, 150},
        {3, 8, 2, 1312, -1598, 3, 14},
        {3, 6, 3, 190, -469, 6, 1},
        {3, 4, 4, 30, -25, 2, 0},
        {3, 2, 5, 5, -25, 12, 0},
        {3, 0, 6, 1, -5, 12, 0},
        // degree 4
        {4, 16, 0, 383306880, -170763640, 1, 52832040},
        {4, 14, 1, 34382544, -15620216, 1, 4436268},
        {4, 12, 2, 3259680, -1515824, 1, 385656},
        {4, 10, 3, 327888, -156594, 1, 34674},
        {4, 8, 4, 35104, -51772, 3, 3220},
        {4, 6, 5, 4000, -6070, 3, 310},
        {4, 4, 6, 480, -248, 1, 32},
        {4, 2, 7, 58, -179, 6, 4},
        {4, 0, 8, 4, -4, 3, 1},
        // degree 5
        {5, 20, 0, 6089786376960LL, -1984020394752LL, 1, 2583319387968LL},
        {5, 18, 1, 429750191232LL, -146713008096LL, 1, 175599635328LL},
        {5, 16, 2, 31658432256LL, -11385660384LL, 1, 12358163808LL},
        {5, 14, 3, 2440235712LL, -928521900LL, 1, 901654884LL},
        {5, 12, 4, 197240400, -79637976, 1, 68292324},
        {5, 10, 5, 16744080, -7179606, 1, 5378454},
        {5, 8, 6, 1492616, -677808, 1, 441654},
        {5, 6, 7, 139098, -132549, 2, 38049},
        {5, 4, 8, 13354, -13047, 2, 3492},
        {5, 2, 9, 1265, -2379, 4, 354},
        {5, 0, 10, 105, -147, 4, 42},
    };
    return rows;
}

}  // namespace gwcp3
