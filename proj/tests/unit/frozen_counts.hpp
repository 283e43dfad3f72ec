#pragma once

#include <vector>

// Generated by tests/oracles/brute_force.py.

struct FrozenCount {
    const char* scheme;
    long q;
    std::vector<int> d;
    long count;
};

inline const std::vector<FrozenCount>& frozen_counts() {
    static const std::vector<FrozenCount> rows = {
        {"full:1", 2, {0}, 1},
        {"full:1", 2, {1}, 2},
        {"full:1", 2, {2}, 4},
        {"full:1", 2, {3}, 8},
        {"full:1", 2, {4}, 16},
        {"full:1", 2, {5}, 32},
        {"full:1", 3, {0}, 1},
        {"full:1", 3, {1}, 3},
        {"full:1", 3, {2}, 9},
        {"full:1", 3, {3}, 27},
        {"full:1", 3, {4}, 81},
        {"full:1", 3, {5}, 243},
        {"conf:2", 2, {0, 0}, 1},
        {"conf:2", 2, {0, 1}, 2},
        {"conf:2", 2, {0, 2}, 2},
        {"conf:2", 2, {0, 3}, 4},
        {"conf:2", 2, {0, 4}, 8},
        {"conf:2", 2, {0, 5}, 16},
        {"conf:2", 2, {1, 0}, 2},
        {"conf:2", 2, {1, 1}, 2},
        {"conf:2", 2, {1, 2}, 2},
        {"conf:2", 2, {1, 3}, 6},
        {"conf:2", 2, {1, 4}, 10},
        {"conf:2", 2, {2, 0}, 2},
        {"conf:2", 2, {2, 1}, 2},
        {"conf:2", 2, {2, 2}, 2},
        {"conf:2", 2, {2, 3}, 4},
        {"conf:2", 2, {3, 0}, 4},
        {"conf:2", 2, {3, 1}, 6},
        {"conf:2", 2, {3, 2}, 4},
        {"conf:2", 2, {4, 0}, 8},
        {"conf:2", 2, {4, 1}, 10},
        {"conf:2", 2, {5, 0}, 16},
        {"conf:2", 3, {0, 0}, 1},
        {"conf:2", 3, {0, 1}, 3},
        {"conf:2", 3, {0, 2}, 6},
        {"conf:2", 3, {0, 3}, 18},
        {"conf:2", 3, {0, 4}, 54},
        {"conf:2", 3, {0, 5}, 162},
        {"conf:2", 3, {1, 0}, 3},
        {"conf:2", 3, {1, 1}, 6},
        {"conf:2", 3, {1, 2}, 12},
        {"conf:2", 3, {1, 3}, 42},
        {"conf:2", 3, {1, 4}, 120},
        {"conf:2", 3, {2, 0}, 6},
        {"conf:2", 3, {2, 1}, 12},
        {"conf:2", 3, {2, 2}, 24},
        {"conf:2", 3, {2, 3}, 78},
        {"conf:2", 3, {3, 0}, 18},
        {"conf:2", 3, {3, 1}, 42},
        {"conf:2", 3, {3, 2}, 78},
        {"conf:2", 3, {4, 0}, 54},
        {"conf:2", 3, {4, 1}, 120},
        {"conf:2", 3, {5, 0}, 162},
        {"conf:3", 2, {0, 0, 0}, 1},
        {"conf:3", 2, {0, 0, 1}, 2},
        {"conf:3", 2, {0, 0, 2}, 2},
        {"conf:3", 2, {0, 0, 3}, 4},
        {"conf:3", 2, {0, 0, 4}, 8},
        {"conf:3", 2, {0, 1, 0}, 2},
        {"conf:3", 2, {0, 1, 1}, 2},
        {"conf:3", 2, {0, 1, 2}, 2},
        {"conf:3", 2, {0, 1, 3}, 6},
        {"conf:3", 2, {0, 2, 0}, 2},
        {"conf:3", 2, {0, 2, 1}, 2},
        {"conf:3", 2, {0, 2, 2}, 2},
        {"conf:3", 2, {0, 3, 0}, 4},
        {"conf:3", 2, {0, 3, 1}, 6},
        {"conf:3", 2, {0, 4, 0}, 8},
        {"conf:3", 2, {1, 0, 0}, 2},
        {"conf:3", 2, {1, 0, 1}, 2},
        {"conf:3", 2, {1, 0, 2}, 2},
        {"conf:3", 2, {1, 0, 3}, 6},
        {"conf:3", 2, {1, 1, 0}, 2},
        {"conf:3", 2, {1, 1, 1}, 0},
        {"conf:3", 2, {1, 1, 2}, 2},
        {"conf:3", 2, {1, 2, 0}, 2},
        {"conf:3", 2, {1, 2, 1}, 2},
        {"conf:3", 2, {1, 3, 0}, 6},
        {"conf:3", 2, {2, 0, 0}, 2},
        {"conf:3", 2, {2, 0, 1}, 2},
        {"conf:3", 2, {2, 0, 2}, 2},
        {"conf:3", 2, {2, 1, 0}, 2},
        {"conf:3", 2, {2, 1, 1}, 2},
        {"conf:3", 2, {2, 2, 0}, 2},
        {"conf:3", 2, {3, 0, 0}, 4},
        {"conf:3", 2, {3, 0, 1}, 6},
        {"conf:3", 2, {3, 1, 0}, 6},
        {"conf:3", 2, {4, 0, 0}, 8},
        {"conf:3", 3, {0, 0, 0}, 1},
        {"conf:3", 3, {0, 0, 1}, 3},
        {"conf:3", 3, {0, 0, 2}, 6},
        {"conf:3", 3, {0, 0, 3}, 18},
        {"conf:3", 3, {0, 0, 4}, 54},
        {"conf:3", 3, {0, 1, 0}, 3},
        {"conf:3", 3, {0, 1, 1}, 6},
        {"conf:3", 3, {0, 1, 2}, 12},
        {"conf:3", 3, {0, 1, 3}, 42},
        {"conf:3", 3, {0, 2, 0}, 6},
        {"conf:3", 3, {0, 2, 1}, 12},
        {"conf:3", 3, {0, 2, 2}, 24},
        {"conf:3", 3, {0, 3, 0}, 18},
        {"conf:3", 3, {0, 3, 1}, 42},
        {"conf:3", 3, {0, 4, 0}, 54},
        {"conf:3", 3, {1, 0, 0}, 3},
        {"conf:3", 3, {1, 0, 1}, 6},
        {"conf:3", 3, {1, 0, 2}, 12},
        {"conf:3", 3, {1, 0, 3}, 42},
        {"conf:3", 3, {1, 1, 0}, 6},
        {"conf:3", 3, {1, 1, 1}, 6},
        {"conf:3", 3, {1, 1, 2}, 18},
        {"conf:3", 3, {1, 2, 0}, 12},
        {"conf:3", 3, {1, 2, 1}, 18},
        {"conf:3", 3, {1, 3, 0}, 42},
        {"conf:3", 3, {2, 0, 0}, 6},
        {"conf:3", 3, {2, 0, 1}, 12},
        {"conf:3", 3, {2, 0, 2}, 24},
        {"conf:3", 3, {2, 1, 0}, 12},
        {"conf:3", 3, {2, 1, 1}, 18},
        {"conf:3", 3, {2, 2, 0}, 24},
        {"conf:3", 3, {3, 0, 0}, 18},
        {"conf:3", 3, {3, 0, 1}, 42},
        {"conf:3", 3, {3, 1, 0}, 42},
        {"conf:3", 3, {4, 0, 0}, 54},
        {"patterns:2", 2, {0}, 1},
        {"patterns:2", 2, {1}, 2},
        {"patterns:2", 2, {2}, 2},
        {"patterns:2", 2, {3}, 4},
        {"patterns:2", 2, {4}, 8},
        {"patterns:2", 2, {5}, 16},
        {"patterns:2", 3, {0}, 1},
        {"patterns:2", 3, {1}, 3},
        {"patterns:2", 3, {2}, 6},
        {"patterns:2", 3, {3}, 18},
        {"patterns:2", 3, {4}, 54},
        {"patterns:2", 3, {5}, 162},
        {"patterns:2,1;1,2", 2, {0, 0}, 1},
        {"patterns:2,1;1,2", 2, {0, 1}, 2},
        {"patterns:2,1;1,2", 2, {0, 2}, 4},
        {"patterns:2,1;1,2", 2, {0, 3}, 8},
        {"patterns:2,1;1,2", 2, {0, 4}, 16},
        {"patterns:2,1;1,2", 2, {0, 5}, 32},
        {"patterns:2,1;1,2", 2, {1, 0}, 2},
        {"patterns:2,1;1,2", 2, {1, 1}, 4},
        {"patterns:2,1;1,2", 2, {1, 2}, 6},
        {"patterns:2,1;1,2", 2, {1, 3}, 12},
        {"patterns:2,1;1,2", 2, {1, 4}, 24},
        {"patterns:2,1;1,2", 2, {2, 0}, 4},
        {"patterns:2,1;1,2", 2, {2, 1}, 6},
        {"patterns:2,1;1,2", 2, {2, 2}, 10},
        {"patterns:2,1;1,2", 2, {2, 3}, 20},
        {"patterns:2,1;1,2", 2, {3, 0}, 8},
        {"patterns:2,1;1,2", 2, {3, 1}, 12},
        {"patterns:2,1;1,2", 2, {3, 2}, 20},
        {"patterns:2,1;1,2", 2, {4, 0}, 16},
        {"patterns:2,1;1,2", 2, {4, 1}, 24},
        {"patterns:2,1;1,2", 2, {5, 0}, 32},
        {"patterns:2,1;1,2", 3, {0, 0}, 1},
        {"patterns:2,1;1,2", 3, {0, 1}, 3},
        {"patterns:2,1;1,2", 3, {0, 2}, 9},
        {"patterns:2,1;1,2", 3, {0, 3}, 27},
        {"patterns:2,1;1,2", 3, {0, 4}, 81},
        {"patterns:2,1;1,2", 3, {0, 5}, 243},
        {"patterns:2,1;1,2", 3, {1, 0}, 3},
        {"patterns:2,1;1,2", 3, {1, 1}, 9},
        {"patterns:2,1;1,2", 3, {1, 2}, 24},
        {"patterns:2,1;1,2", 3, {1, 3}, 72},
        {"patterns:2,1;1,2", 3, {1, 4}, 216},
        {"patterns:2,1;1,2", 3, {2, 0}, 9},
        {"patterns:2,1;1,2", 3, {2, 1}, 24},
        {"patterns:2,1;1,2", 3, {2, 2}, 66},
        {"patterns:2,1;1,2", 3, {2, 3}, 198},
        {"patterns:2,1;1,2", 3, {3, 0}, 27},
        {"patterns:2,1;1,2", 3, {3, 1}, 72},
        {"patterns:2,1;1,2", 3, {3, 2}, 198},
        {"patterns:2,1;1,2", 3, {4, 0}, 81},
        {"patterns:2,1;1,2", 3, {4, 1}, 216},
        {"patterns:2,1;1,2", 3, {5, 0}, 243},
        {"patterns:1,1", 2, {0, 0}, 1},
        {"patterns:1,1", 2, {0, 1}, 2},
        {"patterns:1,1", 2, {0, 2}, 4},
        {"patterns:1,1", 2, {0, 3}, 8},
        {"patterns:1,1", 2, {0, 4}, 16},
        {"patterns:1,1", 2, {0, 5}, 32},
        {"patterns:1,1", 2, {1, 0}, 2},
        {"patterns:1,1", 2, {1, 1}, 2},
        {"patterns:1,1", 2, {1, 2}, 4},
        {"patterns:1,1", 2, {1, 3}, 8},
        {"patterns:1,1", 2, {1, 4}, 16},
        {"patterns:1,1", 2, {2, 0}, 4},
        {"patterns:1,1", 2, {2, 1}, 4},
        {"patterns:1,1", 2, {2, 2}, 8},
        {"patterns:1,1", 2, {2, 3}, 16},
        {"patterns:1,1", 2, {3, 0}, 8},
        {"patterns:1,1", 2, {3, 1}, 8},
        {"patterns:1,1", 2, {3, 2}, 16},
        {"patterns:1,1", 2, {4, 0}, 16},
        {"patterns:1,1", 2, {4, 1}, 16},
        {"patterns:1,1", 2, {5, 0}, 32},
        {"patterns:1,1", 3, {0, 0}, 1},
        {"patterns:1,1", 3, {0, 1}, 3},
        {"patterns:1,1", 3, {0, 2}, 9},
        {"patterns:1,1", 3, {0, 3}, 27},
        {"patterns:1,1", 3, {0, 4}, 81},
        {"patterns:1,1", 3, {0, 5}, 243},
        {"patterns:1,1", 3, {1, 0}, 3},
        {"patterns:1,1", 3, {1, 1}, 6},
        {"patterns:1,1", 3, {1, 2}, 18},
        {"patterns:1,1", 3, {1, 3}, 54},
        {"patterns:1,1", 3, {1, 4}, 162},
        {"patterns:1,1", 3, {2, 0}, 9},
        {"patterns:1,1", 3, {2, 1}, 18},
        {"patterns:1,1", 3, {2, 2}, 54},
        {"patterns:1,1", 3, {2, 3}, 162},
        {"patterns:1,1", 3, {3, 0}, 27},
        {"patterns:1,1", 3, {3, 1}, 54},
        {"patterns:1,1", 3, {3, 2}, 162},
        {"patterns:1,1", 3, {4, 0}, 81},
        {"patterns:1,1", 3, {4, 1}, 162},
        {"patterns:1,1", 3, {5, 0}, 243},
    };
    return rows;
}

inline constexpr long kGl2OrderF2 = 6;
inline constexpr long kGl2OrderF3 = 48;
