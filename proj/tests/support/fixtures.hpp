#pragma once

#include <array>
#include <string>
#include <vector>

namespace fixtures {

struct TwoDimensionalType {
    int type;
    std::array<int, 3> B;
    int g;
    int cubics;
    std::string metric;
};

inline const std::vector<TwoDimensionalType>& two_dimensional_types() {
    static const std::vector<TwoDimensionalType> v{
        {1, {1, 10, 4}, 1, 2, "9 9 10 13 18 18 17 6 11 17 14 9 11 8 17"},
        {2, {1, 10, 4}, 1, 3, "8 8 8 14 15 16 14 6 9 12 12 7 8 7 13"},
        {3, {1, 10, 4}, 1, 5, "5 6 7 8 12 11 10 5 7 11 6 6 7 5 10"},
        {4, {1, 10, 4}, 2, 3, "7 5 7 12 12 12 12 5 7 10 9 7 7 5 10"},
        {5, {1, 10, 4}, 2, 4, "6 7 8 10 14 13 12 6 8 13 9 7 6 6 10"},
        {6, {1, 10, 4}, 2, 5, "7 7 7 11 14 12 12 6 7 14 10 7 6 7 11"},
        {7, {1, 10, 4}, 8, 6, "5 5 5 8 10 10 8 5 5 8 5 5 5 5 8"},
        {8, {2, 8, 5}, 1, 3, "5 5 7 10 11 10 10 5 8 10 7 6 5 4 7"},
        {9, {2, 8, 5}, 2, 4, "7 7 8 10 14 14 13 5 9 13 9 7 10 6 14"},
        {10, {2, 8, 5}, 2, 4, "5 4 5 8 9 7 8 3 6 9 6 5 5 4 7"},
        {11, {2, 8, 5}, 2, 4, "4 5 5 8 9 9 7 4 7 8 5 4 5 4 7"},
        {12, {3, 6, 6}, 12, 3, "3 3 5 6 6 6 6 3 5 6 5 3 3 3 6"},
    };
    return v;
}

struct Prime {
    std::string name;
    std::array<long, 15> d;
    std::array<int, 4> fvector;  // vertices, edges, polygons, 3-cells; primes only
};

inline const std::vector<Prime>& primes() {
    static const std::vector<Prime> v{
        {"Split15", {0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 1, 0, 1, 1}, {}},
        {"Split24", {1, 1, 0, 1, 1, 0, 1, 0, 0, 1, 0, 0, 1, 1, 0}, {}},
        {"Split33", {0, 0, 1, 1, 1, 0, 1, 1, 1, 1, 1, 1, 0, 0, 0}, {}},
        {"P1", {1, 1, 1, 1, 2, 2, 2, 2, 1, 2, 2, 1, 2, 1, 1}, {6, 9, 4, 0}},
        {"P2", {1, 1, 1, 2, 2, 2, 2, 1, 1, 2, 1, 1, 1, 1, 2}, {7, 15, 9, 0}},
        {"P3", {1, 1, 1, 2, 2, 2, 2, 1, 1, 2, 1, 1, 3, 1, 2}, {6, 10, 6, 1}},
        {"P4", {1, 1, 1, 1, 2, 1, 1, 1, 1, 1, 1, 1, 2, 1, 1}, {10, 20, 12, 1}},
        {"P5", {1, 2, 2, 2, 4, 3, 3, 3, 3, 2, 2, 2, 4, 2, 2}, {11, 20, 11, 1}},
        {"P6", {1, 1, 2, 3, 3, 2, 3, 2, 2, 3, 2, 2, 1, 1, 2}, {7, 11, 5, 0}},
        {"P7", {1, 1, 1, 2, 2, 2, 2, 1, 1, 2, 1, 1, 2, 1, 2}, {11, 20, 10, 0}},
        {"P8", {1, 2, 2, 4, 4, 3, 3, 3, 3, 4, 2, 2, 2, 2, 4}, {11, 19, 9, 0}},
        {"P9", {1, 1, 1, 2, 3, 2, 2, 1, 2, 2, 1, 2, 3, 2, 1}, {7, 12, 7, 1}},
        {"P10", {0, 1, 1, 1, 2, 1, 1, 1, 2, 2, 2, 1, 2, 1, 1}, {5, 7, 3, 0}},
        {"P11", {0, 1, 1, 2, 2, 1, 1, 2, 2, 2, 1, 1, 1, 1, 2}, {5, 7, 3, 0}},
    };
    return v;
}

/// The 21 inequalities of the Type 12 cone, as "lhs >= rhs" in pair labels
/// (a repeated label means coefficient 2).
inline const std::vector<std::pair<std::string, std::string>>& type12_inequalities() {
    static const std::vector<std::pair<std::string, std::string>> v{
        {"12 25", "15"},       {"13 36", "16"},       {"45 46", "56"},       {"25 45", "24"},
        {"36 46", "34"},       {"12 13", "23"},       {"26 34", "24 36"},    {"15 26", "16 25"},
        {"14 23", "13 24"},    {"14 56", "16 45"},    {"16 35", "15 36"},    {"24 35", "25 34"},
        {"14 23", "12 34"},    {"14 56", "15 46"},    {"26 34", "23 46"},    {"24 35", "23 45"},
        {"15 26", "12 56"},    {"16 35", "13 56"},    {"15 23 34 56", "16 24 35 35"},
        {"16 23 24 56", "15 26 26 34"},               {"15 16 24 34", "14 14 23 56"},
    };
    return v;
}

struct LabeledRay {
    std::string type;
    std::array<long, 15> r;
};

inline const std::vector<LabeledRay>& type7_rays() {
    static const std::vector<LabeledRay> v{
        {"Split24", {1, 0, 1, 1, 1, 1, 0, 0, 0, 1, 1, 1, 0, 0, 0}}, {"Split24", {1, 0, 0, 0, 1, 1, 1, 1, 0, 0, 0, 1, 0, 1, 1}},
        {"Split24", {0, 1, 1, 1, 1, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0}}, {"Split24", {0, 1, 0, 0, 1, 1, 0, 0, 1, 1, 1, 0, 0, 1, 1}},
        {"P2", {1, 1, 1, 2, 2, 2, 2, 1, 1, 2, 1, 1, 1, 1, 2}},      {"P6", {1, 2, 1, 3, 3, 3, 2, 2, 2, 3, 1, 1, 2, 2, 2}},
        {"P6", {1, 2, 2, 2, 3, 3, 3, 1, 2, 2, 2, 1, 2, 1, 3}},      {"P6", {2, 1, 1, 3, 3, 3, 3, 1, 1, 2, 2, 2, 2, 2, 2}},
        {"P6", {2, 1, 2, 2, 3, 3, 2, 2, 1, 3, 1, 2, 2, 1, 3}},      {"P7", {1, 1, 1, 2, 2, 2, 2, 1, 1, 2, 1, 1, 2, 1, 2}},
        {"P8", {2, 2, 1, 4, 4, 4, 3, 2, 2, 3, 2, 2, 3, 3, 4}},      {"P8", {2, 2, 2, 3, 4, 4, 4, 1, 2, 4, 3, 2, 3, 2, 3}},
        {"P8", {2, 2, 2, 3, 4, 4, 4, 3, 2, 4, 1, 2, 3, 2, 3}},      {"P8", {2, 2, 3, 4, 4, 4, 3, 2, 2, 3, 2, 2, 3, 1, 4}},
        {"P10", {1, 1, 1, 2, 2, 2, 0, 1, 1, 2, 1, 1, 1, 1, 2}},     {"P10", {1, 1, 1, 2, 2, 2, 2, 1, 1, 0, 1, 1, 1, 1, 2}},
        {"P10", {1, 1, 1, 0, 2, 2, 2, 1, 1, 2, 1, 1, 1, 1, 2}},     {"P10", {1, 1, 1, 2, 2, 2, 2, 1, 1, 2, 1, 1, 1, 1, 0}},
    };
    return v;
}

inline const std::vector<LabeledRay>& type338_rays() {
    static const std::vector<LabeledRay> v{
        {"Split33", {1, 1, 0, 0, 1, 0, 1, 1, 0, 1, 1, 0, 0, 1, 1}}, {"Split33", {1, 0, 1, 0, 1, 1, 0, 1, 0, 1, 0, 1, 1, 0, 1}},
        {"Split33", {0, 1, 0, 1, 1, 1, 0, 1, 1, 1, 0, 0, 1, 1, 0}}, {"Split33", {0, 0, 1, 1, 1, 0, 1, 1, 1, 1, 1, 1, 0, 0, 0}},
        {"P1", {1, 1, 1, 1, 2, 2, 2, 2, 1, 2, 2, 1, 2, 1, 1}},      {"P4", {1, 1, 1, 1, 2, 1, 1, 1, 1, 2, 1, 1, 1, 1, 1}},
        {"P5", {3, 2, 2, 2, 4, 3, 3, 3, 1, 4, 2, 2, 2, 2, 2}},      {"P5", {2, 2, 2, 1, 4, 2, 2, 3, 2, 4, 3, 2, 3, 2, 3}},
        {"P5", {1, 2, 2, 2, 4, 3, 3, 3, 3, 4, 2, 2, 2, 2, 2}},      {"P5", {2, 2, 2, 3, 4, 2, 2, 3, 2, 4, 3, 2, 3, 2, 1}},
        {"P9", {2, 2, 1, 2, 3, 2, 1, 2, 1, 3, 2, 1, 1, 2, 1}},      {"P9", {1, 2, 1, 1, 3, 1, 2, 2, 2, 3, 1, 1, 2, 2, 2}},
        {"P9", {1, 1, 2, 1, 3, 2, 1, 2, 2, 3, 2, 2, 1, 1, 2}},      {"P9", {2, 1, 2, 2, 3, 1, 2, 2, 1, 3, 1, 2, 2, 1, 1}},
        {"P11", {1, 1, 1, 1, 2, 2, 2, 2, 1, 2, 2, 1, 0, 1, 1}},     {"P11", {1, 1, 1, 1, 2, 2, 2, 2, 1, 2, 0, 1, 2, 1, 1}},
        {"P11", {1, 1, 1, 1, 2, 0, 2, 2, 1, 2, 2, 1, 2, 1, 1}},     {"P11", {1, 1, 1, 1, 2, 2, 0, 2, 1, 2, 2, 1, 2, 1, 1}},
    };
    return v;
}

/// (S, P) = (s2, s3, p1..p11).
struct SPExample {
    int type;
    std::array<int, 13> sp;
};

inline const std::vector<SPExample>& sp_examples() {
    static const std::vector<SPExample> v{
        {9, {4, 0, 0, 1, 0, 0, 0, 2, 1, 2, 0, 2, 0}},   {10, {5, 0, 0, 1, 0, 0, 0, 1, 2, 2, 0, 2, 0}},
        {11, {5, 0, 0, 1, 0, 0, 0, 2, 2, 2, 0, 2, 0}},  {337, {0, 4, 0, 0, 1, 1, 4, 0, 0, 0, 4, 0, 4}},
        {338, {0, 4, 1, 0, 0, 1, 4, 0, 0, 0, 4, 0, 4}}, {339, {0, 4, 1, 0, 1, 0, 4, 0, 0, 0, 4, 0, 4}},
    };
    return v;
}

struct NonRegular2D {
    int type;
    std::array<int, 3> B;
    int g;
    int cubics;
};

inline const std::vector<NonRegular2D>& nonregular_2d() {
    static const std::vector<NonRegular2D> v{
        {340, {0, 12, 3}, 1, 1}, {341, {0, 12, 3}, 1, 2}, {342, {0, 12, 3}, 6, 0}, {343, {1, 10, 4}, 4, 1}};
    return v;
}

struct NonRegular3D {
    int type;
    std::array<int, 4> R, B;
    std::array<int, 2> S, C;
    int g;
};

inline const std::vector<NonRegular3D>& nonregular_3d() {
    static const std::vector<NonRegular3D> v{
        {344, {4, 0, 0, 0}, {0, 8, 6, 0}, {4, 0}, {0, 0}, 4},  {345, {0, 4, 4, 0}, {0, 8, 2, 0}, {4, 0}, {0, 0}, 4},
        {346, {0, 4, 4, 0}, {2, 4, 4, 0}, {4, 0}, {4, 0}, 2},  {347, {0, 4, 4, 0}, {2, 4, 4, 0}, {4, 0}, {2, 0}, 4},
        {348, {0, 4, 4, 0}, {2, 4, 4, 0}, {4, 0}, {2, 0}, 4},  {349, {0, 4, 4, 0}, {2, 4, 4, 0}, {4, 0}, {6, 0}, 8},
        {350, {0, 3, 6, 0}, {2, 5, 2, 0}, {3, 0}, {2, 0}, 2},  {351, {0, 3, 6, 0}, {2, 5, 2, 0}, {3, 0}, {4, 0}, 2},
        {352, {0, 2, 8, 0}, {2, 6, 0, 0}, {2, 2}, {2, 0}, 4},  {353, {0, 0, 12, 0}, {6, 0, 0, 0}, {0, 4}, {6, 0}, 24},
    };
    return v;
}

inline const std::vector<std::string>& type353_quadrics() {
    static const std::vector<std::string> v{
        "12 35", "12 36", "12 45", "12 46", "12 56", "13 24", "13 26", "13 45", "13 46", "13 56",
        "14 23", "14 26", "14 35", "14 36", "14 56", "15 23", "15 24", "15 26", "15 36", "15 46",
        "23 45", "23 46", "23 56", "24 35", "24 36", "24 56", "26 35", "26 45", "35 46", "36 45"};
    return v;
}

inline const std::vector<std::string>& type353_cubics() {
    static const std::vector<std::string> v{"34 12 26", "34 15 56", "16 23 35", "16 24 45", "25 13 14", "25 36 46"};
    return v;
}

inline const std::vector<std::string>& type12_cubics() {
    static const std::vector<std::string> v{"15 26 34", "23 56 14", "16 24 35"};
    return v;
}

inline const std::vector<std::string>& type12_quadrics() {
    static const std::vector<std::string> v{
        "36 14", "25 34", "35 46", "16 45", "35 12", "26 35", "36 45", "15 36", "26 45", "12 46",
        "12 56", "25 36", "45 23", "24 13", "45 12", "34 12", "25 46", "23 46", "16 25", "13 46",
        "24 36", "35 14", "13 56", "26 14", "26 13", "15 46", "36 12", "45 13", "25 14", "25 13"};
    return v;
}

inline const std::array<int, 7> kFacetHistogram{197, 42, 63, 18, 8, 10, 1};
inline const std::array<int, 10> kRayHistogram{197, 60, 28, 19, 20, 2, 5, 2, 1, 5};

}  // namespace fixtures
