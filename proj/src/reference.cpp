#include "gammaflow/reference.hpp"

namespace gammaflow {

const std::map<int, std::string>& reference_expansions() {
    static const std::map<int, std::string> table = {
        {2, "0"},
        {3, "-2*T2^3"},
        {4, "-12*T2*T3^2 + 6*T2^4"},
        {5, "-20*T2*T4^2 - 30*T3^2*T4 + 120*T2^2*T3^2 - 24*T2^5"},
        {6, "-30*T2*T5^2 - 120*T3*T4*T5 + 900*T2*T3^2*T4 + 300*T2^2*T4^2 - 30*T4^3"
            " - 1200*T2^3*T3^2 + 210*T3^4 + 120*T2^6"},
        {9, "-40320*T2^9 + 1693440*T2^6*T3^2 - 5927040*T2^3*T3^4 - 6350400*T2^4*T3^2*T4"
            " - 846720*T2^5*T4^2 + 534240*T3^6 + 6894720*T2*T3^4*T4 + 9737280*T2^2*T3^2*T4^2"
            " + 846720*T2^3*T4^3 + 2540160*T2^2*T3^3*T5 + 3386880*T2^3*T3*T4*T5"
            " + 211680*T2^4*T5^2 - 1746360*T3^2*T4^3 - 448560*T2*T4^4 - 1980720*T3^3*T4*T5"
            " - 2903040*T2*T3*T4^2*T5 - 1028160*T2*T3^2*T5^2 - 423360*T2^2*T4*T5^2"
            " - 105840*T3^4*T6 - 846720*T2*T3^2*T4*T6 - 282240*T2^2*T4^2*T6"
            " - 423360*T2^2*T3*T5*T6 - 28224*T2^3*T6^2 + 157500*T4^2*T5^2 + 60480*T3*T5^3"
            " + 60480*T4^3*T6 + 259560*T3*T4*T5*T6 + 40320*T2*T5^2*T6 + 35532*T3^2*T6^2"
            " + 30240*T2*T4*T6^2 + 40320*T3*T4^2*T7 + 30240*T3^2*T5*T7 + 40320*T2*T4*T5*T7"
            " + 24192*T2*T3*T6*T7 + 2016*T2^2*T7^2 - 560*T6^3 - 2520*T5*T6*T7 - 756*T4*T7^2"
            " - 630*T5^2*T8 - 1008*T4*T6*T8 - 504*T3*T7*T8 - 72*T2*T8^2"},
    };
    return table;
}

const std::map<int, int>& reference_term_counts() {
    static const std::map<int, int> table = {
        {2, 0}, {3, 1}, {4, 2}, {5, 4}, {6, 8}, {7, 14},
        {8, 24}, {9, 42}, {10, 69}, {15, 665}, {20, 4555},
    };
    return table;
}

}
