// Walks through a few computations: a Schur polynomial five ways, an
// insertion tableau, a Kostka expansion and an RSK pair.

#include <iostream>

#include "symfn/symfn.hpp"

using namespace symfn;

int main() {
    const Partition lambda{2, 1};
    const int n = 3;
    std::cout << "s" << lambda << " in " << n << " variables\n";
    for (auto m : {SchurMethod::bialternant, SchurMethod::jt_h, SchurMethod::jt_e, SchurMethod::tableaux,
                   SchurMethod::abacus})
        std::cout << "  " << schur(lambda, n, m) << "\n";

    const Word w = parse_word("1374433254");
    std::cout << "\nP(" << to_string(w) << "):\n" << to_string(p_tableau(w));

    std::cout << "\nh[2,2,1] in the Schur basis:\n" << to_string(h_in_s({2, 2, 1}));

    const IntMatrix A{{1, 0, 2}, {0, 1, 1}};
    const auto [P, Q] = rsk(A);
    std::cout << "\nRSK(" << to_string(A) << ")\nP:\n" << to_string(P) << "Q:\n" << to_string(Q);
    std::cout << "inverse: " << to_string(rsk_inverse(P, Q, A.rows(), A.cols())) << "\n";
}
