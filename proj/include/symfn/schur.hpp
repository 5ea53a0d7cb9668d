#pragma once

#include <string_view>

#include "symfn/abacus.hpp"
#include "symfn/errors.hpp"
#include "symfn/lattice_paths.hpp"
#include "symfn/partition.hpp"
#include "symfn/polynomial.hpp"
#include "symfn/tableau.hpp"

namespace symfn {

/// The five constructions of s_lambda(x_1..x_n).
enum class SchurMethod { bialternant, jt_h, jt_e, tableaux, abacus };

inline Polynomial schur(const Partition& lambda, int n, SchurMethod method = SchurMethod::tableaux) {
    if (n < 0) throw domain_error("variable count must be non-negative");
    switch (method) {
        case SchurMethod::bialternant: return schur_bialternant(lambda, n);
        case SchurMethod::jt_h: return jacobi_trudi_h(lambda, n);
        case SchurMethod::jt_e: return jacobi_trudi_e(lambda, n);
        case SchurMethod::tableaux: return schur_tableaux(lambda, n);
        case SchurMethod::abacus: return schur_abacus(lambda, n);
    }
    throw internal_fault("unknown Schur method");
}

inline SchurMethod parse_schur_method(std::string_view s) {
    if (s == "bialternant") return SchurMethod::bialternant;
    if (s == "jt-h") return SchurMethod::jt_h;
    if (s == "jt-e") return SchurMethod::jt_e;
    if (s == "tableaux") return SchurMethod::tableaux;
    if (s == "abacus") return SchurMethod::abacus;
    throw parse_error("unknown method '" + std::string(s) + "'");
}

}  // namespace symfn
