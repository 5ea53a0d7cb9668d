#pragma once

#include "symfn/abacus.hpp"
#include "symfn/determinant.hpp"
#include "symfn/errors.hpp"
#include "symfn/expansion.hpp"
#include "symfn/lattice_paths.hpp"
#include "symfn/littlewood_richardson.hpp"
#include "symfn/partition.hpp"
#include "symfn/plactic.hpp"
#include "symfn/polynomial.hpp"
#include "symfn/rsk.hpp"
#include "symfn/schur.hpp"
#include "symfn/tableau.hpp"
