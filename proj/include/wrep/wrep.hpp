#pragma once

// Exact computational algebra for wreath-product representation rings:
// power-sum symmetric functions over class/character alphabets, the
// characteristic map, Heisenberg and Virasoro operators, and brute-force
// group-theoretic verification of their convolution realizations.

#include "wrep/charmap.hpp"
#include "wrep/cli.hpp"
#include "wrep/combinatorics.hpp"
#include "wrep/errors.hpp"
#include "wrep/group_file.hpp"
#include "wrep/groups.hpp"
#include "wrep/operators.hpp"
#include "wrep/oracle.hpp"
#include "wrep/report.hpp"
#include "wrep/scalars.hpp"
#include "wrep/symfun.hpp"
#include "wrep/verify.hpp"
#include "wrep/wreath.hpp"
