#ifndef QEULER_QEULER_HPP
#define QEULER_QEULER_HPP

#include "qeuler/combinatorics.hpp"
#include "qeuler/degenerate.hpp"
#include "qeuler/errors.hpp"
#include "qeuler/format.hpp"
#include "qeuler/mpoly.hpp"
#include "qeuler/padic.hpp"
#include "qeuler/qeuler_core.hpp"
#include "qeuler/qseries.hpp"
#include "qeuler/ratfunc.hpp"
#include "qeuler/rational.hpp"
#include "qeuler/serialize.hpp"
#include "qeuler/unipoly.hpp"
#include "qeuler/verify.hpp"

#endif  // QEULER_QEULER_HPP
