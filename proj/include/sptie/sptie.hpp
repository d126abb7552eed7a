#ifndef SPTIE_SPTIE_HPP
#define SPTIE_SPTIE_HPP

#include "sptie/core.hpp"
#include "sptie/elimination.hpp"
#include "sptie/errors.hpp"
#include "sptie/io.hpp"
#include "sptie/manipulation.hpp"
#include "sptie/oracle.hpp"
#include "sptie/pairwise.hpp"
#include "sptie/partition.hpp"
#include "sptie/peakedness.hpp"
#include "sptie/scoring.hpp"
#include "sptie/sweep.hpp"

#endif // SPTIE_SPTIE_HPP
