// SPDX-License-Identifier: Apache-2.0

#ifndef VCMATCH_VCMATCH_HPP
#define VCMATCH_VCMATCH_HPP

#include "vcmatch/bit_rows.hpp"
#include "vcmatch/convolution.hpp"
#include "vcmatch/kmp_fvc.hpp"
#include "vcmatch/kmp_pvc.hpp"
#include "vcmatch/match_report.hpp"
#include "vcmatch/oracle.hpp"
#include "vcmatch/shifting_graph.hpp"
#include "vcmatch/substitution.hpp"
#include "vcmatch/symbols.hpp"

#endif  // VCMATCH_VCMATCH_HPP
