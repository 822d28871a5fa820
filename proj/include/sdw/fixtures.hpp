#pragma once

#include "sdw/dataset.hpp"

namespace sdw::fixtures {

// 2012 dataset of 29 Chinese regions: per-capita GRP (yuan), level of
// urbanization (percent), and the standardized regression residual, in the
// conventional (official) region order. Columns: grp, urb, resid.
const Dataset& table2_conventional();

// Same rows sorted by region name.
const Dataset& table2_alphabetical();

}  // namespace sdw::fixtures
