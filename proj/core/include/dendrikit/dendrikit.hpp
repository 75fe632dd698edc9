#pragma once

#include "dendrikit/bimodule.hpp"
#include "dendrikit/deformation.hpp"
#include "dendrikit/dendriform.hpp"
#include "dendrikit/extending.hpp"
#include "dendrikit/extension.hpp"
#include "dendrikit/fixtures.hpp"
#include "dendrikit/flag.hpp"
#include "dendrikit/linalg.hpp"
#include "dendrikit/parallel.hpp"
#include "dendrikit/report.hpp"
#include "dendrikit/scalar.hpp"
#include "dendrikit/serialization.hpp"
