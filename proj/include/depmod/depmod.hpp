#pragma once

#include "depmod/community.hpp"
#include "depmod/error.hpp"
#include "depmod/graph.hpp"
#include "depmod/ids.hpp"
#include "depmod/metrics.hpp"
#include "depmod/moves.hpp"
#include "depmod/null_model.hpp"
#include "depmod/rational.hpp"
#include "depmod/sdp.hpp"
#include "depmod/io/deps_format.hpp"
#include "depmod/io/dot_format.hpp"
#include "depmod/io/json_graph.hpp"
#include "depmod/io/load.hpp"
#include "depmod/io/report.hpp"
#include "depmod/io/scanner.hpp"
