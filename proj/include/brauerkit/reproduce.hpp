#pragma once

#include <string>
#include <vector>

namespace brauerkit {

struct ReproRow {
    std::string name;
    std::string expected;
    std::string got;
    bool pass = false;
    bool skipped_by_order = false;
};

struct ReproResult {
    std::vector<ReproRow> rows;
    bool all_pass() const;
};

// Run every golden case of the reproduction table of known computations.
// order_override = 0
// runs each case at its intended order; a smaller override runs what it can
// and marks the rest skipped-by-order.
ReproResult reproduce_paper(int order_override = 0);

std::string render_table(const ReproResult& r);

}  // namespace brauerkit
