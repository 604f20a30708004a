#pragma once

namespace xhopf {

/// Knobs shared by the validators. Results never depend on `jobs`: work is
/// split over index tuples and merged back in canonical order.
struct ValidationOptions {
    unsigned jobs = 1;
};

} // namespace xhopf
