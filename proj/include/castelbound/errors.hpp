// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace castelbound {

struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

struct mixed_radicals_error : error {
    using error::error;
};
struct degenerate_class_error : error {
    using error::error;
};
struct not_a_semicircle_error : error {
    using error::error;
};
struct unknown_ch3_error : error {
    using error::error;
};
struct k_out_of_range_error : error {
    using error::error;
};
struct missing_table_error : error {
    using error::error;
};
struct incomplete_map_error : error {
    using error::error;
};
struct out_of_certified_range_error : error {
    using error::error;
};
struct missing_axiom_error : error {
    using error::error;
};
struct inconsistent_series_error : error {
    using error::error;
};
struct window_too_narrow_error : error {
    using error::error;
};
struct too_large_error : error {
    using error::error;
};
struct precondition_error : error {
    using error::error;
};
struct config_error : error {
    using error::error;
};

} // namespace castelbound
