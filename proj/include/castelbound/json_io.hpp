// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <json.hpp>

#include "castelbound/certifier.hpp"
#include "castelbound/constants.hpp"
#include "castelbound/gvseries.hpp"
#include "castelbound/tiltwalls.hpp"

namespace castelbound::json_io {

using nlohmann::json;

json to_json(const numerics::rat& x);
numerics::rat rat_from_json(const json& j);

json to_json(const numerics::surd& x);

json to_json(const tiltwalls::chern_h& ch);
tiltwalls::chern_h chern_from_json(const json& j);

json to_json(const tiltwalls::wall_geometry& w);
json to_json(const tiltwalls::tilt_point& pt);

json to_json(const constants::constant_report& r);
json to_json(const constants::theorem_chain& c);

json to_json(const certifier::case_node& node);
json to_json(const certifier::certificate& cert);
certifier::certificate certificate_from_json(const json& j);

json to_json(const certifier::target_threefold& t);
certifier::target_threefold target_from_json(const json& j);

json to_json(const gvseries::gv_table& t);
json to_json(const gvseries::pt_table& t);

} // namespace castelbound::json_io
