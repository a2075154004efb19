/* Copyright 2026 The agequant Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include "aq/aging.hpp"

#include <stdexcept>

namespace aq {

double delay_scale(const DelayModel &model, const AgingLevel &level) {
    if (level.dvth_mv < 0.0 || level.dvth_mv > kMaxDvthMv)
        throw std::invalid_argument("delay_scale: dvth outside [0, 100] mV");
    for (double d : model.base_delay)
        if (d <= 0.0)
            throw std::invalid_argument("delay_scale: base delays must be positive");
    const double overdrive_fresh = model.vdd - model.vth0;
    const double overdrive_aged = overdrive_fresh - level.dvth_mv * 1e-3;
    if (overdrive_fresh <= 0.0 || overdrive_aged <= 0.0)
        throw std::invalid_argument("delay_scale: transistor off (overdrive <= 0)");
    return overdrive_fresh / overdrive_aged;
}

DelayTable annotate(const Netlist &netlist, const DelayModel &model, const AgingLevel &level) {
    const double scale = delay_scale(model, level);
    DelayTable table;
    table.reserve(netlist.gates.size());
    for (const Gate &g : netlist.gates)
        table.push_back(model.base(g.kind) * scale);
    return table;
}

} // namespace aq
