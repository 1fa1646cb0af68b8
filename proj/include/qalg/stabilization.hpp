#pragma once

#include <qalg/graded_module.hpp>

#include <functional>
#include <map>

namespace qalg {

// Provider of a module truncated at ceiling q; used to re-derive the same
// input on successively longer windows.
using ModuleProvider = std::function<ModulePtr(int q)>;

struct StabilizationReport {
    int stable_q = 0; // first ceiling at which the table stops moving
    // ext[q][i] = dim Ext^i in internal degree 0, computed at ceiling q.
    std::map<int, std::map<int, int>> ext;
    // dim Ext^i(tail, N) where tail = M restricted to degrees > stable_q;
    // all zero when the truncation is honest in the probed range.
    std::map<int, int> tail_ext;
};

// Runs Ext^{i, 0}(M_{<= q}, N_{<= q}) for i = 0..i_max over increasing
// ceilings q = q0, q0+1, .. until the row repeats `confirm` times, then
// checks the complementary vanishing Ext(M_{> q}, N_{<= q}) = 0. Throws
// CapReached if no stabilization occurs by q_cap.
StabilizationReport stabilization_bound(const ModuleProvider& m, const ModuleProvider& n,
                                        int i_max, int q0, int q_cap, int confirm = 2);

} // namespace qalg
