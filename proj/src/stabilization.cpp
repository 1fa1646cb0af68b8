#include <qalg/stabilization.hpp>

#include <qalg/bar.hpp>
#include <qalg/errors.hpp>

namespace qalg {

StabilizationReport stabilization_bound(const ModuleProvider& m, const ModuleProvider& n,
                                        int i_max, int q0, int q_cap, int confirm)
{
    if (confirm < 1)
        throw ValidationError("stabilization needs at least one confirmation step");

    StabilizationReport rep;
    std::map<int, int> prev;
    int run = 0;
    int last_q = -1;

    for (int q = q0; q <= q_cap; ++q) {
        ModulePtr mq = m(q);
        ModulePtr nq = n(q);
        std::map<int, int> row;
        for (int i = 0; i <= i_max; ++i)
            row[i] = ext_bar(mq, nq, i);
        rep.ext[q] = row;
        last_q = q;

        if (q > q0 && row == prev) {
            if (++run >= confirm) {
                rep.stable_q = q - confirm;
                break;
            }
        } else {
            run = 0;
        }
        prev = row;
    }
    if (run < confirm)
        throw CapReached("Ext table still moving at ceiling " + std::to_string(q_cap));

    // The tail M_{> stable_q} admits no degree-0 maps into N_{<= stable_q}:
    // Ext in internal degree 0 from the tail vanishes identically.
    ModulePtr mfull = m(last_q);
    ModulePtr ntrunc = n(rep.stable_q);
    auto tail = std::make_shared<GradedModule>(mfull->truncate(rep.stable_q + 1, last_q));
    for (int i = 0; i <= i_max; ++i)
        rep.tail_ext[i] = ext_bar(tail, ntrunc, i);

    return rep;
}

} // namespace qalg
