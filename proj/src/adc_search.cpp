#include "d2dsim/adc_search.hpp"

#include <string>

#include "d2dsim/errors.hpp"

namespace d2dsim {

ResolutionProfile decremental_search(int nr, int bmax, double c0, double c1, double j) {
    if (nr < 1) throw DomainError("decremental_search: nr must be >= 1");
    if (bmax < 1 || bmax > 12) throw DomainError("decremental_search: bmax must be in [1, 12]");

    auto energy = [&](const ResolutionProfile& p) { return bs_energy(p, c0, c1); };

    ResolutionProfile best = ResolutionProfile::uniform(nr, bmax, bmax);
    if (energy(best) <= j) return best;
    if (energy(ResolutionProfile::uniform(nr, 1, bmax)) > j)
        throw InfeasibleError("decremental_search: all-1-bit profile exceeds budget " +
                              std::to_string(j));

    ResolutionProfile cur = best;
    int x = bmax;
    while (x > 1) {
        cur.counts[x - 1] -= 1;
        // Highest candidate level first; candidate energy falls with the level.
        for (int i = x - 1; i >= 1; --i) {
            cur.counts[i - 1] += 1;
            if (energy(cur) <= j) return cur;
            cur.counts[i - 1] -= 1;
        }
        cur.counts[x - 2] += 1; // no candidate fits yet; park one level down
        while (x > 1 && cur.counts[x - 1] == 0) --x;
    }
    // Unreachable: the all-1-bit endpoint was verified feasible above, so the
    // walk returns from inside the loop at the latest when it reaches it.
    return cur;
}

namespace {

void enumerate_compositions(int remaining, int level, ResolutionProfile& scratch,
                            const std::function<void(const ResolutionProfile&)>& visit) {
    if (level == scratch.levels() - 1) {
        scratch.counts[level] = remaining;
        visit(scratch);
        return;
    }
    for (int c = 0; c <= remaining; ++c) {
        scratch.counts[level] = c;
        enumerate_compositions(remaining - c, level + 1, scratch, visit);
    }
}

} // namespace

ResolutionProfile exhaustive_profile_oracle(
    int nr, int bmax, double c0, double c1, double j,
    const std::function<double(const ResolutionProfile&)>& rate_eval) {
    if (nr > 10 || bmax > 4)
        throw ScaleError("exhaustive_profile_oracle: guarded to nr <= 10, bmax <= 4");
    if (nr < 1 || bmax < 1) throw DomainError("exhaustive_profile_oracle: empty instance");

    ResolutionProfile scratch;
    scratch.counts.assign(bmax, 0);
    ResolutionProfile best;
    double best_rate = 0.0;
    bool found = false;
    enumerate_compositions(nr, 0, scratch, [&](const ResolutionProfile& p) {
        if (bs_energy(p, c0, c1) > j) return;
        const double r = rate_eval(p);
        if (!found || r > best_rate) {
            found = true;
            best_rate = r;
            best = p;
        }
    });
    if (!found) throw InfeasibleError("exhaustive_profile_oracle: no profile fits the budget");
    return best;
}

} // namespace d2dsim
