#include "chainmdp/enumerate.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <thread>

namespace chainmdp {

namespace {

struct Walk {
    std::size_t m, n, q, lead;
    // table[(i * q + t) * n + j] = T[t] * rows(i, j)
    std::vector<Element> table;

    const Element* entry(std::size_t i, std::size_t t) const { return table.data() + (i * q + t) * n; }

    // All messages whose last coordinate is `top`.
    std::size_t min_for_top(std::size_t top) const {
        std::vector<std::size_t> digit(m, 0);
        digit[m - 1] = top;
        RingVector acc(entry(m - 1, top), entry(m - 1, top) + n);
        std::size_t lead_nonzero = (m - 1 < lead && top != 0) ? 1 : 0;
        std::size_t best = std::numeric_limits<std::size_t>::max();
        for (;;) {
            if (lead_nonzero > 0) {
                const auto w = static_cast<std::size_t>(
                    std::count_if(acc.begin(), acc.end(), [](const Element& e) { return !e.is_zero(); }));
                best = std::min(best, w);
            }
            std::size_t i = 0;
            for (; i + 1 < m; ++i) {
                const std::size_t from = digit[i];
                const std::size_t to = (from + 1 == q) ? 0 : from + 1;
                const Element* a = entry(i, from);
                const Element* b = entry(i, to);
                for (std::size_t j = 0; j < n; ++j) acc[j] += b[j] - a[j];
                if (i < lead) {
                    if (from == 0) ++lead_nonzero;
                    if (to == 0) --lead_nonzero;
                }
                digit[i] = to;
                if (to != 0) break;
            }
            if (i + 1 >= m) return best;
        }
    }
};

}  // namespace

std::size_t min_span_weight(const RingMatrix& rows, std::size_t lead, std::uint64_t budget, unsigned threads) {
    const std::size_t m = rows.rows();
    require(m > 0 && lead > 0 && lead <= m, ErrorCode::InvalidParams, "need at least one message coordinate");
    const ChainRing& R = rows.ring();
    const std::uint64_t count = saturating_pow(R.q(), m);
    if (count > budget) {
        std::ostringstream os;
        os << "enumeration of " << R.q() << "^" << m << " messages exceeds budget " << budget;
        fail(ErrorCode::BudgetExceeded, os.str());
    }

    const auto T = R.representatives();
    Walk walk{m, rows.cols(), T.size(), lead, {}};
    walk.table.reserve(m * walk.q * walk.n);
    for (std::size_t i = 0; i < m; ++i)
        for (const auto& t : T)
            for (std::size_t j = 0; j < walk.n; ++j) walk.table.push_back(t * rows(i, j));

    const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(walk.q)));
    std::vector<std::size_t> best(workers, std::numeric_limits<std::size_t>::max());
    auto run = [&](unsigned id) {
        for (std::size_t top = id; top < walk.q; top += workers) best[id] = std::min(best[id], walk.min_for_top(top));
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned id = 0; id < workers; ++id) pool.emplace_back(run, id);
        for (auto& t : pool) t.join();
    }
    return *std::min_element(best.begin(), best.end());
}

}  // namespace chainmdp
