// Per-subband information of the bundled test signals and a filter ranking.
#include <cstdio>

#include "wit/wit.hpp"

int main() {
    const wit::SampledSignal x1(wit::reference_x1(), "x1");
    const wit::SampledSignal x3(wit::reference_x3(), "x3");

    for (const auto* sig : {&x1, &x3}) {
        for (int levels = 1; levels <= 3; ++levels) {
            const auto r = wit::mra_info(*sig, wit::load_filter("db2"), levels);
            std::printf("%s db2 J=%d  A %.4f", sig->name().c_str(), levels, r.approximation);
            for (int j = levels; j >= 1; --j) std::printf("  D%d %.4f", j, r.details[static_cast<std::size_t>(j - 1)]);
            std::printf("  total %.4f\n", r.total);
        }
    }

    std::vector<wit::OrthogonalFilterPair> filters;
    for (const auto& n : wit::filter_names()) filters.push_back(wit::load_filter(n));
    std::printf("\nx3, one level, most to least information:\n");
    for (const auto& e : wit::rank_wavelets(x3, filters, 1)) std::printf("  %-6s %.4f\n", e.name.c_str(), e.total);

    const auto w = wit::find_wavelet("cmor");
    const auto s = wit::cwt(x3, w, wit::recommended_grid(w, x3.size()));
    const auto d = wit::joint_density_cwt(s);
    std::printf("\nx3 cmor CWT: %zu x %zu grid, coverage %.4f, MI %.4f bits\n", s.rows(), s.cols(), d.coverage,
                wit::mutual_info_cwt(d));
}
