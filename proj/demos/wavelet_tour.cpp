// Entropies, cross terms and distances for the analytic catalog wavelets.
#include <cstdio>

#include "wit/wit.hpp"

int main() {
    std::printf("%-8s %10s %10s %10s %10s\n", "wavelet", "H_t", "H_f", "global", "cross");
    for (const auto& name : wit::analytic_names()) {
        const auto w = wit::find_wavelet(name);
        const auto t = wit::time_entropy(w);
        const auto f = wit::frequency_entropy(w);
        std::printf("%-8s %10.6f %10.6f %10.6f %10.6f\n", name.c_str(), t.value, f.value, t.value + f.value,
                    wit::cross_term(w));
    }

    // Dilation moves entropy between the two domains and keeps the sum.
    const auto mother = wit::find_wavelet("gauss1");
    for (double a : {0.5, 2.0, 4.0}) {
        const auto d = wit::daughter(mother, a, 0.0);
        std::printf("gauss1 a=%-4g H_t=%.6f H_f=%.6f\n", a, wit::time_entropy(d).value, wit::frequency_entropy(d).value);
    }

    const auto haar = wit::find_wavelet("haar");
    const auto half = wit::daughter(haar, 2.0, 0.0);
    std::printf("D1(haar, haar_2)         = %.6f bits\n", wit::kl_distance_time(haar, half).value);
    std::printf("normalized(haar, haar_2) = %.6f bits\n", wit::kl_distance_normalized(haar, half).value);
    std::printf("D2(cmor, gauss1)         = %.6f bits\n",
                wit::kl_distance_full(wit::find_wavelet("cmor"), mother).value);
}
