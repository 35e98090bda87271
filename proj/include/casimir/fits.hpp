#ifndef CASIMIR_FITS_HPP
#define CASIMIR_FITS_HPP

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace casimir::fits {

struct BetaSample {
    double x = 0;
    double ln_x = 0;
    double beta = 0;
    double weight = 1.0;
    double error_estimate = 0;
};

// Trial bases, four parameters each:
//   LogPoly: 1, ln x, ln^2 x, ln^3 x
//   XPoly:   1, x, x^2, x^3
//   Mixed:   1, ln x, x, x^2
enum class FitBasis { LogPoly, XPoly, Mixed };

inline const char* to_string(FitBasis b) {
    switch (b) {
        case FitBasis::LogPoly: return "logpoly";
        case FitBasis::XPoly: return "xpoly";
        default: return "mixed";
    }
}

struct FitSpec {
    FitBasis basis = FitBasis::LogPoly;
    double window_lo = 0;  // in ln x
    double window_hi = 0;
};

struct FitResult {
    FitSpec spec;
    std::array<double, 4> coefficients{};  // raw-basis convention
    double rms_in_window = 0;
    // (eval window in ln x) -> weighted RMS residual there
    std::vector<std::pair<std::array<double, 2>, double>> rms_out_window;
    double condition_indicator = 0;  // max |R_ii| / min |R_ii| of the QR factor
};

// Weighted linear least squares by Householder QR on column vectors built
// from window-centered abscissae (re-expanded to raw coefficients).
// Requires >= 5 samples in the window with >= 4 distinct ln_x values.
FitResult fit_beta(const std::vector<BetaSample>& samples, const FitSpec& spec);

double evaluate_fit(const FitResult& fit, double x);

// RMS residual of `fit` over the samples inside [lo, hi] (ln x window).
double rms_on_window(const FitResult& fit, const std::vector<BetaSample>& samples,
                     double lo, double hi);

struct CompareReport {
    // All three bases fitted on fit_window, sorted by rms_out ascending.
    std::vector<FitResult> ranked;
    std::array<double, 2> fit_window{};
    std::array<double, 2> eval_window{};
};

CompareReport compare_fits(const std::vector<BetaSample>& samples,
                           std::array<double, 2> fit_window,
                           std::array<double, 2> eval_window);

}  // namespace casimir::fits

#endif
